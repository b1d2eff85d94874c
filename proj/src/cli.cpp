#include "virmod/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "virmod/commands.hpp"
#include "virmod/virasoro.hpp"

namespace virmod::cli {
namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

MinimalLabel parse_label(int ell, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ContractViolation("--label expects M,N");
  try {
    return {ell, std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ContractViolation("--label expects M,N with integers, got '" + text + "'");
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

struct Outputs {
  std::string json_path;
  std::string csv_path;
};

void add_output_flags(CLI::App* sub, Outputs& o) {
  sub->add_option("--json", o.json_path, "Write a JSON report to this path");
  sub->add_option("--csv", o.csv_path, "Write a CSV report to this path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"virmod: exact checks for Virasoro minimal series in prime characteristic", "virmod"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);

  Outputs outputs;
  int ell = 0, ell_max = 0, level = 0, max_level = kDefaultProbeLevel;
  std::uint32_t prime = 0;
  std::string label_text, c_text, h_text, target;
  bool bruteforce = false, intervals = false, corrected = false;

  auto* bad = app.add_subcommand("bad-primes", "List the bad primes at level l");
  bad->add_option("--ell", ell, "Level l >= 2")->required();
  add_output_flags(bad, outputs);

  auto* cls = app.add_subcommand("classify", "Classify one prime at level l");
  cls->add_option("--ell", ell)->required();
  cls->add_option("--prime", prime)->required();
  add_output_flags(cls, outputs);

  auto* bs = app.add_subcommand("bset", "The collision set B_l");
  bs->add_option("--ell", ell)->required();
  auto* bf = bs->add_flag("--bruteforce", bruteforce, "Enumeration only");
  auto* iv = bs->add_flag("--intervals", intervals, "Interval formula only");
  bf->excludes(iv);
  add_output_flags(bs, outputs);

  auto* gs = app.add_subcommand("gset", "The complement set G_l");
  gs->add_option("--ell", ell)->required();
  gs->add_flag("--corrected", corrected, "Use the range [1, 2l^2+2l-3]");
  add_output_flags(gs, outputs);

  auto* dm = app.add_subcommand("dmatrix", "The (2l-1) x (l+1) difference table");
  dm->add_option("--ell", ell)->required();
  add_output_flags(dm, outputs);

  auto* ver = app.add_subcommand("verify", "Run one verification over a range of levels");
  ver->add_option("target", target, "prop-h | prop-x | gko | g-identity | table1")
      ->required()
      ->check(CLI::IsMember({"prop-h", "prop-x", "gko", "g-identity", "table1"}));
  auto* ver_ell = ver->add_option("--ell", ell, "Single level");
  auto* ver_max = ver->add_option("--ell-max", ell_max, "Levels 2..L");
  ver_ell->excludes(ver_max);
  add_output_flags(ver, outputs);

  auto* gr = app.add_subcommand("gram", "Gram matrix of M_{c,h} at one level");
  gr->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  gr->add_option("--c", c_text, "Central charge NUM/DEN")->required();
  gr->add_option("--h", h_text, "Highest weight NUM/DEN")->required();
  gr->add_option("--level", level)->required()->check(CLI::Range(0, 20));
  auto* gr_prime = gr->add_option("--prime", prime, "Work over F_p");
  add_output_flags(gr, outputs);

  auto* pr = app.add_subcommand("probe", "Compare Gram ranks over Q and F_p for a minimal-series weight");
  pr->add_option("--ell", ell)->required();
  pr->add_option("--label", label_text, "M,N")->required();
  pr->add_option("--prime", prime)->required();
  pr->add_option("--max-level", max_level)->check(CLI::Range(0, 20));
  add_output_flags(pr, outputs);

  auto* rep = app.add_subcommand("reproduce-paper", "Run the full reference fixture suite");
  add_output_flags(rep, outputs);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  ReportEnvelope report;
  try {
    if (bad->parsed()) {
      report = commands::bad_primes(ell);
    } else if (cls->parsed()) {
      report = commands::classify(ell, prime);
    } else if (bs->parsed()) {
      auto mode = bruteforce ? commands::BSetMode::BruteForce
                             : (intervals ? commands::BSetMode::Intervals : commands::BSetMode::Both);
      report = commands::bset(ell, mode);
    } else if (gs->parsed()) {
      report = commands::gset(ell, corrected);
    } else if (dm->parsed()) {
      report = commands::dmatrix(ell);
    } else if (ver->parsed()) {
      using commands::VerifyTarget;
      const VerifyTarget t = target == "prop-h"   ? VerifyTarget::PropH
                             : target == "prop-x" ? VerifyTarget::PropX
                             : target == "gko"    ? VerifyTarget::Gko
                             : target == "g-identity" ? VerifyTarget::GIdentity
                                                      : VerifyTarget::Table1;
      int lo = 2, hi = 20;
      if (ver_ell->count() > 0) lo = hi = ell;
      else if (ver_max->count() > 0) hi = ell_max;
      report = commands::verify(t, lo, hi);
    } else if (gr->parsed()) {
      std::optional<std::uint32_t> p;
      if (gr_prime->count() > 0) p = prime;
      report = commands::gram(BigRational::parse(c_text), BigRational::parse(h_text), level, p);
    } else if (pr->parsed()) {
      report = commands::probe(parse_label(ell, label_text), prime, max_level);
    } else if (rep->parsed()) {
      report = commands::reproduce();
    }
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  out << report.table_text();
  try {
    if (!outputs.json_path.empty()) write_file(outputs.json_path, report.json_text());
    if (!outputs.csv_path.empty()) write_file(outputs.csv_path, report.csv_text());
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return report.passed() ? kExitPass : kExitFail;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace virmod::cli
