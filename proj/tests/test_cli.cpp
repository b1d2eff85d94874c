#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "virmod/cli.hpp"
#include "virmod/commands.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = virmod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("virmod_test_" + name);
}

}  // namespace

TEST_CASE("bad-primes prints the list") {
  const auto r = run({"bad-primes", "--ell", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{2, 7}") != std::string::npos);
  CHECK(r.out.find("p2-convention") != std::string::npos);
}

TEST_CASE("bad-primes at l=3 carries the non-prime note") {
  const auto path = temp_path("bad3.json");
  const auto r = run({"bad-primes", "--ell", "3", "--json", path.string()});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  bool found = false;
  for (const auto& n : j.at("notes"))
    if (n.at("id") == "ell3-nonprime-nine") {
      found = true;
      CHECK(n.at("status") == "info");
    }
  CHECK(found);
  CHECK(j.at("results").at(0).at("data").at("bad_primes") == nlohmann::json::array({2, 3, 7, 13, 17}));
  std::filesystem::remove(path);
}

TEST_CASE("verify prop-x") {
  const auto r = run({"verify", "prop-x", "--ell-max", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("RESULT: pass") != std::string::npos);
}

TEST_CASE("probe with undefined weight reports DegenerateParams as info") {
  const auto path = temp_path("probe.json");
  const auto r = run({"probe", "--ell", "3", "--label", "2,2", "--prime", "5", "--max-level", "6", "--json",
                      path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("DegenerateParams") != std::string::npos);
  const auto j = nlohmann::json::parse(slurp(path));
  for (const auto& res : j.at("results")) CHECK(res.at("status") != "fail");
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"bad-primes"}).code == 2);
  CHECK(run({"bad-primes", "--ell", "2", "--bogus"}).code == 2);
  CHECK(run({"bad-primes", "--ell", "1"}).code == 2);
  CHECK(run({"classify", "--ell", "3", "--prime", "9"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "gko", "--ell", "3", "--ell-max", "5"}).code == 2);
  CHECK(run({"gram", "--c", "1/0", "--h", "0", "--level", "2"}).code == 2);
  CHECK(run({"probe", "--ell", "2", "--label", "x", "--prime", "11"}).code == 2);
  CHECK(run({"bset", "--ell", "3", "--bruteforce", "--intervals"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("other subcommands") {
  CHECK(run({"classify", "--ell", "2", "--prime", "7"}).out.find("bad") != std::string::npos);
  auto b = run({"bset", "--ell", "2"});
  CHECK(b.code == 0);
  CHECK(b.out.find("[1,4] ∪ [6,7] ∪ [10,10]") != std::string::npos);
  CHECK(run({"bset", "--ell", "3", "--intervals"}).out.find("[22,22]") != std::string::npos);

  auto g = run({"gset", "--ell", "2"});
  CHECK(g.code == 0);  // range mismatch is a documented note, not a failure
  CHECK(g.out.find("g-range") != std::string::npos);
  CHECK(run({"gset", "--ell", "2", "--corrected"}).out.find("[5,5] ∪ [8,9]") != std::string::npos);

  CHECK(run({"dmatrix", "--ell", "5"}).code == 0);
  for (const char* t : {"prop-h", "gko", "g-identity", "table1"}) CHECK(run({"verify", t, "--ell", "4"}).code == 0);

  auto gr = run({"gram", "--c", "1/2", "--h", "1/16", "--level", "2"});
  CHECK(gr.code == 0);
  CHECK(gr.out.find("1 of 2") != std::string::npos);
  auto grp = run({"gram", "--c", "1/2", "--h", "1/16", "--level", "3", "--prime", "7"});
  CHECK(grp.code == 0);
  CHECK(grp.out.find("F_7") != std::string::npos);
  CHECK(run({"gram", "--c", "1/2", "--h", "1/16", "--level", "2", "--prime", "2"}).code == 2);
}

TEST_CASE("csv output") {
  const auto path = temp_path("bad.csv");
  CHECK(run({"bad-primes", "--ell", "2", "--csv", path.string()}).code == 0);
  const auto text = slurp(path);
  CHECK(text.rfind("check,status,detail\r\n", 0) == 0);
  CHECK(text.find("\"{2, 7}\"") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(virmod::csv_escape("a\"b") == "\"a\"\"b\"");
  CHECK(virmod::csv_escape("plain") == "plain");
}

TEST_CASE("JSON reports round-trip byte for byte") {
  for (const auto& report : {virmod::commands::bad_primes(4), virmod::commands::classify(3, 5),
                             virmod::commands::gset(3, false), virmod::commands::probe({2, 2, 2}, 13, 4),
                             virmod::commands::gram(virmod::BigRational(7, 10), virmod::BigRational(3, 80), 3,
                                                    std::nullopt)}) {
    const auto text = report.json_text();
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
    CHECK(virmod::ReportEnvelope::from_json(parsed).json_text() == text);
  }
}

TEST_CASE("rationals serialize as num/den strings") {
  const auto j = virmod::commands::gram(virmod::BigRational(1, 2), virmod::BigRational(0), 1, std::nullopt).to_json();
  CHECK(j.at("parameters").at("c") == "1/2");
  CHECK(j.at("parameters").at("h") == "0/1");
}
