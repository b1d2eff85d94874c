#include "virmod/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace virmod {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "info";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "info") return Status::Info;
  throw std::invalid_argument("unknown status '" + s + "'");
}

namespace {

struct NoteEntry {
  NoteId id;
  const char* key;
  const char* text;
};

constexpr std::array<NoteEntry, 6> kNotes{{
    {NoteId::NonPrimeNine, "ell3-nonprime-nine",
     "The reference bad-prime list for l=3 reads {2, 3, 7, 9, 13, 17}; 9 is not prime. "
     "The classifier ranges over primes only and reports {2, 3, 7, 13, 17}."},
    {NoteId::GRange, "g-range",
     "G_l is defined on [1, 2l^2+l-3], but the block union G_l(0) ∪ ... ∪ G_l(l-1) reaches "
     "2l^2+2l-3. The identity holds exactly on [1, 2l^2+2l-3]; both ranges are reported."},
    {NoteId::PrimeTwo, "p2-convention",
     "Weights are taken in characteristic > 2, yet 2 is listed as bad for every l; "
     "p = 2 is classified Bad by convention."},
    {NoteId::DegenerateWeights, "degenerate-weights",
     "Weights whose reduced denominator is divisible by p have no image in F_p; they are "
     "listed as degenerate and excluded from the collision test."},
    {NoteId::IntegralForm, "integral-form-proxy",
     "No integral form is fixed for reducing minimal-series modules mod p; the probe compares "
     "graded Gram ranks of the mod-p Verma module with characteristic 0 as a proxy."},
    {NoteId::CosetGrading, "coset-grading",
     "Coset depths use the standard Sugawara weights n(n+2)/(4(k+2)); they check the "
     "bookkeeping of the decomposition over C, not its validity over F_p."},
}};

const NoteEntry& entry(NoteId id) {
  for (const auto& e : kNotes)
    if (e.id == id) return e;
  throw std::logic_error("unknown note id");
}

}  // namespace

std::string note_key(NoteId id) { return entry(id).key; }
std::string note_text(NoteId id) { return entry(id).text; }

NoteId note_from_key(const std::string& key) {
  for (const auto& e : kNotes)
    if (key == e.key) return e.id;
  throw std::invalid_argument("unknown note '" + key + "'");
}

CheckResult& ReportEnvelope::add(std::string name, Status status, std::string detail, nlohmann::json data) {
  results.push_back({std::move(name), status, std::move(detail), std::move(data)});
  return results.back();
}

void ReportEnvelope::add_note(NoteId id) {
  if (std::find(notes.begin(), notes.end(), id) == notes.end()) {
    notes.push_back(id);
    std::sort(notes.begin(), notes.end());
  }
}

bool ReportEnvelope::passed() const {
  return std::none_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return r.status == Status::Fail; });
}

nlohmann::json ReportEnvelope::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["version"] = version;
  j["passed"] = passed();
  auto& rs = j["results"] = nlohmann::json::array();
  for (const auto& r : results)
    rs.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}, {"data", r.data}});
  auto& ns = j["notes"] = nlohmann::json::array();
  for (auto id : notes) ns.push_back({{"id", note_key(id)}, {"status", "info"}, {"text", note_text(id)}});
  return j;
}

ReportEnvelope ReportEnvelope::from_json(const nlohmann::json& j) {
  ReportEnvelope e;
  e.command = j.at("command").get<std::string>();
  e.parameters = j.at("parameters");
  e.version = j.at("version").get<std::string>();
  for (const auto& r : j.at("results"))
    e.results.push_back({r.at("name").get<std::string>(), status_from_string(r.at("status").get<std::string>()),
                         r.at("detail").get<std::string>(), r.at("data")});
  for (const auto& n : j.at("notes")) e.add_note(note_from_key(n.at("id").get<std::string>()));
  return e;
}

std::string ReportEnvelope::json_text() const { return to_json().dump(2) + "\n"; }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string ReportEnvelope::csv_text() const {
  std::string out = "check,status,detail\r\n";
  for (const auto& r : results)
    out += csv_escape(r.name) + "," + to_string(r.status) + "," + csv_escape(r.detail) + "\r\n";
  for (auto id : notes) out += csv_escape("note:" + note_key(id)) + ",info," + csv_escape(note_text(id)) + "\r\n";
  return out;
}

namespace {

// Display width in code points; the tables only ever carry UTF-8 symbols.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++w;
  return w;
}

}  // namespace

std::string ReportEnvelope::table_text() const {
  std::size_t name_w = 5;
  for (const auto& r : results) name_w = std::max(name_w, display_width(r.name));
  std::ostringstream os;
  os << "virmod " << command << "\n";
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, display_width(s)), ' '); };
  os << pad("check", name_w) << "  " << pad("status", 6) << "  detail\n";
  os << std::string(name_w, '-') << "  " << std::string(6, '-') << "  " << std::string(6, '-') << "\n";
  for (const auto& r : results) {
    // Multi-line details continue under the detail column.
    std::istringstream lines(r.detail);
    std::string line;
    bool first = true;
    while (std::getline(lines, line) || first) {
      if (first)
        os << pad(r.name, name_w) << "  " << pad(to_string(r.status), 6) << "  " << line << "\n";
      else
        os << std::string(name_w + 10, ' ') << line << "\n";
      first = false;
    }
  }
  for (auto id : notes) os << "note [" << note_key(id) << "] " << note_text(id) << "\n";
  os << (passed() ? "RESULT: pass" : "RESULT: FAIL") << "\n";
  return os.str();
}

}  // namespace virmod
