#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace virmod {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { Pass, Fail, Info };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  Status status = Status::Info;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

/// Fixed catalogue of known gaps between the reference statements and what
/// the implementation can check literally.
enum class NoteId {
  NonPrimeNine,
  GRange,
  PrimeTwo,
  DegenerateWeights,
  IntegralForm,
  CosetGrading,
};

std::string note_key(NoteId id);
std::string note_text(NoteId id);
NoteId note_from_key(const std::string& key);

struct ReportEnvelope {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::string version = kToolVersion;
  std::vector<CheckResult> results;
  std::vector<NoteId> notes;  // sorted, unique after add_note

  CheckResult& add(std::string name, Status status, std::string detail,
                   nlohmann::json data = nlohmann::json::object());
  void add_note(NoteId id);
  bool passed() const;

  nlohmann::json to_json() const;
  static ReportEnvelope from_json(const nlohmann::json& j);

  /// Two-space indented JSON with sorted keys and a trailing newline.
  std::string json_text() const;
  /// Header row "check,status,detail", one row per result, RFC 4180 quoting.
  std::string csv_text() const;
  /// Aligned human-readable table plus notes.
  std::string table_text() const;
};

std::string csv_escape(const std::string& field);

}  // namespace virmod
