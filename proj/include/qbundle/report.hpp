#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qbundle {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

struct CheckResult {
  std::string id;
  std::string description;
  std::string anchor;
  Status status = Status::Pass;
  /// Nonzero residue or other evidence; always set on failure.
  std::string witness;
  /// Free-form detail kept in the report (e.g. which variant passed).
  std::string note;
  double ms = 0;
};

/// Outcome of a check body: pass/fail plus the evidence.
struct Verdict {
  Status status = Status::Pass;
  std::string witness;
  std::string note;

  static Verdict pass(std::string note = "") { return {Status::Pass, "", std::move(note)}; }
  static Verdict fail(std::string witness, std::string note = "") {
    return {Status::Fail, std::move(witness), std::move(note)};
  }
  static Verdict skip(std::string note) { return {Status::Skipped, "", std::move(note)}; }
};

struct Report {
  using Param = std::variant<long, std::string>;

  std::string suite;
  std::map<std::string, Param> parameters;
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
  const CheckResult* find(const std::string& id) const;
  void append(const Report& other);

  /// Byte-stable JSON; wall times are only included on request.
  std::string to_json(bool timings = false) const;
  std::string to_text() const;
};

struct CheckSpec {
  std::string id;
  std::string description;
  std::string anchor;
  std::function<Verdict()> body;
};

/// Runs the checks (up to `jobs` at a time), converts engine errors into
/// failures (or skips for uncertified degrees) and sorts results by id.
Report run_checks(const std::string& suite, std::vector<CheckSpec> checks, unsigned jobs = 1);

}  // namespace qbundle
