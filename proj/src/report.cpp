#include "qbundle/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qbundle/error.hpp"

namespace qbundle {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const auto& c) { return c.status == s; }));
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

std::string Report::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) {
    if (std::holds_alternative<long>(v)) {
      j["parameters"][k] = std::get<long>(v);
    } else {
      j["parameters"][k] = std::get<std::string>(v);
    }
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["description"] = c.description;
    e["anchor"] = c.anchor;
    e["status"] = to_string(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.note.empty()) e["note"] = c.note;
    if (timings) e["ms"] = static_cast<long>(c.ms);
    j["checks"].push_back(e);
  }
  j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skipped", count(Status::Skipped)}};
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "\n";
  for (const auto& [k, v] : parameters) {
    out << "  " << k << " = ";
    std::visit([&](const auto& x) { out << x; }, v);
    out << "\n";
  }
  for (const auto& c : checks) {
    out << (c.status == Status::Pass ? "PASS " : c.status == Status::Fail ? "FAIL " : "SKIP ") << c.id << "  "
        << c.description << "\n";
    if (!c.note.empty()) out << "     note: " << c.note << "\n";
    if (!c.witness.empty()) out << "     witness: " << c.witness << "\n";
  }
  out << "pass " << count(Status::Pass) << ", fail " << count(Status::Fail) << ", skipped "
      << count(Status::Skipped) << "\n";
  return out.str();
}

namespace {

CheckResult run_one(const CheckSpec& spec) {
  CheckResult r{spec.id, spec.description, spec.anchor, Status::Pass, "", "", 0};
  auto start = std::chrono::steady_clock::now();
  try {
    Verdict v = spec.body();
    r.status = v.status;
    r.witness = std::move(v.witness);
    r.note = std::move(v.note);
    if (r.status == Status::Fail && r.witness.empty()) r.witness = "(no witness)";
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegreeBoundExceeded) {
      r.status = Status::Skipped;
      r.note = e.what();
    } else {
      r.status = Status::Fail;
      r.witness = e.what();
    }
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.witness = std::string("internal error: ") + e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

Report run_checks(const std::string& suite, std::vector<CheckSpec> checks, unsigned jobs) {
  Report report;
  report.suite = suite;
  report.checks.resize(checks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) report.checks[i] = run_one(checks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) report.checks[i] = run_one(checks[i]);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return report;
}

}  // namespace qbundle
