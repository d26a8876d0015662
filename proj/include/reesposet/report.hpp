#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace reesposet {

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

/// Named list of checks. A report with a skip reason carries no checks and
/// counts as passing.
struct Report {
  std::string title;
  std::vector<Check> checks;
  std::string skipped;

  template <class T>
  static std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

  void add(std::string name, bool passed, std::string expected = {}, std::string actual = {}) {
    checks.push_back({std::move(name), passed, std::move(expected), std::move(actual)});
  }

  template <class A, class B>
  bool expect_eq(std::string name, const A& expected, const B& actual) {
    const bool ok = expected == actual;
    add(std::move(name), ok, show(expected), show(actual));
    return ok;
  }

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }

  void merge(const Report& other) {
    for (const auto& c : other.checks)
      checks.push_back({other.title.empty() ? c.name : other.title + ": " + c.name, c.passed,
                        c.expected, c.actual});
  }

  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
  nlohmann::json out{{"title", r.title}, {"passed", r.ok()}, {"checks", checks}};
  if (!r.skipped.empty()) out["skipped"] = r.skipped;
  return out;
}

inline std::string report_to_text(const Report& r, bool failures_only = false) {
  std::ostringstream os;
  os << r.title << ": " << (r.ok() ? "pass" : "FAIL");
  if (!r.skipped.empty()) os << " (skipped: " << r.skipped << ")";
  os << " [" << r.checks.size() - r.failures() << "/" << r.checks.size() << "]\n";
  for (const auto& c : r.checks) {
    if (failures_only && c.passed) continue;
    os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.passed || !c.actual.empty()) {
      if (c.expected == c.actual)
        os << " = " << c.actual;
      else
        os << ": expected " << c.expected << ", got " << c.actual;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace reesposet
