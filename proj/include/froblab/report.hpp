#pragma once

#include <string>
#include <vector>

namespace froblab {

/// Outcome of one verified law. When the law fails, `counterexamples` lists
/// every offending basis instance by name so failures are reproducible.
struct CheckResult {
  std::string name;  // stable machine id, e.g. "assoc"
  std::string law;   // human-readable statement, e.g. "(x*y)*z = x*(y*z)"
  bool pass = true;
  std::vector<std::string> counterexamples;
};

struct Report {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  CheckResult& start(const std::string& name, const std::string& law) {
    checks.push_back(CheckResult{name, law, true, {}});
    return checks.back();
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  /// Prefix every check name, e.g. merging a sub-object's report.
  void append_prefixed(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
      c.name = prefix + "." + c.name;
      checks.push_back(std::move(c));
    }
  }

  std::string summary() const {
    std::string s;
    for (const auto& c : checks) {
      s += c.name;
      s += c.pass ? ": ok" : ": FAIL";
      if (!c.pass && !c.counterexamples.empty()) s += " at " + c.counterexamples.front();
      s += "\n";
    }
    return s;
  }
};

inline void record(CheckResult& c, bool pass, const std::string& instance) {
  if (!pass) {
    c.pass = false;
    c.counterexamples.push_back(instance);
  }
}

}  // namespace froblab
