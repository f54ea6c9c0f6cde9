#pragma once

#include <string>
#include <utility>
#include <vector>

namespace encon {

/**
 * One verified identity: name, whether its hypotheses applied, whether it
 * held, and the two sides as strings.  Verifications return reports instead
 * of throwing so that batch runs can aggregate failures.
 */
struct CheckResult {
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::string expected;
  std::string got;
  std::string note;
};

struct Report {
  std::string subject;
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }

  void add(const std::string& name, bool pass, std::string expected = "",
           std::string got = "", std::string note = "") {
    checks.push_back({name, true, pass, std::move(expected), std::move(got), std::move(note)});
  }

  void add_info(const std::string& name, bool pass, std::string expected = "",
                std::string got = "", std::string note = "") {
    checks.push_back({name, false, pass, std::move(expected), std::move(got), std::move(note)});
  }

  bool any_applicable() const {
    for (const auto& c : checks)
      if (c.applicable) return true;
    return false;
  }

  bool any_failed() const {
    for (const auto& c : checks)
      if (c.applicable && !c.pass) return true;
    return false;
  }

  /// True when every applicable check passed (and at least one applied).
  bool all_passed() const { return any_applicable() && !any_failed(); }

  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
};

}  // namespace encon
