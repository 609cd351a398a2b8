#pragma once

#include <deque>
#include <string>
#include <vector>

namespace gtl {

/// Outcome of one named check inside a verification run.
struct Check {
  std::string name;
  bool decisive = true;  // informational checks do not change the verdict
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool holds() const { return failures.empty(); }
};

struct Report {
  std::string property;
  std::string graph;
  int bound = 0;
  std::deque<Check> checks;  // add() hands out references that must stay valid

  Check& add(std::string name, bool decisive = true) {
    checks.push_back(Check{std::move(name), decisive, {}, {}});
    return checks.back();
  }

  bool holds() const {
    for (const auto& c : checks)
      if (c.decisive && !c.holds()) return false;
    return true;
  }

  std::string witness() const {
    for (const auto& c : checks)
      if (c.decisive && !c.holds()) return c.failures.front();
    return {};
  }

  std::string render() const {
    std::string s = "# property " + property + "\n# graph " + graph + "\n# bound " + std::to_string(bound) + "\n";
    s += holds() ? "HOLDS\n" : "FAILS witness=" + witness() + "\n";
    bool single = checks.size() == 1;
    for (const auto& c : checks) {
      if (!single) s += "check " + c.name + (c.holds() ? " HOLDS" : " FAILS") + (c.decisive ? "" : " (informational)") + "\n";
      for (const auto& n : c.notes) s += "note " + (single ? "" : c.name + " ") + n + "\n";
      for (const auto& f : c.failures) s += "failure " + (single ? "" : c.name + " ") + f + "\n";
    }
    return s;
  }

  std::string render_tsv() const {
    std::string s = "check\tstatus\twitness\n";
    for (const auto& c : checks) {
      if (c.holds()) s += c.name + "\tHOLDS\t-\n";
      for (const auto& f : c.failures) s += c.name + "\tFAILS\t" + f + "\n";
    }
    return s;
  }
};

}  // namespace gtl
