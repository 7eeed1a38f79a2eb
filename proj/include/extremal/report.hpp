#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// A named lower or upper bound with everything needed to explain it:
/// inputs, sub-terms, hypothesis checks, and optionally a comparison against
/// a computed energy. Entries keep insertion order so output is stable.
struct BoundReport {
  std::string name;
  double value = 0.0;
  bool applicable = true;
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<std::pair<std::string, double>> terms;
  std::vector<Hypothesis> hypotheses;
  std::optional<double> compared_energy;
  std::optional<double> slack;  // compared_energy - value for lower bounds

  void add_hypothesis(std::string hname, bool holds, std::string detail = {}) {
    applicable = applicable && holds;
    hypotheses.push_back({std::move(hname), holds, std::move(detail)});
  }
  double term(const std::string& key) const;
  double input(const std::string& key) const;
};

}  // namespace extremal
