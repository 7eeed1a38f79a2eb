#include "extremal/report.hpp"

#include <stdexcept>

namespace extremal {

namespace {

double lookup(const std::vector<std::pair<std::string, double>>& entries, const std::string& key) {
  for (const auto& [k, v] : entries) {
    if (k == key) return v;
  }
  throw std::out_of_range("BoundReport: no entry named " + key);
}

}  // namespace

double BoundReport::term(const std::string& key) const { return lookup(terms, key); }
double BoundReport::input(const std::string& key) const { return lookup(inputs, key); }

}  // namespace extremal
