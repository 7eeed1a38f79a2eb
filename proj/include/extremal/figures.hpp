#pragma once

#include <string>
#include <vector>

#include "extremal/table.hpp"

namespace extremal {

/// integral-graph: energy density of the sharp bound (ell = 1) over theta for several alpha.
/// theta-graph: F(theta | alpha/(alpha-1)) / sqrt(1 - alpha) over theta.
/// lambert-bounds: both sides of the t0 majorant on [0, 8/e] and their difference.
/// ratio-graph: the end-correction ratio, dense on (0, 1e-5] and coarser up to 0.15.
const std::vector<std::string>& figure_names();

/// Throws DomainError for an unknown name.
Table figure_table(const std::string& name);

/// Alpha values used as columns in the two theta graphs.
const std::vector<double>& figure_alphas();

}  // namespace extremal
