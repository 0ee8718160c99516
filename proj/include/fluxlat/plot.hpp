#pragma once

#include <string>
#include <vector>

#include "fluxlat/sweep.hpp"

namespace fluxlat {

/// Render a sweep result as standalone SVG files under dir, named
/// <prefix>_<metric>.svg. Line charts put the innermost axis on x with one
/// series per outer grid level; leakage maps become one bucket-shaded
/// heatmap per source state. Metrics with no finite data are skipped with a
/// stderr note. Returns the paths written.
std::vector<std::string> emit_plots(const SweepResult& r, const std::string& dir,
                                    const std::string& prefix);

}  // namespace fluxlat
