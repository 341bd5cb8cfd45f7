#pragma once

#include "annih/bell.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace annih {

enum class Objective { MaximizeS, MinimizeS };

enum class ViolationSide { Above, Below };

struct SearchConfig {
    int grid_points_per_angle = 24;
    int refine_iterations = 200;
    double refine_initial_step = 5.0 * 3.14159265358979323846 / 180.0;
    Objective objective = Objective::MinimizeS;
};

struct SearchResult {
    AngleQuad best_quad;
    double best_s;
    double beta;
    std::vector<std::pair<int, double>> trace; // improvements only: monotone
};

/// Exhaustive evaluation of S over the angle grid [0, pi)^4 (all probabilities
/// are pi-periodic in each analyzer angle). Ties break to the lexicographically
/// smallest quad; deterministic.
SearchResult grid_search(Process process, double beta, const SearchConfig& cfg);

/// Axis-aligned pattern search from a starting quad: try +-step on each
/// coordinate, keep the best improvement, halve the step when none exists,
/// stop below 1e-7 rad or at the iteration budget. Never worse than start.
SearchResult refine(Process process, double beta, const AngleQuad& start,
                    const SearchConfig& cfg);

/// Largest beta at which the quad still violates the LHV bound on the given
/// side, found by bisection to 1e-6. Empty when even beta = 0 does not violate.
std::optional<double> violation_frontier(Process process, const AngleQuad& q,
                                         ViolationSide side);

} // namespace annih
