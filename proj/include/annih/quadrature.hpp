#pragma once

#include <functional>

namespace annih {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_refinements = 20000;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
/// Panels with the largest error estimate are bisected first (ties go to the
/// leftmost panel), so results are deterministic for fixed inputs.
/// Throws convergence_failure (carrying the best estimate and error bound)
/// when the refinement budget is exhausted.
double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec = {});

} // namespace annih
