#include "annih/search.hpp"

#include "annih/error.hpp"

#include <cmath>
#include <numbers>

namespace annih {

namespace {

bool improves(Objective obj, double candidate, double incumbent) {
    return obj == Objective::MinimizeS ? candidate < incumbent : candidate > incumbent;
}

void check_config(const SearchConfig& cfg) {
    if (cfg.grid_points_per_angle < 4)
        throw invalid_input("grid_points_per_angle must be >= 4");
    if (!(cfg.refine_initial_step > 0.0))
        throw invalid_input("refine_initial_step must be positive");
}

} // namespace

SearchResult grid_search(Process process, double beta, const SearchConfig& cfg) {
    check_config(cfg);
    const int n = cfg.grid_points_per_angle;
    const double step = std::numbers::pi / n;
    SearchResult res;
    res.beta = beta;
    res.best_quad = {0, 0, 0, 0};
    res.best_s = s_statistic(process, beta, res.best_quad).s;
    res.trace.push_back({0, res.best_s});
    int iter = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    ++iter;
                    const AngleQuad q{i * step, j * step, k * step, l * step};
                    const double s = s_statistic(process, beta, q).s;
                    if (improves(cfg.objective, s, res.best_s)) {
                        res.best_s = s;
                        res.best_quad = q;
                        res.trace.push_back({iter, s});
                    }
                }
    return res;
}

SearchResult refine(Process process, double beta, const AngleQuad& start,
                    const SearchConfig& cfg) {
    check_config(cfg);
    SearchResult res;
    res.beta = beta;
    res.best_quad = start;
    res.best_s = s_statistic(process, beta, start).s;
    res.trace.push_back({0, res.best_s});

    double step = cfg.refine_initial_step;
    for (int it = 1; it <= cfg.refine_iterations && step >= 1e-7; ++it) {
        AngleQuad best = res.best_quad;
        double best_s = res.best_s;
        const AngleQuad base = res.best_quad;
        for (int c = 0; c < 4; ++c)
            for (double sgn : {+1.0, -1.0}) {
                AngleQuad q = base;
                double* coord[4] = {&q.chi1, &q.chi2, &q.chi1p, &q.chi2p};
                *coord[c] += sgn * step;
                const double s = s_statistic(process, beta, q).s;
                if (improves(cfg.objective, s, best_s)) {
                    best_s = s;
                    best = q;
                }
            }
        if (improves(cfg.objective, best_s, res.best_s)) {
            res.best_s = best_s;
            res.best_quad = best;
            res.trace.push_back({it, best_s});
        } else {
            step *= 0.5;
        }
    }
    return res;
}

std::optional<double> violation_frontier(Process process, const AngleQuad& q,
                                         ViolationSide side) {
    const Verdict target =
        side == ViolationSide::Above ? Verdict::ViolatesAbove : Verdict::ViolatesBelow;
    auto violates = [&](double beta) {
        return s_statistic(process, beta, q).verdict == target;
    };
    if (!violates(0.0)) return std::nullopt;
    if (violates(1.0)) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (violates(mid) ? lo : hi) = mid;
    }
    return lo;
}

} // namespace annih
