#include "noisedom/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace noisedom {

namespace {

// classify a sampled gap function; points must be sorted left to right
DominanceVerdict classify(const std::vector<double>& points, const std::vector<double>& gaps,
                          double tol, Relation strict_relation) {
    DominanceVerdict v;
    double worst = std::numeric_limits<double>::infinity();
    double best = -std::numeric_limits<double>::infinity();
    double worst_at = 0.0;
    bool witness_found = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (gaps[i] < worst) {
            worst = gaps[i];
            worst_at = points[i];
        }
        best = std::max(best, gaps[i]);
        if (!witness_found && gaps[i] > tol) {
            v.witness_point = points[i];
            witness_found = true;
        }
    }
    v.worst_violation = worst;
    if (std::max(std::fabs(worst), std::fabs(best)) <= tol) {
        v.relation = Relation::equal_distribution;
        v.witness_point = 0.0;
    } else if (worst >= -tol && witness_found) {
        v.relation = strict_relation;
    } else {
        v.relation = Relation::none;
        v.witness_point = witness_found ? v.witness_point : worst_at;
    }
    return v;
}

std::vector<double> step_eval_points(const StepFunction& fx, const StepFunction& fy) {
    std::vector<double> pts;
    const auto& bx = fx.breakpoints();
    const auto& by = fy.breakpoints();
    pts.reserve(bx.size() + by.size());
    std::merge(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(pts));
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return {0.0};
    // breakpoints plus midpoints plus an outer point on each side cover
    // every interval of constancy
    std::vector<double> out;
    out.reserve(2 * pts.size() + 1);
    out.push_back(pts.front() - 1.0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out.push_back(pts[i]);
        if (i + 1 < pts.size()) out.push_back(0.5 * (pts[i] + pts[i + 1]));
    }
    out.push_back(pts.back() + 1.0);
    return out;
}

std::vector<double> merged_knots(const PiecewiseLinear& fx, const PiecewiseLinear& fy) {
    const auto& kx = fx.knots();
    const auto& ky = fy.knots();
    std::vector<double> pts;
    pts.reserve(kx.size() + ky.size());
    std::merge(kx.begin(), kx.end(), ky.begin(), ky.end(), std::back_inserter(pts));
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

std::string to_string(Relation r) {
    switch (r) {
        case Relation::first_strict: return "FIRST_STRICT";
        case Relation::second_strict: return "SECOND_STRICT";
        case Relation::equal_distribution: return "EQUAL_DISTRIBUTION";
        case Relation::none: break;
    }
    return "NONE";
}

DominanceVerdict check_fosd(const StepFunction& fx, const StepFunction& fy, double tol) {
    const std::vector<double> pts = step_eval_points(fx, fy);
    std::vector<double> gaps(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) gaps[i] = fy(pts[i]) - fx(pts[i]);
    return classify(pts, gaps, tol, Relation::first_strict);
}

DominanceVerdict check_fosd(const PiecewiseLinear& fx, const PiecewiseLinear& fy, double tol) {
    // the gap is piecewise linear, so knot values determine its extremes
    const std::vector<double> pts = merged_knots(fx, fy);
    std::vector<double> gaps(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) gaps[i] = fy(pts[i]) - fx(pts[i]);
    return classify(pts, gaps, tol, Relation::first_strict);
}

DominanceVerdict check_sosd(const StepFunction& fx, const StepFunction& fy, double tol) {
    const StepFunction gap = fy - fx;
    const PiecewiseLinear integral = running_integral(gap);
    const auto& pts = integral.knots();
    std::vector<double> vals = integral.values();
    DominanceVerdict v = classify(pts, vals, tol, Relation::second_strict);
    // equal running integrals still admit distinct distributions; demand the
    // CDFs themselves agree before declaring equality
    if (v.relation == Relation::equal_distribution) {
        double sup = 0.0;
        for (double t : step_eval_points(fx, fy)) sup = std::max(sup, std::fabs(fy(t) - fx(t)));
        if (sup > tol) v.relation = Relation::none;
    }
    // the integral must also stay nonnegative beyond the last knot, where its
    // slope is gap(+inf) = 0; nothing further to check for CDF pairs
    return v;
}

DominanceVerdict check_sosd(const PiecewiseLinear& fx, const PiecewiseLinear& fy, double tol) {
    const std::vector<double> pts = merged_knots(fx, fy);
    std::vector<double> gap(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) gap[i] = fy(pts[i]) - fx(pts[i]);

    // running integral of a piecewise-linear gap is piecewise quadratic; its
    // minimum over a segment is at an endpoint or at an interior zero of gap
    std::vector<double> eval_pts;
    std::vector<double> eval_vals;
    eval_pts.reserve(2 * pts.size());
    eval_vals.reserve(2 * pts.size());
    double acc = 0.0;
    eval_pts.push_back(pts.front());
    eval_vals.push_back(0.0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double w = pts[i] - pts[i - 1];
        const double g0 = gap[i - 1];
        const double g1 = gap[i];
        if ((g0 < 0.0) != (g1 < 0.0) && g0 != g1) {
            const double xz = pts[i - 1] + w * (g0 / (g0 - g1));
            const double partial = acc + 0.5 * g0 * (xz - pts[i - 1]);
            eval_pts.push_back(xz);
            eval_vals.push_back(partial);
        }
        acc += 0.5 * (g0 + g1) * w;
        eval_pts.push_back(pts[i]);
        eval_vals.push_back(acc);
    }
    DominanceVerdict v = classify(eval_pts, eval_vals, tol, Relation::second_strict);
    if (v.relation == Relation::equal_distribution) {
        double sup = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) sup = std::max(sup, std::fabs(gap[i]));
        if (sup > tol) v.relation = Relation::none;
    }
    return v;
}

double grid_tolerance(double h, double local_density_bound) {
    return 10.0 * h * local_density_bound;
}

SupportDiagnostic support_bound_diagnostic(const Gamble& x, const Gamble& y,
                                           bool z_support_bounded) {
    if (x.cdf_distance(y) == 0.0)
        return {SupportFeasibility::infeasible_equal_distribution,
                "X and Y share a distribution; no noise can make the ranking strict"};
    if (z_support_bounded && x.max_support() < y.max_support())
        return {SupportFeasibility::infeasible_with_bounded_noise,
                "max support of X (" + std::to_string(x.max_support()) +
                    ") lies below max support of Y (" + std::to_string(y.max_support()) +
                    "); bounded noise cannot lift X+Z above Y+Z at the top"};
    return {SupportFeasibility::feasible, "support maxima are compatible"};
}

}  // namespace noisedom
