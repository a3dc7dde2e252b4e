#pragma once

#include <string>

#include "noisedom/gamble.hpp"
#include "noisedom/step_function.hpp"

namespace noisedom {

enum class Relation {
    first_strict,
    second_strict,
    none,
    equal_distribution,
};

enum class Order { first, second };

std::string to_string(Relation r);

struct DominanceVerdict {
    Relation relation = Relation::none;
    double worst_violation = 0.0;  // min over evaluated points of the checked gap
    double witness_point = 0.0;    // first point where the gap exceeds tol
    double truncation_mass = 0.0;  // grid mass unaccounted for, when applicable
};

// Does X first-order dominate Y? fx, fy are the CDFs. FIRST_STRICT iff
// F_Y - F_X >= -tol everywhere and > tol somewhere; EQUAL_DISTRIBUTION iff
// sup |F_Y - F_X| <= tol. Exact for step CDFs (breakpoints plus midpoints
// cover every constancy interval).
DominanceVerdict check_fosd(const StepFunction& fx, const StepFunction& fy, double tol = 1e-9);
DominanceVerdict check_fosd(const PiecewiseLinear& fx, const PiecewiseLinear& fy, double tol);

// Second-order check on the running integral int_{-inf}^{x} (F_Y - F_X).
DominanceVerdict check_sosd(const StepFunction& fx, const StepFunction& fy, double tol = 1e-9);
DominanceVerdict check_sosd(const PiecewiseLinear& fx, const PiecewiseLinear& fy, double tol);

// default tolerance for gridded CDFs, following grid resolution
double grid_tolerance(double h, double local_density_bound);

enum class SupportFeasibility {
    feasible,
    infeasible_with_bounded_noise,   // max supp X < max supp Y
    infeasible_equal_distribution,   // no Z yields a strict ranking
};

struct SupportDiagnostic {
    SupportFeasibility feasibility;
    std::string explanation;
};

// Bounded background noise can only produce X+Z >_1 Y+Z if the support
// maximum of X is at least that of Y. Used to reject bounded-kernel requests.
SupportDiagnostic support_bound_diagnostic(const Gamble& x, const Gamble& y,
                                           bool z_support_bounded);

}  // namespace noisedom
