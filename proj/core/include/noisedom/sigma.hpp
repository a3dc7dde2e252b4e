#pragma once

#include <vector>

#include "noisedom/dominance.hpp"
#include "noisedom/gamble.hpp"

namespace noisedom {

// One piece of a piecewise-linear density: value d0 at lo, d1 at hi.
// Step densities are the special case d0 == d1.
struct LinearSeg {
    double lo;
    double hi;
    double d0;
    double d1;
};

// Total-mass-one signed measure built from a gamble pair. First order: the
// normalized CDF difference (F_Y - F_X)/k with k = E[X]-E[Y]. Second order:
// the normalized running integral of the CDF difference with
// k = (Var[Y]-Var[X])/2. Both have compact support and integrate to one.
class SigmaMeasure {
public:
    SigmaMeasure(Order order, double k, std::vector<LinearSeg> segments);

    Order order() const { return order_; }
    double normalizer() const { return k_; }
    const std::vector<LinearSeg>& segments() const { return segs_; }

    double support_lo() const { return segs_.front().lo; }
    double support_hi() const { return segs_.back().hi; }
    double min_segment_width() const;

    double total_integral() const;  // sigma(R), equals 1 by construction
    double tv_norm() const;         // |sigma|(R)
    double abs_first_moment() const;  // int |y| d|sigma|(y)

    // measure of [a, b] (exact piecewise integral)
    double measure_of(double a, double b) const;

    // int min(2, |y|/a) d|sigma|(y): the Pinsker-footnote upper bound on
    // ||(sigma - delta) * rho_a|| used to seed the kernel-width search.
    double smoothing_bound(double a) const;

private:
    Order order_;
    double k_;
    std::vector<LinearSeg> segs_;
};

// Requires E[X] > E[Y]; throws InfeasibleMeanOrder otherwise.
SigmaMeasure build_sigma_first(const Gamble& x, const Gamble& y);

// Requires E[X] == E[Y] (within 1e-12) and Var[X] < Var[Y]; throws
// InfeasibleVarianceOrder otherwise.
SigmaMeasure build_sigma_second(const Gamble& x, const Gamble& y);

}  // namespace noisedom
