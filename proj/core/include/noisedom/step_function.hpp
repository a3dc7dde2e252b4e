#pragma once

#include <cstddef>
#include <vector>

namespace noisedom {

// Piecewise-constant, right-continuous function with finitely many
// breakpoints. values() has one entry per interval: values()[0] on
// (-inf, b_0), values()[i] on [b_{i-1}, b_i), values()[n] on [b_{n-1}, +inf).
// The first and last entries are the left/right tail values.
class StepFunction {
public:
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    static StepFunction constant(double v) { return StepFunction({}, {v}); }

    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }
    double left_tail() const { return values_.front(); }
    double right_tail() const { return values_.back(); }

    double operator()(double t) const;

    bool is_cdf(double tol = 1e-12) const;  // nondecreasing, tails 0 and 1

    // pointwise difference on the merged breakpoint set
    friend StepFunction operator-(const StepFunction& a, const StepFunction& b);

    // Exact integral over [lo, hi] (tail values extend the end segments).
    double integral(double lo, double hi) const;

    // Exact integral of |f| over [lo, hi].
    double abs_integral(double lo, double hi) const;

private:
    std::vector<double> breaks_;
    std::vector<double> values_;
};

// Continuous piecewise-linear function: linear between consecutive knots,
// constant outside [knots.front(), knots.back()]. Carries CDFs of gridded
// densities, running integrals of step functions and second-order signed
// densities, where exact kink-wise evaluation matters.
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<double> knots, std::vector<double> values);

    const std::vector<double>& knots() const { return xs_; }
    const std::vector<double>& values() const { return ys_; }

    double operator()(double t) const;
    double left_tail() const { return ys_.front(); }
    double right_tail() const { return ys_.back(); }

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
};

// Running integral x -> int_{-inf}^{x} f, requiring both tail values of f to
// vanish so the integral is finite and eventually constant.
PiecewiseLinear running_integral(const StepFunction& f);

}  // namespace noisedom
