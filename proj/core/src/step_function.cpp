#include "noisedom/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace noisedom {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.size() != breaks_.size() + 1)
        throw std::invalid_argument("step function: need breakpoints+1 values");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i - 1] < breaks_[i]))
            throw std::invalid_argument("step function: breakpoints not strictly increasing");
}

double StepFunction::operator()(double t) const {
    // right-continuous: value on [b_{i-1}, b_i) is values_[i]
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    return values_[static_cast<std::size_t>(it - breaks_.begin())];
}

bool StepFunction::is_cdf(double tol) const {
    if (std::fabs(values_.front()) > tol || std::fabs(values_.back() - 1.0) > tol) return false;
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] < values_[i - 1] - tol) return false;
    return true;
}

StepFunction operator-(const StepFunction& a, const StepFunction& b) {
    std::vector<double> breaks;
    breaks.reserve(a.breaks_.size() + b.breaks_.size());
    std::merge(a.breaks_.begin(), a.breaks_.end(), b.breaks_.begin(), b.breaks_.end(),
               std::back_inserter(breaks));
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<double> values;
    values.reserve(breaks.size() + 1);
    values.push_back(a.values_.front() - b.values_.front());
    for (double t : breaks) values.push_back(a(t) - b(t));
    return StepFunction(std::move(breaks), std::move(values));
}

double StepFunction::integral(double lo, double hi) const {
    if (!(lo <= hi)) throw std::invalid_argument("integral: lo > hi");
    double acc = 0.0;
    double cur = lo;
    for (std::size_t i = 0; i <= breaks_.size(); ++i) {
        const double seg_end = (i < breaks_.size()) ? breaks_[i] : hi;
        const double upper = std::min(seg_end, hi);
        if (upper > cur) {
            acc += values_[i] * (upper - cur);
            cur = upper;
        }
        if (cur >= hi) break;
    }
    if (cur < hi) acc += values_.back() * (hi - cur);
    return acc;
}

double StepFunction::abs_integral(double lo, double hi) const {
    if (!(lo <= hi)) throw std::invalid_argument("abs_integral: lo > hi");
    double acc = 0.0;
    double cur = lo;
    for (std::size_t i = 0; i <= breaks_.size(); ++i) {
        const double seg_end = (i < breaks_.size()) ? breaks_[i] : hi;
        const double upper = std::min(seg_end, hi);
        if (upper > cur) {
            acc += std::fabs(values_[i]) * (upper - cur);
            cur = upper;
        }
        if (cur >= hi) break;
    }
    if (cur < hi) acc += std::fabs(values_.back()) * (hi - cur);
    return acc;
}

PiecewiseLinear::PiecewiseLinear(std::vector<double> knots, std::vector<double> values)
    : xs_(std::move(knots)), ys_(std::move(values)) {
    if (xs_.size() != ys_.size() || xs_.empty())
        throw std::invalid_argument("piecewise linear: need one value per knot");
    for (std::size_t i = 1; i < xs_.size(); ++i)
        if (!(xs_[i - 1] < xs_[i]))
            throw std::invalid_argument("piecewise linear: knots not strictly increasing");
}

double PiecewiseLinear::operator()(double t) const {
    if (t <= xs_.front()) return ys_.front();
    if (t >= xs_.back()) return ys_.back();
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    const double w = (t - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return ys_[i - 1] + w * (ys_[i] - ys_[i - 1]);
}

PiecewiseLinear running_integral(const StepFunction& f) {
    if (f.left_tail() != 0.0 || f.right_tail() != 0.0)
        throw std::invalid_argument("running_integral: tails must vanish");
    const auto& breaks = f.breakpoints();
    if (breaks.empty())
        return PiecewiseLinear({0.0}, {0.0});
    std::vector<double> ys(breaks.size(), 0.0);
    const auto& vals = f.values();
    for (std::size_t i = 1; i < breaks.size(); ++i)
        ys[i] = ys[i - 1] + vals[i] * (breaks[i] - breaks[i - 1]);
    return PiecewiseLinear(breaks, std::move(ys));
}

}  // namespace noisedom
