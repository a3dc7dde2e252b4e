#include "noisedom/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "noisedom/errors.hpp"
#include "noisedom/step_function.hpp"

namespace noisedom {

namespace {

// integral of |d0 + (d1-d0) w/(hi-lo)| over [lo, hi], exact
double abs_seg_integral(const LinearSeg& s, double weight_pow = 0.0) {
    (void)weight_pow;
    const double w = s.hi - s.lo;
    if (w <= 0.0) return 0.0;
    if ((s.d0 >= 0.0) == (s.d1 >= 0.0))
        return 0.5 * std::fabs(s.d0 + s.d1) * w;
    // sign change at xz
    const double xz = s.lo + w * (s.d0 / (s.d0 - s.d1));
    return 0.5 * std::fabs(s.d0) * (xz - s.lo) + 0.5 * std::fabs(s.d1) * (s.hi - xz);
}

// Simpson is exact for the quadratics that arise from linear x linear pieces
double simpson(const std::function<double(double)>& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

}  // namespace

SigmaMeasure::SigmaMeasure(Order order, double k, std::vector<LinearSeg> segments)
    : order_(order), k_(k), segs_(std::move(segments)) {
    if (segs_.empty()) throw std::invalid_argument("sigma: no segments");
    for (std::size_t i = 0; i < segs_.size(); ++i) {
        if (!(segs_[i].lo < segs_[i].hi))
            throw std::invalid_argument("sigma: degenerate segment");
        if (i > 0 && segs_[i].lo != segs_[i - 1].hi)
            throw std::invalid_argument("sigma: segments must tile the support");
    }
}

double SigmaMeasure::min_segment_width() const {
    double w = std::numeric_limits<double>::infinity();
    for (const LinearSeg& s : segs_) w = std::min(w, s.hi - s.lo);
    return w;
}

double SigmaMeasure::total_integral() const {
    double acc = 0.0;
    for (const LinearSeg& s : segs_) acc += 0.5 * (s.d0 + s.d1) * (s.hi - s.lo);
    return acc;
}

double SigmaMeasure::tv_norm() const {
    double acc = 0.0;
    for (const LinearSeg& s : segs_) acc += abs_seg_integral(s);
    return acc;
}

double SigmaMeasure::abs_first_moment() const {
    double acc = 0.0;
    for (const LinearSeg& s : segs_) {
        const double w = s.hi - s.lo;
        const double slope = (s.d1 - s.d0) / w;
        auto f = [&](double y) { return std::fabs(y) * std::fabs(s.d0 + slope * (y - s.lo)); };
        // split at 0 and at the density sign change so the integrand is
        // piecewise quadratic
        std::vector<double> pts{s.lo, s.hi};
        if (s.lo < 0.0 && 0.0 < s.hi) pts.push_back(0.0);
        if ((s.d0 >= 0.0) != (s.d1 >= 0.0))
            pts.push_back(s.lo + w * (s.d0 / (s.d0 - s.d1)));
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 1; i < pts.size(); ++i) acc += simpson(f, pts[i - 1], pts[i]);
    }
    return acc;
}

double SigmaMeasure::measure_of(double a, double b) const {
    if (!(a <= b)) std::swap(a, b);
    double acc = 0.0;
    for (const LinearSeg& s : segs_) {
        const double lo = std::max(a, s.lo);
        const double hi = std::min(b, s.hi);
        if (hi <= lo) continue;
        const double w = s.hi - s.lo;
        const double slope = (s.d1 - s.d0) / w;
        const double dlo = s.d0 + slope * (lo - s.lo);
        const double dhi = s.d0 + slope * (hi - s.lo);
        acc += 0.5 * (dlo + dhi) * (hi - lo);
    }
    return acc;
}

double SigmaMeasure::smoothing_bound(double a) const {
    double acc = 0.0;
    for (const LinearSeg& s : segs_) {
        const double w = s.hi - s.lo;
        const double slope = (s.d1 - s.d0) / w;
        auto f = [&](double y) {
            return std::min(2.0, std::fabs(y) / a) *
                   std::fabs(s.d0 + slope * (y - s.lo));
        };
        std::vector<double> pts{s.lo, s.hi};
        for (double kink : {0.0, -2.0 * a, 2.0 * a})
            if (s.lo < kink && kink < s.hi) pts.push_back(kink);
        if ((s.d0 >= 0.0) != (s.d1 >= 0.0))
            pts.push_back(s.lo + w * (s.d0 / (s.d0 - s.d1)));
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 1; i < pts.size(); ++i) acc += simpson(f, pts[i - 1], pts[i]);
    }
    return acc;
}

SigmaMeasure build_sigma_first(const Gamble& x, const Gamble& y) {
    const double k = x.mean() - y.mean();
    if (!(k > 0.0))
        throw InfeasibleMeanOrder("build_sigma_first: E[X] <= E[Y] (gap " +
                                  std::to_string(k) + ")");
    const StepFunction diff = cdf(y) - cdf(x);
    const auto& breaks = diff.breakpoints();
    const auto& vals = diff.values();
    std::vector<LinearSeg> segs;
    segs.reserve(breaks.size() - 1);
    for (std::size_t i = 1; i < breaks.size(); ++i) {
        const double d = vals[i] / k;
        segs.push_back({breaks[i - 1], breaks[i], d, d});
    }
    if (segs.empty()) throw InfeasibleMeanOrder("build_sigma_first: identical supports");
    return SigmaMeasure(Order::first, k, std::move(segs));
}

SigmaMeasure build_sigma_second(const Gamble& x, const Gamble& y) {
    if (std::fabs(x.mean() - y.mean()) > 1e-12)
        throw InfeasibleVarianceOrder("build_sigma_second: means differ");
    const double k = 0.5 * (y.variance() - x.variance());
    if (!(k > 0.0))
        throw InfeasibleVarianceOrder("build_sigma_second: Var[X] >= Var[Y]");
    const StepFunction diff = cdf(y) - cdf(x);
    const PiecewiseLinear integral = running_integral(diff);
    const auto& knots = integral.knots();
    const auto& vals = integral.values();
    std::vector<LinearSeg> segs;
    segs.reserve(knots.size() - 1);
    for (std::size_t i = 1; i < knots.size(); ++i)
        segs.push_back({knots[i - 1], knots[i], vals[i - 1] / k, vals[i] / k});
    if (segs.empty())
        throw InfeasibleVarianceOrder("build_sigma_second: identical supports");
    return SigmaMeasure(Order::second, k, std::move(segs));
}

}  // namespace noisedom
