#include "noisedom/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace noisedom {

namespace {

double phi_cdf(double x) { return 0.5 * std::erfc(-x * (1.0 / std::sqrt(2.0))); }

}  // namespace

GriddedDensity::GriddedDensity(double lo, double h, std::vector<double> masses)
    : GriddedDensity(lo, h, std::move(masses), 0.0, 0.0) {
    total_ = grid_mass();
}

GriddedDensity::GriddedDensity(double lo, double h, std::vector<double> masses,
                               double total_mass, double truncated_tail_mass)
    : lo_(lo), h_(h), masses_(std::move(masses)), total_(total_mass),
      truncated_(truncated_tail_mass) {
    if (!(h_ > 0.0)) throw std::invalid_argument("grid: step must be positive");
    if (masses_.empty()) throw std::invalid_argument("grid: no cells");
}

double GriddedDensity::grid_mass() const {
    return std::accumulate(masses_.begin(), masses_.end(), 0.0);
}

PiecewiseLinear GriddedDensity::cdf() const {
    std::vector<double> xs(masses_.size() + 1);
    std::vector<double> ys(masses_.size() + 1);
    xs[0] = lo_;
    ys[0] = 0.0;
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        xs[i + 1] = lo_ + h_ * static_cast<double>(i + 1);
        ys[i + 1] = ys[i] + masses_[i];
    }
    return PiecewiseLinear(std::move(xs), std::move(ys));
}

MomentSummary GriddedDensity::moments() const {
    const double mass = grid_mass();
    if (mass == 0.0) return {0.0, 0.0};
    double m1 = 0.0;
    for (std::size_t i = 0; i < masses_.size(); ++i) m1 += midpoint(i) * masses_[i];
    m1 /= mass;
    double v = 0.0;
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        const double d = midpoint(i) - m1;
        v += d * d * masses_[i];
    }
    return {m1, v / mass};
}

double GriddedDensity::abs_moment(int n) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < masses_.size(); ++i)
        acc += std::pow(std::fabs(midpoint(i)), n) * std::fabs(masses_[i]);
    return acc;
}

double GriddedDensity::tv_norm() const {
    double acc = std::fabs(truncated_);
    for (double m : masses_) acc += std::fabs(m);
    return acc;
}

GriddedDensity GriddedDensity::resampled(double new_lo, double new_h,
                                         std::size_t new_cells) const {
    std::vector<double> out(new_cells, 0.0);
    double lost = 0.0;
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        if (masses_[i] == 0.0) continue;
        const double a = lo_ + h_ * static_cast<double>(i);
        const double b = a + h_;
        // spread cell mass uniformly over [a,b), clip onto the new lattice
        const auto first =
            static_cast<long>(std::floor((a - new_lo) / new_h));
        const auto last = static_cast<long>(std::floor((b - new_lo) / new_h + 1e-12));
        for (long j = first; j <= last; ++j) {
            const double cell_a = new_lo + new_h * static_cast<double>(j);
            const double overlap =
                std::min(b, cell_a + new_h) - std::max(a, cell_a);
            if (overlap <= 0.0) continue;
            const double share = masses_[i] * overlap / h_;
            if (j < 0 || j >= static_cast<long>(new_cells))
                lost += share;
            else
                out[static_cast<std::size_t>(j)] += share;
        }
    }
    return GriddedDensity(new_lo, new_h, std::move(out), total_, truncated_ + lost);
}

void GriddedDensity::write_csv(std::ostream& out) const {
    out << "x,density\n";
    for (std::size_t i = 0; i < masses_.size(); ++i)
        out << midpoint(i) << ',' << density(i) << '\n';
}

GriddedDensity GriddedDensity::point_mass_at_zero(double h) {
    return GriddedDensity(-h / 2.0, h, {1.0});
}

GriddedDensity GriddedDensity::gaussian(double sigma, double lo, double h,
                                        std::size_t cells) {
    std::vector<double> m(cells);
    double prev = phi_cdf(lo / sigma);
    for (std::size_t i = 0; i < cells; ++i) {
        const double next = phi_cdf((lo + h * static_cast<double>(i + 1)) / sigma);
        m[i] = next - prev;
        prev = next;
    }
    const double gmass = std::accumulate(m.begin(), m.end(), 0.0);
    return GriddedDensity(lo, h, std::move(m), 1.0, 1.0 - gmass);
}

GriddedDensity GriddedDensity::uniform(double from, double to, double lo, double h,
                                       std::size_t cells) {
    if (!(to > from)) throw std::invalid_argument("uniform: empty support");
    std::vector<double> m(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const double a = lo + h * static_cast<double>(i);
        const double overlap = std::min(a + h, to) - std::max(a, from);
        m[i] = overlap > 0.0 ? overlap / (to - from) : 0.0;
    }
    const double gmass = std::accumulate(m.begin(), m.end(), 0.0);
    return GriddedDensity(lo, h, std::move(m), 1.0, 1.0 - gmass);
}

GriddedDensity GriddedDensity::triangle(double a, double lo, double h,
                                        std::size_t cells) {
    // density (2a - |x|) / (4a^2) on [-2a, 2a]; cell masses via the exact
    // antiderivative of the positive-part expression
    const auto F = [a](double x) {
        x = std::clamp(x, -2.0 * a, 2.0 * a);
        if (x <= 0.0) {
            const double u = x + 2.0 * a;
            return u * u / (8.0 * a * a);
        }
        const double u = 2.0 * a - x;
        return 1.0 - u * u / (8.0 * a * a);
    };
    std::vector<double> m(cells);
    double prev = F(lo);
    for (std::size_t i = 0; i < cells; ++i) {
        const double next = F(lo + h * static_cast<double>(i + 1));
        m[i] = next - prev;
        prev = next;
    }
    const double gmass = std::accumulate(m.begin(), m.end(), 0.0);
    return GriddedDensity(lo, h, std::move(m), 1.0, 1.0 - gmass);
}

double tv_norm(const GriddedDensity& g) { return g.tv_norm(); }

double tv_norm(const StepFunction& density, double lo, double hi) {
    return density.abs_integral(lo, hi);
}

MomentSummary moments(const GriddedDensity& g) { return g.moments(); }
MomentSummary moments(const Gamble& g) { return g.moments(); }

double Lattice::snap_lo(double lo) const {
    // lo must be of the form -(k + 1/2) h so that 0 sits on a midpoint
    const double k = std::ceil(-lo / h - 0.5);
    return -(k + 0.5) * h;
}

std::size_t Lattice::cells_for(double lo, double hi) const {
    const double snapped = snap_lo(lo);
    return static_cast<std::size_t>(std::ceil((hi - snapped) / h));
}

}  // namespace noisedom
