#include "noisedom/noise_spec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "noisedom/convolve.hpp"
#include "noisedom/errors.hpp"

namespace noisedom {

namespace {

constexpr double kMaxTruncatedTail = 1e-4;

// add масс of src into dst (both on the same lattice step); returns mass that
// fell outside dst
double accumulate_onto(std::vector<double>& dst, double dst_lo, const GriddedDensity& src,
                       double weight) {
    const double off = (src.lo() - dst_lo) / src.h();
    const auto base = static_cast<long>(std::llround(off));
    if (std::fabs(off - static_cast<double>(base)) > 1e-6)
        throw MixedGridError("materialize: grids are not lattice-aligned");
    double lost = 0.0;
    for (std::size_t i = 0; i < src.cells(); ++i) {
        const long j = base + static_cast<long>(i);
        const double m = weight * src.masses()[i];
        if (j >= 0 && j < static_cast<long>(dst.size()))
            dst[static_cast<std::size_t>(j)] += m;
        else
            lost += m;
    }
    return lost;
}

GriddedDensity crop_to(const GriddedDensity& g, double lo, std::size_t cells) {
    std::vector<double> out(cells, 0.0);
    const double lost = accumulate_onto(out, lo, g, 1.0);
    return GriddedDensity(lo, g.h(), std::move(out), g.total_mass(),
                          g.truncated_tail_mass() + lost);
}

GriddedDensity kernel_grid(const Kernel& k, double lo, double h, std::size_t cells) {
    switch (k.type) {
        case KernelType::gaussian:
            return GriddedDensity::gaussian(k.param, lo, h, cells);
        case KernelType::uniform_pair:
            return GriddedDensity::triangle(k.param, lo, h, cells);
    }
    throw std::logic_error("unknown kernel type");
}

double truncated_en(double c, int K) {
    // sum_{n<=K} n (1-c) c^n
    double acc = 0.0;
    double cn = c;
    for (int n = 1; n <= K; ++n) {
        acc += n * (1.0 - c) * cn;
        cn *= c;
    }
    return acc;
}

}  // namespace

double Kernel::variance() const {
    switch (type) {
        case KernelType::gaussian:
            return param * param;
        case KernelType::uniform_pair:
            return 2.0 * param * param / 3.0;
    }
    throw std::logic_error("unknown kernel type");
}

double NoiseSpec::represented_mass() const {
    return 1.0 - std::pow(c, truncation_k + 1);
}

double NoiseSpec::mean() const {
    if (c == 0.0) return 0.0;
    const double en = c / (1.0 - c);
    return en * pi.moments().mean;
}

double NoiseSpec::variance() const {
    if (c == 0.0) return kernel.variance();
    const double en = c / (1.0 - c);
    const double vn = c / ((1.0 - c) * (1.0 - c));
    const MomentSummary u = pi.moments();
    return kernel.variance() + en * u.variance + vn * u.mean * u.mean;
}

double NoiseSpec::std_dev() const { return std::sqrt(variance()); }

double NoiseSpec::truncated_mean() const {
    if (c == 0.0) return 0.0;
    return truncated_en(c, truncation_k) * pi.moments().mean;
}

double NoiseSum::mean() const {
    double m = offset;
    for (const NoiseSpec& s : components) m += s.mean();
    return m;
}

double NoiseSum::variance() const {
    double v = 0.0;
    for (const NoiseSpec& s : components) v += s.variance();
    return v;
}

double NoiseSum::std_dev() const { return std::sqrt(variance()); }

double NoiseSum::truncated_mean() const {
    double m = offset;
    for (const NoiseSpec& s : components) m += s.truncated_mean();
    return m;
}

GriddedDensity materialize(const NoiseSpec& spec, double lo, double hi) {
    const double h = spec.pi.h();
    const Lattice lat{h};
    const double wlo = lat.snap_lo(lo);
    const std::size_t n = lat.cells_for(lo, hi);

    std::vector<double> tau(n, 0.0);

    // geometric mixture of pi self-convolutions, built by repeated
    // convolve-and-crop on the window lattice
    GriddedDensity acc = crop_to(GriddedDensity::point_mass_at_zero(h), wlo, n);
    double weight = 1.0 - spec.c;
    accumulate_onto(tau, wlo, acc, weight);
    for (int k = 1; k <= spec.truncation_k && spec.c > 0.0; ++k) {
        acc = crop_to(convolve(acc, spec.pi), wlo, n);
        weight *= spec.c;
        accumulate_onto(tau, wlo, acc, weight);
    }

    GriddedDensity tau_grid(wlo, h, std::move(tau));
    const GriddedDensity kern = kernel_grid(spec.kernel, wlo, h, n);
    GriddedDensity nu = crop_to(convolve(tau_grid, kern), wlo, n);

    const double represented = spec.represented_mass();
    const double truncated = represented - nu.grid_mass();
    GriddedDensity out(nu.lo(), h, std::vector<double>(nu.masses()), represented, truncated);
    if (truncated >= kMaxTruncatedTail)
        throw GridTooNarrow("materialize: truncated tail mass " + std::to_string(truncated) +
                            " exceeds 1e-4; widen the grid");
    return out;
}

GriddedDensity materialize(const NoiseSum& noise, double lo, double hi) {
    if (noise.components.empty())
        throw std::invalid_argument("materialize: empty noise sum");
    const double h = noise.components.front().pi.h();
    for (const NoiseSpec& s : noise.components)
        if (s.pi.h() != h)
            throw MixedGridError("materialize: noise components on different lattice steps");

    // compose on a window in the unshifted coordinate frame, then shift
    const double slo = lo - noise.offset;
    const double shi = hi - noise.offset;
    const Lattice lat{h};
    const double wlo = lat.snap_lo(slo);
    const std::size_t n = lat.cells_for(slo, shi);

    GriddedDensity z = materialize(noise.components.front(), slo, shi);
    z = crop_to(z, wlo, n);
    for (std::size_t i = 1; i < noise.components.size(); ++i) {
        const GriddedDensity zi = materialize(noise.components[i], slo, shi);
        z = crop_to(convolve(z, zi), wlo, n);
    }
    double represented = 1.0;
    for (const NoiseSpec& s : noise.components) represented *= s.represented_mass();
    const double truncated = represented - z.grid_mass();
    if (truncated >= kMaxTruncatedTail)
        throw GridTooNarrow("materialize: truncated tail mass " + std::to_string(truncated) +
                            " exceeds 1e-4; widen the grid");
    return GriddedDensity(z.lo() + noise.offset, h, std::vector<double>(z.masses()),
                          represented, truncated);
}

}  // namespace noisedom
