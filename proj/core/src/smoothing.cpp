#include "noisedom/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "noisedom/convolve.hpp"
#include "noisedom/errors.hpp"
#include "noisedom/quadrature.hpp"

namespace noisedom {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

double phi(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }
double phi_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

// quadrature partition for integrals of |(sigma - delta) * rho_a|: the
// density is Gaussian-small beyond ~10a past the support
std::vector<double> c_split_points(const SigmaMeasure& sigma, double a) {
    std::vector<double> pts;
    pts.push_back(sigma.support_lo() - 14.0 * a);
    pts.push_back(sigma.support_lo() - 4.0 * a);
    pts.push_back(sigma.support_lo() - a);
    for (const LinearSeg& s : sigma.segments()) pts.push_back(s.lo);
    pts.push_back(sigma.support_hi());
    pts.push_back(sigma.support_hi() + a);
    pts.push_back(sigma.support_hi() + 4.0 * a);
    pts.push_back(sigma.support_hi() + 14.0 * a);
    return pts;
}

double default_grid_step(const SigmaMeasure& sigma, double a) {
    double h = std::min(a / 2000.0, sigma.min_segment_width() / 10.0);
    // keep lattices from exploding on nearly-coincident atoms
    h = std::max(h, a / 50000.0);
    return h;
}

}  // namespace

double smoothed_sigma_density(const SigmaMeasure& sigma, double a, double s) {
    double acc = -phi(s / a) / a;
    for (const LinearSeg& seg : sigma.segments()) {
        const double w = seg.hi - seg.lo;
        const double beta = (seg.d1 - seg.d0) / w;
        const double alpha = seg.d0 - beta * seg.lo;
        const double pu = (s - seg.lo) / a;
        const double pv = (s - seg.hi) / a;
        acc += (alpha + beta * s) * (phi_cdf(pu) - phi_cdf(pv));
        acc -= beta * a * (phi(pv) - phi(pu));
    }
    return acc;
}

double compute_c(const SigmaMeasure& sigma, double a) {
    const auto f = [&](double s) { return std::fabs(smoothed_sigma_density(sigma, a, s)); };
    const double integral = adaptive_integrate_split(f, c_split_points(sigma, a), 1e-12, 1e-9);
    return kSqrt2 * integral;
}

double choose_a(const SigmaMeasure& sigma, double c_target) {
    if (!(c_target > 0.0 && c_target < 1.0))
        throw std::invalid_argument("choose_a: c_target must lie in (0,1)");
    const double radius =
        std::max(std::fabs(sigma.support_lo()), std::fabs(sigma.support_hi()));
    double a = std::max(radius, 1e-6);
    while (sigma.smoothing_bound(a) > c_target / kSqrt2) a *= 2.0;
    while (compute_c(sigma, a) > c_target) a *= 2.0;
    return a;
}

NoiseSpec smooth(const SigmaMeasure& sigma, double a, const SmoothOptions& opts) {
    const double c = compute_c(sigma, a);
    if (c >= 1.0)
        throw KernelTooNarrow("smooth: c = " + std::to_string(c) +
                              " >= 1; enlarge the kernel width a");

    const double h = opts.grid_step > 0.0 ? opts.grid_step : default_grid_step(sigma, a);
    const Lattice lat{h};
    const double lo = lat.snap_lo(sigma.support_lo() - 12.0 * a);
    const std::size_t cells = lat.cells_for(sigma.support_lo() - 12.0 * a,
                                            sigma.support_hi() + 12.0 * a);

    NoiseSpec spec;
    spec.kernel = {KernelType::gaussian, kSqrt2 * a};
    spec.c = c;
    spec.provenance = {sigma.order(), a, KernelConvention::w_std};

    if (c <= 0.0) {
        spec.truncation_k = 0;
        spec.pi = GriddedDensity::point_mass_at_zero(h);
        return spec;
    }

    std::vector<double> masses(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const double mid = lo + h * (static_cast<double>(i) + 0.5);
        masses[i] = std::fabs(smoothed_sigma_density(sigma, a, mid)) * h;
    }
    const double sum = std::accumulate(masses.begin(), masses.end(), 0.0);
    for (double& m : masses) m /= sum;
    spec.pi = GriddedDensity(lo, h, std::move(masses), 1.0, 0.0);
    spec.truncation_k =
        static_cast<int>(std::ceil(std::log(opts.series_tail_tol) / std::log(c)));
    return spec;
}

ConstructionResult construct_and_verify(const Gamble& x, const Gamble& y, Order order,
                                        const ConstructOptions& opts) {
    const SigmaMeasure sigma =
        order == Order::first ? build_sigma_first(x, y) : build_sigma_second(x, y);
    const double a = choose_a(sigma, opts.c_target);

    SmoothOptions sopts;
    sopts.series_tail_tol = opts.series_tail_tol;
    sopts.grid_step = opts.grid_step;
    NoiseSpec spec = smooth(sigma, a, sopts);

    const double lo_supp = std::min(x.min_support(), y.min_support());
    const double hi_supp = std::max(x.max_support(), y.max_support());
    const double sigma_z = spec.std_dev();

    double span = opts.span_sigmas * sigma_z;
    GriddedDensity z = GriddedDensity::point_mass_at_zero(1.0);
    bool materialized = false;
    for (int attempt = 0; attempt < 5 && !materialized; ++attempt) {
        try {
            z = materialize(spec, lo_supp - span, hi_supp + span);
            materialized = true;
        } catch (const GridTooNarrow&) {
            if (attempt == 4) throw;
            span *= 1.5;
        }
    }

    const PiecewiseLinear fx = cdf_of_sum(x, z);
    const PiecewiseLinear fy = cdf_of_sum(y, z);
    DominanceVerdict verdict = order == Order::first ? check_fosd(fx, fy, opts.tol)
                                                     : check_sosd(fx, fy, opts.tol);
    verdict.truncation_mass = z.truncated_tail_mass();

    const Relation expected =
        order == Order::first ? Relation::first_strict : Relation::second_strict;
    if (verdict.relation != expected)
        throw VerificationFailed(
            "construct_and_verify: grid verdict " + to_string(verdict.relation) +
            ", worst violation " + std::to_string(verdict.worst_violation) +
            " at " + std::to_string(verdict.witness_point) +
            "; the grid or tolerances are misconfigured");
    return {std::move(spec), verdict, std::move(z)};
}

CommonNoiseResult construct_common_noise(const std::vector<Gamble>& gambles,
                                         const ConstructOptions& opts) {
    if (gambles.size() < 2)
        throw std::invalid_argument("construct_common_noise: need at least two gambles");
    for (std::size_t i = 1; i < gambles.size(); ++i)
        if (!(gambles[i].mean() > gambles[i - 1].mean()))
            throw InfeasibleMeanOrder(
                "construct_common_noise: means must be strictly increasing (tie or "
                "inversion at index " + std::to_string(i) + ")");

    // pairwise sigmas first, so every component can share one lattice step
    std::vector<SigmaMeasure> sigmas;
    std::vector<double> widths;
    for (std::size_t i = 1; i < gambles.size(); ++i) {
        sigmas.push_back(build_sigma_first(gambles[i], gambles[i - 1]));
        widths.push_back(choose_a(sigmas.back(), opts.c_target));
    }
    double h = opts.grid_step;
    if (h <= 0.0) {
        h = default_grid_step(sigmas.front(), widths.front());
        for (std::size_t i = 1; i < sigmas.size(); ++i)
            h = std::min(h, default_grid_step(sigmas[i], widths[i]));
    }

    NoiseSum noise;
    SmoothOptions sopts;
    sopts.series_tail_tol = opts.series_tail_tol;
    sopts.grid_step = h;
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        noise.components.push_back(smooth(sigmas[i], widths[i], sopts));

    double lo_supp = gambles.front().min_support();
    double hi_supp = gambles.front().max_support();
    for (const Gamble& g : gambles) {
        lo_supp = std::min(lo_supp, g.min_support());
        hi_supp = std::max(hi_supp, g.max_support());
    }
    double span = opts.span_sigmas * noise.std_dev();
    GriddedDensity z = GriddedDensity::point_mass_at_zero(1.0);
    bool materialized = false;
    for (int attempt = 0; attempt < 5 && !materialized; ++attempt) {
        try {
            z = materialize(noise, lo_supp - span, hi_supp + span);
            materialized = true;
        } catch (const GridTooNarrow&) {
            if (attempt == 4) throw;
            span *= 1.5;
        }
    }

    CommonNoiseResult result{std::move(noise), {}, z};
    std::vector<PiecewiseLinear> cdfs;
    cdfs.reserve(gambles.size());
    for (const Gamble& g : gambles) cdfs.push_back(cdf_of_sum(g, z));
    for (std::size_t i = 0; i + 1 < gambles.size(); ++i) {
        DominanceVerdict v = check_fosd(cdfs[i + 1], cdfs[i], opts.tol);
        v.truncation_mass = z.truncated_tail_mass();
        if (v.relation != Relation::first_strict)
            throw VerificationFailed("construct_common_noise: adjacent pair " +
                                     std::to_string(i + 1) + " over " + std::to_string(i) +
                                     " verified as " + to_string(v.relation));
        result.adjacent_verdicts.push_back(v);
    }
    return result;
}

}  // namespace noisedom
