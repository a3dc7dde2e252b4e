#include "noisedom/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "noisedom/errors.hpp"
#include "noisedom/quadrature.hpp"

namespace noisedom {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

double phi(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }
double phi_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

void validate(const BinaryGamble& b) {
    if (!(b.g > 0.0) || !(b.l > 0.0))
        throw std::invalid_argument("binary gamble: g and l must be positive");
    if (b.g == b.l)
        throw std::invalid_argument("binary gamble: g == l makes the density singular");
}

// integration split for int_{-inf}^{g} |t|: Gaussian decay below -l - ~12a
std::vector<double> t_split_points(const BinaryGamble& b, double a) {
    std::vector<double> pts{-b.l - 14.0 * a, -b.l - 4.0 * a, -b.l - a,
                            -b.l,            0.0,            b.g};
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace

std::function<double(double)> t_function(const BinaryGamble& b, double a) {
    validate(b);
    if (!(a > 0.0)) throw std::invalid_argument("t_function: kernel width must be positive");
    const double g = b.g;
    const double l = b.l;
    return [g, l, a](double s) {
        return (2.0 * phi_cdf(s / a) - phi_cdf((s - g) / a) - phi_cdf((s + l) / a)) /
                   (g - l) -
               phi(s / a) / a;
    };
}

NoiseSpec binary_construct(const BinaryGamble& b, double sigma_w,
                           KernelConvention convention, double series_tail_tol,
                           double grid_step) {
    validate(b);
    if (!(sigma_w > 0.0))
        throw std::invalid_argument("binary_construct: sigma_w must be positive");
    const double a = convention == KernelConvention::w_std ? sigma_w / kSqrt2 : sigma_w;
    const auto t = t_function(b, a);

    const auto abs_t = [&t](double s) { return std::fabs(t(s)); };
    const double c = kSqrt2 * adaptive_integrate_split(abs_t, t_split_points(b, a),
                                                       1e-13, 1e-10);
    if (c >= 1.0)
        throw KernelTooNarrow("binary_construct: c = " + std::to_string(c) + " >= 1");

    // pi has density (sqrt(2)/c)|t| on (-inf, g] and 0 above; materialized on
    // a zero-midpoint lattice and normalized
    double h = grid_step > 0.0 ? grid_step : std::min(a / 2000.0, std::min(b.g, b.l) / 10.0);
    h = std::max(h, a / 50000.0);
    const Lattice lat{h};
    const double lo_req = -b.l - 12.0 * a;
    const double lo = lat.snap_lo(lo_req);
    const std::size_t cells = lat.cells_for(lo_req, b.g);
    std::vector<double> masses(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const double mid = lo + h * (static_cast<double>(i) + 0.5);
        masses[i] = mid <= b.g ? std::fabs(t(mid)) * h : 0.0;
    }
    const double sum = std::accumulate(masses.begin(), masses.end(), 0.0);
    for (double& m : masses) m /= sum;

    NoiseSpec spec;
    spec.kernel = {KernelType::gaussian,
                   convention == KernelConvention::w_std ? sigma_w : kSqrt2 * a};
    spec.c = c;
    spec.pi = GriddedDensity(lo, h, std::move(masses), 1.0, 0.0);
    spec.truncation_k = static_cast<int>(std::ceil(std::log(series_tail_tol) / std::log(c)));
    spec.provenance = {Order::first, a, convention};
    return spec;
}

double UniformNoiseSpec::variance() const {
    // Var[R1+R2] + E[N] E[U^2] with E[N] = 1 and E[U] = 0
    return 2.0 * a * a / 3.0 + (a * a + M * M / 3.0);
}

double UniformNoiseSpec::std_dev() const { return std::sqrt(variance()); }

UniformNoiseSpec uniform_construct(double M, double eps, double a) {
    if (!(M > 0.0) || !(eps > 0.0))
        throw std::invalid_argument("uniform_construct: M and eps must be positive");
    const double bound = UniformNoiseSpec::minimum_width(M, eps);
    if (a == 0.0) a = bound;
    if (a < bound * (1.0 - 1e-12))
        throw ParameterTooSmall("uniform_construct: a = " + std::to_string(a) +
                                " below the bound 16M/eps + 8M = " + std::to_string(bound));
    return {M, eps, a};
}

double uniform_variance(const UniformNoiseSpec& spec) { return spec.variance(); }

double uniform_variance_paper_form(const UniformNoiseSpec& spec) {
    const double r = spec.M / spec.eps;
    return (2.0 / 3.0) * r * r *
           (1024.0 + 1024.0 * spec.eps + 257.0 * spec.eps * spec.eps);
}

NoiseSpec to_noise_spec(const UniformNoiseSpec& spec, double grid_step, int truncation_k) {
    const double h = grid_step;
    if (!(h > 0.0)) throw std::invalid_argument("to_noise_spec: need a positive grid step");
    const Lattice lat{h};
    const double lo_req = -spec.a - spec.M - h;
    const double lo = lat.snap_lo(lo_req);
    const std::size_t cells = lat.cells_for(lo_req, spec.a + spec.M + h);

    // exact cell masses of the two-interval uniform
    const GriddedDensity left =
        GriddedDensity::uniform(-spec.a - spec.M, -spec.a + spec.M, lo, h, cells);
    const GriddedDensity right =
        GriddedDensity::uniform(spec.a - spec.M, spec.a + spec.M, lo, h, cells);
    std::vector<double> masses(cells);
    for (std::size_t i = 0; i < cells; ++i)
        masses[i] = 0.5 * left.masses()[i] + 0.5 * right.masses()[i];

    NoiseSpec out;
    out.kernel = {KernelType::uniform_pair, spec.a};
    out.c = 0.5;
    out.pi = GriddedDensity(lo, h, std::move(masses), 1.0, 0.0);
    out.truncation_k = truncation_k;
    out.provenance = {Order::first, spec.a, KernelConvention::rho_std};
    return out;
}

GriddedDensity materialize_uniform(const UniformNoiseSpec& spec, double lo, double hi,
                                   int truncation_k, double grid_step) {
    double h = grid_step > 0.0 ? grid_step : spec.a / 2000.0;
    return materialize(to_noise_spec(spec, h, truncation_k), lo, hi);
}

namespace {

struct Table1Case {
    double g, l, sigma_w, c_ref, sigma_z_ref;
};

constexpr Table1Case kTable1[] = {
    {12.0, 10.0, 3500.0, 0.014, 3525.0},
    {12.0, 10.0, 4000.0, 0.011, 4025.0},
    {100.0, 50.0, 4500.0, 0.022, 4551.0},
    {100.0, 50.0, 10000.0, 0.010, 10050.0},
    {100.0, 70.0, 11000.0, 0.018, 11102.0},
};

}  // namespace

Table1Row table1_row(double g, double l, double sigma_w) {
    const NoiseSpec spec = binary_construct({g, l}, sigma_w);
    return {g, l, sigma_w, spec.c, spec.std_dev(), 0.0, 0.0};
}

std::vector<Table1Row> table1_rows() {
    std::vector<Table1Row> rows;
    rows.reserve(std::size(kTable1));
    for (const Table1Case& t : kTable1) {
        Table1Row r = table1_row(t.g, t.l, t.sigma_w);
        r.c_ref = t.c_ref;
        r.sigma_z_ref = t.sigma_z_ref;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace noisedom
