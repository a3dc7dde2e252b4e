#pragma once

#include <functional>
#include <vector>

#include "noisedom/gamble.hpp"
#include "noisedom/grid.hpp"
#include "noisedom/noise_spec.hpp"

namespace noisedom {

// Binary gamble paying +g and -l with equal probability, compared against 0.
struct BinaryGamble {
    double g;  // gain, > 0
    double l;  // loss magnitude, > 0, != g

    double mean() const { return 0.5 * (g - l); }
    Gamble to_gamble() const { return Gamble({{-l, 0.5}, {g, 0.5}}); }
};

// The closed-form density of (sigma - delta) * rho_a for the binary case:
//   t(s) = (2 Phi_a(s) - Phi_a(s-g) - Phi_a(s+l)) / (g-l) - phi_a(s),
// where a is the standard deviation of the single Gaussian kernel rho_a.
// Integrates to zero; t >= 0 above g and t <= 0 below -l.
std::function<double(double)> t_function(const BinaryGamble& b, double a);

// Gaussian-kernel construction for a binary gamble versus zero, with
//   c = sqrt(2) int_{-inf}^{g} |t|,  pi density (sqrt(2)/c)|t| cut at g.
// sigma_w is read per the convention: w_std means the Gaussian part W of Z
// has standard deviation sigma_w (a = sigma_w / sqrt(2)); rho_std feeds
// sigma_w to rho_a directly. Throws KernelTooNarrow when c >= 1.
NoiseSpec binary_construct(const BinaryGamble& b, double sigma_w,
                           KernelConvention convention = KernelConvention::w_std,
                           double series_tail_tol = 1e-10, double grid_step = 0.0);

// Bounded-support construction: Z = R_1 + R_2 + (U_1 + ... + U_N) with
// R_i uniform on [-a,a], U_i uniform on [-a-M,-a+M] u [a-M,a+M] and N
// geometric with P[N=n] = 2^{-1-n}. One spec serves every pair supported in
// [-M,M] whose means differ by at least eps*M.
struct UniformNoiseSpec {
    double M;
    double eps;
    double a;  // >= 16 M / eps + 8 M

    static double minimum_width(double M, double eps) { return 16.0 * M / eps + 8.0 * M; }

    double mean() const { return 0.0; }
    double variance() const;  // Wald: 2a^2/3 + (a^2 + M^2/3), E[N] = 1
    double std_dev() const;
};

// a defaults to the theorem bound; ParameterTooSmall if an explicit a is
// below it.
UniformNoiseSpec uniform_construct(double M, double eps, double a = 0.0);

double uniform_variance(const UniformNoiseSpec& spec);
// the closed-form expression displayed alongside the theorem; reported for
// comparison, with the sampler arbitrating (see uniform_variance tests)
double uniform_variance_paper_form(const UniformNoiseSpec& spec);

// Equivalent single-stage NoiseSpec on an h-lattice (c = 1/2, exact uniform
// cell masses); K caps the series at tail mass 2^{-K-1}.
NoiseSpec to_noise_spec(const UniformNoiseSpec& spec, double grid_step, int truncation_k);

GriddedDensity materialize_uniform(const UniformNoiseSpec& spec, double lo, double hi,
                                   int truncation_k, double grid_step = 0.0);

struct Table1Row {
    double g;
    double l;
    double sigma_w;
    double c;
    double sigma_z;
    double c_ref;        // published value
    double sigma_z_ref;  // published value
};

// The five published (g, l, sigma_W) cases with computed c and sigma_Z.
std::vector<Table1Row> table1_rows();

// Recompute one case at an arbitrary sigma_W (reference columns zeroed).
Table1Row table1_row(double g, double l, double sigma_w);

}  // namespace noisedom
