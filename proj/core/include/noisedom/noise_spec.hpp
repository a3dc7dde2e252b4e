#pragma once

#include <vector>

#include "noisedom/dominance.hpp"
#include "noisedom/grid.hpp"

namespace noisedom {

enum class KernelType { gaussian, uniform_pair };

// How a closed-form construction reads its width parameter: w_std treats it
// as the standard deviation of the Gaussian part W (so the single kernel
// rho_a has a = param/sqrt(2)); rho_std treats it as a itself.
enum class KernelConvention { w_std, rho_std };

struct Kernel {
    KernelType type = KernelType::gaussian;
    // gaussian: std of W = rho_a^(2); uniform_pair: half-width a of each of
    // the two uniform components R_1, R_2
    double param = 1.0;

    double variance() const;
};

struct Provenance {
    Order order = Order::first;
    double rho_std = 0.0;  // the a of the single kernel rho_a
    KernelConvention convention = KernelConvention::w_std;
};

// Generative description of the background noise
//   Z = W + (U_1 + ... + U_N),   P[N = n] = (1-c) c^n,
// with W drawn from the kernel and U_i i.i.d. with gridded density pi.
// truncation_k caps the series for materialization and sampling; the
// represented mass is then 1 - c^(K+1).
struct NoiseSpec {
    Kernel kernel;
    double c = 0.0;
    int truncation_k = 0;
    GriddedDensity pi;
    Provenance provenance;

    double represented_mass() const;

    // moments of the untruncated Z via Wald's identities
    double mean() const;
    double variance() const;
    double std_dev() const;

    // exact mean of the K-truncated compound (what the sampler realizes)
    double truncated_mean() const;
};

// Sum of independent single-stage noises plus a deterministic shift;
// represents Corollary-1 common noise and per-agent mechanism noise.
struct NoiseSum {
    std::vector<NoiseSpec> components;
    double offset = 0.0;

    double mean() const;
    double variance() const;
    double std_dev() const;
    double truncated_mean() const;
};

// Density of Z on the lattice of spec.pi restricted to a window covering
// [lo, hi]. Mass convolved outside the window is accumulated into
// truncated_tail_mass; throws GridTooNarrow when that exceeds 1e-4.
GriddedDensity materialize(const NoiseSpec& spec, double lo, double hi);

// As above for a sum of noises; all components must share the lattice step.
GriddedDensity materialize(const NoiseSum& noise, double lo, double hi);

}  // namespace noisedom
