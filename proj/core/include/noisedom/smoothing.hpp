#pragma once

#include <vector>

#include "noisedom/dominance.hpp"
#include "noisedom/gamble.hpp"
#include "noisedom/noise_spec.hpp"
#include "noisedom/sigma.hpp"

namespace noisedom {

// Density of (sigma - delta) * rho_a at s, where rho_a is the Gaussian with
// standard deviation a. Closed form: each linear piece of sigma's density
// contributes Phi/phi terms, minus phi_a(s) for the Dirac part.
double smoothed_sigma_density(const SigmaMeasure& sigma, double a, double s);

// c(a) = sqrt(2) ||(sigma - delta) * rho_a||, by adaptive quadrature of the
// closed-form density.
double compute_c(const SigmaMeasure& sigma, double a);

// Smallest kernel width on a doubling ladder whose exact c(a) clears
// c_target. Seeded by the bound int min(2, |y|/a) d|sigma|(y) <= c_target /
// sqrt(2), which tends to 0 as a grows, so the search always terminates.
double choose_a(const SigmaMeasure& sigma, double c_target);

struct SmoothOptions {
    double series_tail_tol = 1e-10;  // c^(K+1) kept below this
    double grid_step = 0.0;          // 0: min(a/2000, smallest sigma segment / 10)
};

// The smoothing construction: pi = normalized |(sigma - delta) * rho_a|
// materialized on a lattice, c from quadrature, Gaussian kernel W with
// standard deviation sqrt(2) a. Throws KernelTooNarrow when c >= 1.
NoiseSpec smooth(const SigmaMeasure& sigma, double a, const SmoothOptions& opts = {});

struct ConstructionResult {
    NoiseSpec spec;
    DominanceVerdict verdict;
    GriddedDensity noise_grid;  // the materialized Z used for verification
};

struct ConstructOptions {
    double c_target = 0.5;
    double tol = 1e-9;
    double series_tail_tol = 1e-10;
    double grid_step = 0.0;      // 0: derived from a and sigma
    double span_sigmas = 8.0;    // verification window half-width in units of sigma_Z
};

// End to end: build sigma for the requested order, choose a, smooth,
// materialize on [min supp - span*sigma_Z, max supp + span*sigma_Z], and
// check the resulting dominance. The window is widened and retried when the
// truncated tail mass exceeds the materialization budget. Throws
// VerificationFailed if the grid verdict is not the strict relation.
ConstructionResult construct_and_verify(const Gamble& x, const Gamble& y, Order order,
                                        const ConstructOptions& opts = {});

struct CommonNoiseResult {
    NoiseSum noise;
    std::vector<DominanceVerdict> adjacent_verdicts;
    GriddedDensity noise_grid;
};

// One Z for a whole mean-sorted family: the sum of independent pairwise
// constructions, each of which survives the extra noise of the others.
// Requires strictly increasing means; throws InfeasibleMeanOrder on a tie.
CommonNoiseResult construct_common_noise(const std::vector<Gamble>& gambles,
                                         const ConstructOptions& opts = {});

}  // namespace noisedom
