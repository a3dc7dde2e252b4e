#pragma once

#include "noisedom/gamble.hpp"
#include "noisedom/grid.hpp"
#include "noisedom/step_function.hpp"

namespace noisedom {

enum class ConvMethod {
    automatic,  // direct up to 4096 cells, spectral above
    direct,
    spectral,
};

// Convolution of two gridded measures with the same step (cell masses treated
// as sitting at cell midpoints). Result lo = a.lo + b.lo + h/2, so lattices
// with 0 at a midpoint are closed under convolution. If steps differ, b is
// resampled onto a's step unless allow_resample is false (MixedGridError).
GriddedDensity convolve(const GriddedDensity& a, const GriddedDensity& b,
                        ConvMethod method = ConvMethod::automatic,
                        bool allow_resample = true);

// Exact CDF of X + Z for an atomic gamble X and an independent gridded Z:
// sum_i p_i F_Z(t - v_i), assembled on the union of shifted cell edges. The
// atoms are never discretized.
PiecewiseLinear cdf_of_sum(const Gamble& x, const GriddedDensity& z);

// Density of X + Z on z's own lattice (atom shifts rounded to whole cells
// only when they are lattice multiples; otherwise mass is split between the
// two straddling cells, preserving the mean exactly).
GriddedDensity shift_mix(const Gamble& x, const GriddedDensity& z);

}  // namespace noisedom
