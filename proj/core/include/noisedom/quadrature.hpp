#pragma once

#include <functional>
#include <vector>

namespace noisedom {

// Adaptive Gauss-Kronrod integration (GSL QAG under the hood). The integrand
// may have |.|-type kinks; pass known awkward points via `split` to seed the
// subdivision.
double adaptive_integrate(const std::function<double(double)>& f, double lo, double hi,
                          double epsabs = 1e-12, double epsrel = 1e-10);

double adaptive_integrate_split(const std::function<double(double)>& f,
                                const std::vector<double>& split, double epsabs = 1e-12,
                                double epsrel = 1e-10);

}  // namespace noisedom
