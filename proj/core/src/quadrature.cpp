#include "noisedom/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

namespace noisedom {

namespace {

struct GslEnv {
    GslEnv() { gsl_set_error_handler_off(); }
};

double call_thunk(double x, void* params) {
    const auto* f = static_cast<const std::function<double(double)>*>(params);
    return (*f)(x);
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double lo, double hi,
                          double epsabs, double epsrel) {
    static GslEnv env;
    (void)env;
    constexpr std::size_t kLimit = 2048;
    std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)>
        ws(gsl_integration_workspace_alloc(kLimit), gsl_integration_workspace_free);
    gsl_function gf;
    gf.function = &call_thunk;
    gf.params = const_cast<std::function<double(double)>*>(&f);
    double result = 0.0, abserr = 0.0;
    const int status = gsl_integration_qag(&gf, lo, hi, epsabs, epsrel, kLimit,
                                           GSL_INTEG_GAUSS31, ws.get(), &result, &abserr);
    // EROUND on |.|-kinks is expected; the estimate is still usable
    if (status != GSL_SUCCESS && status != GSL_EROUND)
        throw std::runtime_error(std::string("quadrature failed: ") + gsl_strerror(status));
    return result;
}

double adaptive_integrate_split(const std::function<double(double)>& f,
                                const std::vector<double>& split, double epsabs,
                                double epsrel) {
    std::vector<double> pts = split;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 2) throw std::invalid_argument("integrate_split: need an interval");
    double acc = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        acc += adaptive_integrate(f, pts[i - 1], pts[i], epsabs, epsrel);
    return acc;
}

}  // namespace noisedom
