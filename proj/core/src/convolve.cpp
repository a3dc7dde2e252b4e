#include "noisedom/convolve.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <vector>

#include "noisedom/errors.hpp"

namespace noisedom {

namespace {

// fftw planning is not thread safe; execution of distinct plans is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

// smallest 5-smooth size >= n, keeps fftw away from large prime lengths
std::size_t next_fast_size(std::size_t n) {
    while (true) {
        std::size_t r = n;
        for (std::size_t p : {2u, 3u, 5u})
            while (r % p == 0) r /= p;
        if (r == 1) return n;
        ++n;
    }
}

std::vector<double> conv_direct(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        const double ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += ai * b[j];
    }
    return out;
}

std::vector<double> conv_fft(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t out_n = a.size() + b.size() - 1;
    const std::size_t n = next_fast_size(out_n);
    const std::size_t nc = n / 2 + 1;

    double* buf_a = fftw_alloc_real(n);
    double* buf_b = fftw_alloc_real(n);
    fftw_complex* fa = fftw_alloc_complex(nc);
    fftw_complex* fb = fftw_alloc_complex(nc);

    std::fill(buf_a, buf_a + n, 0.0);
    std::fill(buf_b, buf_b + n, 0.0);
    std::copy(a.begin(), a.end(), buf_a);
    std::copy(b.begin(), b.end(), buf_b);

    fftw_plan plan_a, plan_b, plan_inv;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan_a = fftw_plan_dft_r2c_1d(static_cast<int>(n), buf_a, fa, FFTW_ESTIMATE);
        plan_b = fftw_plan_dft_r2c_1d(static_cast<int>(n), buf_b, fb, FFTW_ESTIMATE);
        plan_inv = fftw_plan_dft_c2r_1d(static_cast<int>(n), fa, buf_a, FFTW_ESTIMATE);
    }
    fftw_execute(plan_a);
    fftw_execute(plan_b);
    for (std::size_t i = 0; i < nc; ++i) {
        const std::complex<double> pa(fa[i][0], fa[i][1]);
        const std::complex<double> pb(fb[i][0], fb[i][1]);
        const std::complex<double> pr = pa * pb;
        fa[i][0] = pr.real();
        fa[i][1] = pr.imag();
    }
    fftw_execute(plan_inv);

    std::vector<double> out(out_n);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < out_n; ++i) out[i] = buf_a[i] * scale;

    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan_a);
        fftw_destroy_plan(plan_b);
        fftw_destroy_plan(plan_inv);
    }
    fftw_free(buf_a);
    fftw_free(buf_b);
    fftw_free(fa);
    fftw_free(fb);
    return out;
}

constexpr std::size_t kDirectLimit = 4096;

}  // namespace

GriddedDensity convolve(const GriddedDensity& a, const GriddedDensity& b,
                        ConvMethod method, bool allow_resample) {
    const GriddedDensity* pb = &b;
    GriddedDensity resampled = b;
    if (a.h() != b.h()) {
        if (!allow_resample)
            throw MixedGridError("convolve: grid steps differ and resampling is disabled");
        const std::size_t cells =
            static_cast<std::size_t>(std::ceil((b.hi() - b.lo()) / a.h())) + 1;
        resampled = b.resampled(b.lo(), a.h(), cells);
        pb = &resampled;
    }
    ConvMethod m = method;
    if (m == ConvMethod::automatic)
        m = std::max(a.cells(), pb->cells()) <= kDirectLimit ? ConvMethod::direct
                                                             : ConvMethod::spectral;
    std::vector<double> masses = (m == ConvMethod::direct)
                                     ? conv_direct(a.masses(), pb->masses())
                                     : conv_fft(a.masses(), pb->masses());
    const double lo = a.lo() + pb->lo() + a.h() / 2.0;
    const double total = a.total_mass() * pb->total_mass();
    double grid_sum = 0.0;
    for (double mval : masses) grid_sum += mval;
    return GriddedDensity(lo, a.h(), std::move(masses), total, total - grid_sum);
}

PiecewiseLinear cdf_of_sum(const Gamble& x, const GriddedDensity& z) {
    const PiecewiseLinear fz = z.cdf();
    const auto& edges = fz.knots();
    std::vector<double> knots;
    knots.reserve(edges.size() * x.size());
    for (const Gamble::Atom& a : x.atoms())
        for (double e : edges) knots.push_back(e + a.value);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    std::vector<double> ys(knots.size(), 0.0);
    for (const Gamble::Atom& a : x.atoms())
        for (std::size_t i = 0; i < knots.size(); ++i)
            ys[i] += a.prob * fz(knots[i] - a.value);
    return PiecewiseLinear(std::move(knots), std::move(ys));
}

GriddedDensity shift_mix(const Gamble& x, const GriddedDensity& z) {
    const double h = z.h();
    std::vector<double> out(z.cells(), 0.0);
    double lost = 0.0;
    for (const Gamble::Atom& a : x.atoms()) {
        const double offset = a.value / h;
        const double fl = std::floor(offset);
        const double frac = offset - fl;
        const auto base = static_cast<long>(fl);
        for (std::size_t i = 0; i < z.cells(); ++i) {
            const double m = a.prob * z.masses()[i];
            if (m == 0.0) continue;
            const long j0 = static_cast<long>(i) + base;
            const double m1 = m * (1.0 - frac);
            const double m2 = m * frac;
            if (j0 >= 0 && j0 < static_cast<long>(out.size()))
                out[static_cast<std::size_t>(j0)] += m1;
            else
                lost += m1;
            if (m2 != 0.0) {
                if (j0 + 1 >= 0 && j0 + 1 < static_cast<long>(out.size()))
                    out[static_cast<std::size_t>(j0 + 1)] += m2;
                else
                    lost += m2;
            }
        }
    }
    return GriddedDensity(z.lo(), h, std::move(out), z.total_mass(),
                          z.truncated_tail_mass() + lost);
}

}  // namespace noisedom
