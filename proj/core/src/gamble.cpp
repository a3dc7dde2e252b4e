#include "noisedom/gamble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "noisedom/step_function.hpp"

namespace noisedom {

Gamble::Gamble(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("gamble: no atoms");
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.value < b.value; });
    // merge duplicates so values end up strictly increasing
    std::vector<Atom> merged;
    for (const Atom& a : atoms_) {
        if (!std::isfinite(a.value)) throw std::invalid_argument("gamble: non-finite value");
        if (!(a.prob > 0.0) || a.prob > 1.0 + 1e-12)
            throw std::invalid_argument("gamble: probability outside (0,1]");
        if (!merged.empty() && a.value == merged.back().value)
            merged.back().prob += a.prob;
        else
            merged.push_back(a);
    }
    atoms_ = std::move(merged);
    double total = 0.0;
    for (const Atom& a : atoms_) total += a.prob;
    if (std::fabs(total - 1.0) > 1e-12)
        throw std::invalid_argument("gamble: probabilities sum to " + std::to_string(total));
}

double Gamble::cdf(double t) const {
    double acc = 0.0;
    for (const Atom& a : atoms_) {
        if (a.value <= t)
            acc += a.prob;
        else
            break;
    }
    return acc;
}

double Gamble::mean() const {
    double m = 0.0;
    for (const Atom& a : atoms_) m += a.value * a.prob;
    return m;
}

double Gamble::variance() const {
    const double m = mean();
    double v = 0.0;
    for (const Atom& a : atoms_) v += (a.value - m) * (a.value - m) * a.prob;
    return v;
}

MomentSummary Gamble::moments() const { return {mean(), variance()}; }

double Gamble::abs_moment(int n) const {
    double v = 0.0;
    for (const Atom& a : atoms_) v += std::pow(std::fabs(a.value), n) * a.prob;
    return v;
}

Gamble Gamble::translated(double c) const {
    std::vector<Atom> shifted = atoms_;
    for (Atom& a : shifted) a.value += c;
    return Gamble(std::move(shifted));
}

double Gamble::cdf_distance(const Gamble& other) const {
    double worst = 0.0;
    auto probe = [&](double t) {
        worst = std::max(worst, std::fabs(cdf(t) - other.cdf(t)));
    };
    for (const Atom& a : atoms_) probe(a.value);
    for (const Atom& a : other.atoms_) probe(a.value);
    return worst;
}

StepFunction cdf(const Gamble& g) {
    std::vector<double> breaks;
    std::vector<double> values{0.0};
    double acc = 0.0;
    for (const Gamble::Atom& a : g.atoms()) {
        breaks.push_back(a.value);
        acc += a.prob;
        values.push_back(acc);
    }
    values.back() = 1.0;  // absorb rounding in the final jump
    return StepFunction(std::move(breaks), std::move(values));
}

double mean_gap_via_cdf(const Gamble& x, const Gamble& y) {
    const StepFunction diff = cdf(y) - cdf(x);
    const double lo = std::min(x.min_support(), y.min_support());
    const double hi = std::max(x.max_support(), y.max_support());
    return diff.integral(lo, hi);  // diff vanishes outside [lo, hi]
}

}  // namespace noisedom
