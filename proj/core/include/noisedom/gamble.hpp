#pragma once

#include <vector>

namespace noisedom {

struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;  // second central moment, >= 0
};

// Finite-support money gamble: atoms (value, probability) with strictly
// increasing values and probabilities summing to one.
class Gamble {
public:
    struct Atom {
        double value;
        double prob;
    };

    // Atoms need not arrive sorted; equal values are merged. Throws
    // std::invalid_argument if probabilities are outside (0,1] or do not
    // sum to 1 within 1e-12.
    explicit Gamble(std::vector<Atom> atoms);

    static Gamble point_mass(double v) { return Gamble({{v, 1.0}}); }

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    double min_support() const { return atoms_.front().value; }
    double max_support() const { return atoms_.back().value; }

    double cdf(double t) const;  // right-continuous
    double mean() const;
    double variance() const;
    MomentSummary moments() const;
    double abs_moment(int n) const;  // E|X|^n

    Gamble translated(double c) const;

    // sup-norm distance between the two CDFs; zero iff equal distributions
    double cdf_distance(const Gamble& other) const;

private:
    std::vector<Atom> atoms_;
};

class StepFunction;

// Right-continuous CDF of a gamble as a step function.
StepFunction cdf(const Gamble& g);

// Exact integral of (F_Y - F_X) over the real line; equals E[X] - E[Y].
double mean_gap_via_cdf(const Gamble& x, const Gamble& y);

}  // namespace noisedom
