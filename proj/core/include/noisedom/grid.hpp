#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "noisedom/gamble.hpp"
#include "noisedom/step_function.hpp"

namespace noisedom {

// Uniform-grid numeric measure on [lo, lo + n*h): masses()[i] is the measure
// of cell [lo + i*h, lo + (i+1)*h). Masses may be signed. total_mass() is the
// declared mass of the represented measure; it can exceed the grid sum when
// part of the measure was truncated away, and the difference is tracked in
// truncated_tail_mass().
class GriddedDensity {
public:
    GriddedDensity(double lo, double h, std::vector<double> masses);
    GriddedDensity(double lo, double h, std::vector<double> masses,
                   double total_mass, double truncated_tail_mass);

    double lo() const { return lo_; }
    double hi() const { return lo_ + h_ * static_cast<double>(masses_.size()); }
    double h() const { return h_; }
    std::size_t cells() const { return masses_.size(); }
    const std::vector<double>& masses() const { return masses_; }

    double total_mass() const { return total_; }
    double truncated_tail_mass() const { return truncated_; }
    double grid_mass() const;  // sum of cell masses

    double midpoint(std::size_t i) const { return lo_ + h_ * (static_cast<double>(i) + 0.5); }
    double density(std::size_t i) const { return masses_[i] / h_; }

    // CDF of the piecewise-constant-density interpretation; exact and
    // piecewise linear with knots at the cell edges.
    PiecewiseLinear cdf() const;

    MomentSummary moments() const;     // midpoint quadrature, normalized by grid mass
    double abs_moment(int n) const;    // int |x|^n d|mu|, midpoint quadrature
    double tv_norm() const;            // sum |m_i| + |truncated tail|

    // Reapportion masses onto a new lattice (mass within a cell treated as
    // uniformly spread). Exact when edges align, O(h) smearing otherwise.
    GriddedDensity resampled(double new_lo, double new_h, std::size_t new_cells) const;

    void write_csv(std::ostream& out) const;  // header "x,density", one row per midpoint

    static GriddedDensity point_mass_at_zero(double h);

    // cell masses of common densities, exact per cell
    static GriddedDensity gaussian(double sigma, double lo, double h, std::size_t cells);
    static GriddedDensity uniform(double from, double to, double lo, double h, std::size_t cells);
    // density of the sum of two independent uniforms on [-a, a]
    static GriddedDensity triangle(double a, double lo, double h, std::size_t cells);

private:
    double lo_;
    double h_;
    std::vector<double> masses_;
    double total_;
    double truncated_;
};

double tv_norm(const GriddedDensity& g);
// total variation of a signed measure with stepped density over [lo, hi]
double tv_norm(const StepFunction& density, double lo, double hi);

MomentSummary moments(const GriddedDensity& g);
MomentSummary moments(const Gamble& g);

// Lattices used throughout place 0 at a cell midpoint, so point masses at the
// origin and repeated self-convolutions stay exactly on-grid.
struct Lattice {
    double h;
    // smallest zero-midpoint lattice covering [lo, hi]
    static Lattice covering(double h) { return Lattice{h}; }
    double snap_lo(double lo) const;
    std::size_t cells_for(double lo, double hi) const;
};

}  // namespace noisedom
