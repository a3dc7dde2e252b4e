#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "noisedom/closedform.hpp"
#include "noisedom/noise_spec.hpp"

namespace noisedom {

struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::string spec_hash;            // identifies the generating spec
    std::size_t tail_reassigned = 0;  // draws with N > K remapped to N = 0
};

// Deterministic: a given (spec, n, seed) always produces the same batch.
// Substreams split off the seed, so batches can be generated in partitions.
SampleBatch sample_noise(const NoiseSpec& spec, std::size_t n, std::uint64_t seed,
                         std::uint64_t substream = 0);
SampleBatch sample_noise(const UniformNoiseSpec& spec, std::size_t n, std::uint64_t seed,
                         int truncation_k = 33, std::uint64_t substream = 0);
SampleBatch sample_noise(const NoiseSum& noise, std::size_t n, std::uint64_t seed,
                         std::uint64_t substream = 0);

struct EmpiricalVerdict {
    bool pass = false;
    double worst_gap = 0.0;  // min over pooled points of F_Y - F_X
    double at = 0.0;
};

// PASS when the empirical F_Y - F_X stays above -band on the pooled sample
// points (X dominating Y up to sampling error).
EmpiricalVerdict empirical_fosd(const SampleBatch& xs, const SampleBatch& ys, double band);

// two-sided DKW band half-width at confidence 1 - alpha
double dkw_band(std::size_t n, double alpha);

// sup_i max(|i/n - F(x_(i))|, |(i-1)/n - F(x_(i))|) against a reference CDF
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

// inverse-CDF draw support shared with the samplers: linear interpolation
// within the cell selected by the cumulative mass
class GridSampler {
public:
    explicit GridSampler(const GriddedDensity& g);
    double operator()(double u) const;  // u in [0,1)

private:
    double lo_;
    double h_;
    std::vector<double> cum_;  // cum_[i] = mass of cells < i, normalized
};

}  // namespace noisedom
