#pragma once

#include <stdexcept>
#include <string>

namespace noisedom {

struct MixedGridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// E[X] <= E[Y]: no first-order construction exists (converse of the main theorem).
struct InfeasibleMeanOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// means differ or Var[X] >= Var[Y]: no second-order construction exists.
struct InfeasibleVarianceOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// computed mixture weight c >= 1; the smoothing kernel must be widened.
struct KernelTooNarrow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridTooNarrow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParameterTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotStrictlyBIC : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// numeric verification of a constructed noise failed; signals a grid or
// tolerance misconfiguration, not a counterexample.
struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace noisedom
