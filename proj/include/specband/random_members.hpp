#pragma once

#include <cstdint>
#include <vector>

#include "specband/bandmatrix.hpp"
#include "specband/initial_conditions.hpp"

namespace specband {

// Deterministic uniform deviates built directly from mt19937_64 output, so
// that a seed reproduces byte-identical fixtures on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

// A member of the truncated class with the prescribed degeneration indices:
// free entries uniform in [-2, 2], entries the class forces positive uniform
// in [0.5, 2], forced zeros exact.
BandMatrix random_member(int n, int N, const std::vector<int>& m, Rng& rng);

// Upper triangular with diagonal in [0.5, 2] (positive, so the recurrence
// keeps its leading coefficients positive) and off-diagonal in [-1, 1].
InitialConditions random_initial_conditions(int n, Rng& rng);

// A degeneration profile that fits comfortably inside an N x N truncation:
// all indices small enough that every generator is certifiable from the
// reconstruction.
std::vector<int> random_profile(int n, int N, int j0, Rng& rng);

}  // namespace specband
