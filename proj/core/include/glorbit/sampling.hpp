#pragma once

// Seeded generators for the property harness. The stream is SplitMix64
// (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then the output is
// mixed by xor-shifts 30/27/31 and multipliers 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB. Bounded integers use rejection sampling, so a given
// seed reproduces the same matrices on every platform.

#include "glorbit/ratlin.hpp"

#include <cstdint>
#include <vector>

namespace glorbit {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform on [lo, hi].
  long uniform_int(long lo, long hi);
  /// Derived independent stream, for per-batch seeding.
  SplitMix64 fork() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// Entries uniform in [-bound, bound].
RatMatrix random_matrix(SplitMix64& rng, std::size_t n, long bound);
RatVector random_vector(SplitMix64& rng, std::size_t n, long bound);
RatVector random_nonzero_vector(SplitMix64& rng, std::size_t n, long bound);

/// L U with L, U unit triangular and off-diagonal entries in [-bound, bound];
/// determinant 1 and an integral inverse.
RatMatrix random_unimodular(SplitMix64& rng, std::size_t n, long bound);
/// Invertible g with g v0 = v0.
RatMatrix random_in_stabilizer(SplitMix64& rng, const RatVector& v0, long bound);

/// Block-diagonal normal form from Jordan blocks with small integer
/// eigenvalues (so eigenvalues repeat), companion blocks of t^2 - 2 and
/// t^2 + 1, and a 4x4 block with a size-2 Jordan chain over t^2 - 2,
/// conjugated by a random unimodular matrix.
RatMatrix random_structured_matrix(SplitMix64& rng, std::size_t n);

/// Alternates uniform entries in [-bound, bound] and structured matrices.
RatMatrix random_mixed_matrix(SplitMix64& rng, std::size_t n, long bound);

/// J with J e_1 = 0 and J e_{k+1} = e_k (ones on the superdiagonal).
RatMatrix shift_matrix(std::size_t n);

/// Block-diagonal sum of shift matrices of the given sizes.
RatMatrix nilpotent_of_type(const std::vector<unsigned>& partition);

/// Regular nilpotent X whose P-index with respect to v0 equals p (p < n).
RatMatrix regular_nilpotent_with_index(std::size_t n, std::size_t p, const RatVector& v0);

}  // namespace glorbit
