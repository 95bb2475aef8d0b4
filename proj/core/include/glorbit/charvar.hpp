#pragma once

// Membership in the cotangent-level sets that bound characteristic
// varieties: pairs (X, Y) with Y nilpotent and [X, Y] = 0 (for G), or
// [X, Y] in p^perp (for P), or [X, Y] = u v^T on the extended space; plus
// the conormal fiber of a P-orbit and the regular-nilpotent dichotomy.

#include "glorbit/checks.hpp"
#include "glorbit/orbit.hpp"
#include "glorbit/ratlin.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace glorbit {

struct CotangentPoint {
  RatMatrix x;
  RatMatrix y;
};

struct ExtendedCotangentPoint {
  RatMatrix x;
  RatVector u;
  RatMatrix y;
  RatVector v;
};

struct MembershipReport {
  /// Conjunction of `checks`.
  bool verdict = false;
  CheckList checks;
  /// For the P-variety: w with [X, Y] = v0 w^T.
  std::optional<RatVector> witness_w;
};

MembershipReport in_char_g(const CotangentPoint& pt);
MembershipReport in_char_p(const CotangentPoint& pt, const RatVector& v0);
/// Bilinear convention: the rank-one term is u v^T.
MembershipReport in_char_N(const ExtendedCotangentPoint& pt);

/// Basis of { Y : [X, Y] in p^perp }, the trace-form orthogonal of [X, p].
std::vector<RatMatrix> conormal_fiber_p(const RatMatrix& x, const RatVector& v0);

enum class FiberKind { DenseContained, WitnessFound };

struct DichotomyReport {
  FiberKind kind = FiberKind::DenseContained;
  std::size_t p_index = 0;
  std::size_t fiber_dim = 0;
  /// Number of fiber elements tested (basis plus random combinations).
  std::size_t sampled = 0;
  /// Sampled evidence: every tested element minus its scalar part is nilpotent.
  bool all_nilpotent_mod_scalars = true;
  std::optional<WitnessPair> witness;
  CheckList checks;
};

/// Requires X regular nilpotent. For index 0 tests the fiber basis and
/// `combinations` seeded random combinations (coefficients in [-bound, bound]);
/// for index >= 1 builds the semisimple witness with (a, b) = (0, 1).
DichotomyReport fiber_dichotomy(const RatMatrix& x, const RatVector& v0, std::uint64_t seed = 0,
                                std::size_t combinations = 8, long bound = 10);

std::string to_string(FiberKind kind);

}  // namespace glorbit
