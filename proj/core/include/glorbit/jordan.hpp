#pragma once

// Nilpotency and semisimplicity tests, the additive Jordan (Chevalley)
// decomposition X = S + N over Q, and Jordan types of nilpotent matrices.

#include "glorbit/checks.hpp"
#include "glorbit/ratlin.hpp"

#include <vector>

namespace glorbit {

struct ChevalleyDecomp {
  RatMatrix semisimple;
  RatMatrix nilpotent;
  /// S = certificate(X); degree < n.
  RatPoly certificate;
};

/// Jordan block sizes of a nilpotent matrix, weakly decreasing.
struct JordanType {
  std::vector<unsigned> partition;
  friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// char_poly(X) = t^n, cross-checked against X^n = 0.
bool is_nilpotent(const RatMatrix& x);
/// Minimal polynomial squarefree (diagonalizable over the algebraic closure).
bool is_semisimple(const RatMatrix& x);
/// Characteristic polynomial squarefree.
bool is_regular_semisimple(const RatMatrix& x);

/// Newton lifting S <- S - f(S) f'(S)^{-1} in Q[X] against the squarefree
/// part f of char_poly(X). Total on square rational matrices.
ChevalleyDecomp chevalley(const RatMatrix& x);

/// The five defining properties of the decomposition, each checked exactly:
/// S + N = X, [S, N] = 0, S semisimple, N^n = 0, S = certificate(X).
CheckList verify_chevalley(const RatMatrix& x, const ChevalleyDecomp& d);

/// rank(N^k) for k = 0, 1, ... up to and including the first zero.
std::vector<std::size_t> rank_sequence(const RatMatrix& n);

/// Throws std::invalid_argument for non-nilpotent input.
JordanType jordan_type(const RatMatrix& n);

/// Nilpotent with a single Jordan block, i.e. rank(X^{n-1}) = 1.
bool is_regular_nilpotent(const RatMatrix& x);

}  // namespace glorbit
