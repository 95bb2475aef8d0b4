#pragma once

// Orbit geometry of gl_n under G = GL_n and under the stabilizer P of a
// vector v0: the Krylov invariant d(X, v), the hypersurface Sigma where it
// drops below n, the P-orbit index of regular nilpotents with explicit
// conjugators and semisimple witnesses, stratum signatures, the section
// v -> phi(v) with phi(v) v0 = v, and the genericity test on centralizers.
//
// Matrices act on column vectors; the Krylov matrix has columns
// v, Xv, ..., X^{n-1}v.

#include "glorbit/checks.hpp"
#include "glorbit/mpoly.hpp"
#include "glorbit/ratlin.hpp"

#include <optional>
#include <string>
#include <vector>

namespace glorbit {

struct KrylovData {
  /// dim span(v, Xv, ..., X^{n-1} v).
  std::size_t d = 0;
  /// The first d vectors of the chain; they are independent.
  std::vector<RatVector> basis;
  /// Per-block dimensions when a block structure was supplied.
  std::vector<std::size_t> block_dims;
};

/// Columns v, Xv, ..., X^{n-1} v.
RatMatrix krylov_matrix(const RatMatrix& x, const RatVector& v);

/// With `blocks`, X must be block diagonal for the given block sizes (summing
/// to n) and the result is cross-checked against the sum of the per-block
/// dimensions. Throws std::invalid_argument on a block-structure violation.
KrylovData krylov_dim(const RatMatrix& x, const RatVector& v,
                      const std::optional<std::vector<std::size_t>>& blocks = std::nullopt);

/// det[v0 | X v0 | ... | X^{n-1} v0]. Zero exactly on Sigma.
Rational sigma_eval(const RatMatrix& x, const RatVector& v0);

/// The same determinant as a polynomial in the n^2 entries of a generic X,
/// ordered row-major and named x11, x12, ..., xnn. Limited to n <= 4.
MPoly sigma_poly(std::size_t n, const RatVector& v0);
std::vector<std::string> matrix_variable_names(std::size_t n);
/// Evaluates a polynomial in the entries of X (row-major variables).
Rational evaluate_at(const MPoly& p, const RatMatrix& x);

struct RegularNilpotentPClass {
  /// Largest k with v0 in the image of X^k; equals n - d(X, v0).
  std::size_t index = 0;
  /// X^index w = v0 and X^{n-1} w != 0.
  RatVector witness_w;
};

/// Throws std::invalid_argument unless X is regular nilpotent and v0 != 0.
RegularNilpotentPClass p_index(const RatMatrix& x, const RatVector& v0);

/// g with g v0 = v0 and g X g^{-1} = x2, mapping the chain (w, Xw, ...,
/// X^{n-1} w) onto the primed chain. Throws std::invalid_argument when the
/// P-indices differ (no such g exists).
RatMatrix conjugator_in_P(const RatMatrix& x, const RatMatrix& x2, const RatVector& v0);

struct WitnessPair {
  /// a on V1 = span(w, ..., X^{p-1} w), b on V2 = span(v0, ..., X^{n-p-1} v0).
  RatMatrix phi;
  /// [phi, X]; a rank <= 1 matrix with column space in Q v0.
  RatMatrix bracket_value;
};

/// Requires X regular nilpotent with P-index >= 1 and a != b.
WitnessPair semisimple_witness(const RatMatrix& x, const RatVector& v0, const Rational& a = 0,
                               const Rational& b = 1);
CheckList verify_witness(const RatMatrix& x, const RatVector& v0, const WitnessPair& w);

/// dim [X, p] == dim [X, gl_n]: the P-orbit is open in the G-orbit.
bool orbit_dense_check(const RatMatrix& x, const RatVector& v0);

/// One conjugation class of eigenvalues (over the algebraic closure) sharing
/// the same algebraic multiplicity and Jordan partition.
struct EigenClass {
  /// Number of distinct eigenvalues in the class.
  unsigned degree = 0;
  unsigned multiplicity = 0;
  /// Jordan block sizes of N at each eigenvalue of the class.
  std::vector<unsigned> partition;
  friend bool operator==(const EigenClass&, const EigenClass&) = default;
  friend auto operator<=>(const EigenClass&, const EigenClass&) = default;
};

struct StratumSignature {
  /// Sorted; the degrees sum, weighted by multiplicity, to n.
  std::vector<EigenClass> classes;
  std::size_t krylov_d = 0;
  friend bool operator==(const StratumSignature&, const StratumSignature&) = default;

  /// Per-eigenvalue (multiplicity, partition) list, each class expanded
  /// `degree` times.
  std::vector<EigenClass> eigenvalues() const;
};

StratumSignature stratum_signature(const RatMatrix& x, const RatVector& v0);

/// g with g v0 = v: v0 is completed to a basis by the standard vectors except
/// the one at its first nonzero coordinate, and that basis is sent to the
/// completion of v chosen the same way. Returns the identity when v = v0.
RatMatrix section(const RatVector& v, const RatVector& v0);

/// phi(v)^{-1} X phi(v); satisfies d(result, v0) = d(X, v).
RatMatrix phi_map(const RatMatrix& x, const RatVector& v, const RatVector& v0);

/// det of ad Y restricted to q, the trace-form orthogonal of m = centralizer(S).
/// Requires S semisimple and [S, Y] = 0 (std::invalid_argument otherwise).
Rational m_genericity_det(const RatMatrix& s, const RatMatrix& y);
bool m_genericity(const RatMatrix& s, const RatMatrix& y);

/// X - (tr X / n) I.
RatMatrix project_traceless(const RatMatrix& x);

}  // namespace glorbit
