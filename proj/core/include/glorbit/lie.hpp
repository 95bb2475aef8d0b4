#pragma once

// gl_n structure: bracket, trace form, values of the fundamental vector
// fields, the stabilizer algebra p of a vector v0 and its trace-form
// orthogonal p^perp.

#include "glorbit/ratlin.hpp"

#include <optional>
#include <vector>

namespace glorbit {

/// AB - BA. Throws std::invalid_argument on dimension mismatch.
RatMatrix bracket(const RatMatrix& a, const RatMatrix& b);

/// tr(AB), the invariant form used to identify gl_n with its dual.
Rational trace_form(const RatMatrix& a, const RatMatrix& b);

/// Value at the point x of the vector field generated by z, i.e. [x, z].
RatMatrix tau_at(const RatMatrix& z, const RatMatrix& x);

/// Matrix (in row-major coordinates of gl_n) of Z -> [X, Z].
RatMatrix ad_matrix(const RatMatrix& x);

/// A Lie subalgebra of gl_n given by a basis. Construction verifies linear
/// independence and closure under the bracket.
class Subalgebra {
 public:
  Subalgebra(std::size_t n, std::vector<RatMatrix> basis);
  static Subalgebra gl(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatMatrix>& basis() const { return basis_; }
  bool contains(const RatMatrix& m) const;

 private:
  struct Trusted {};
  Subalgebra(std::size_t n, std::vector<RatMatrix> basis, Trusted);

  std::size_t n_;
  std::vector<RatMatrix> basis_;
  Span span_;
};

/// p = Lie(P) for P the stabilizer of v0, together with p^perp = { v0 w^T }.
struct StabilizerData {
  RatVector v0;
  Subalgebra p;
  std::vector<RatMatrix> p_perp;  // v0 e_j^T, j = 0..n-1

  /// M in span(p_perp), decided by comparing ranks with and without M.
  bool in_p_perp(const RatMatrix& m) const;
  /// w with M = v0 w^T when M lies in p^perp.
  std::optional<RatVector> p_perp_factor(const RatMatrix& m) const;
};

/// Throws std::invalid_argument when v0 = 0 (then P is all of G).
StabilizerData stabilizer(const RatVector& v0);

/// { Y : [X, Y] = 0 }.
Subalgebra centralizer(const RatMatrix& x);

/// dim [X, a].
std::size_t orbit_tangent_dim(const RatMatrix& x, const Subalgebra& a);

/// Trace-form orthogonal of span(ms) inside gl_n.
std::vector<RatMatrix> orthogonal_complement(std::size_t n, const std::vector<RatMatrix>& ms);

/// All pairwise products trace_form(a, b) vanish.
bool mutually_orthogonal(const std::vector<RatMatrix>& as, const std::vector<RatMatrix>& bs);

/// Rank of a family of matrices viewed as vectors of gl_n.
std::size_t span_dim(const std::vector<RatMatrix>& ms);

}  // namespace glorbit
