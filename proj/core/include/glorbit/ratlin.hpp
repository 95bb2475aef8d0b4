#pragma once

// Exact linear algebra over Q: vectors, (possibly rectangular) matrices,
// univariate polynomials, elimination and the polynomial invariants of a
// square matrix. Every value is immutable once built and no routine here
// uses floating point.

#include "glorbit/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glorbit {

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : e_(n) {}
  explicit RatVector(std::vector<Rational> entries) : e_(std::move(entries)) {}
  RatVector(std::initializer_list<Rational> entries) : e_(entries) {}

  /// Standard basis vector e_i (0-based).
  static RatVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  const Rational& operator[](std::size_t i) const { return e_[i]; }
  Rational& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Rational>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool is_zero() const;
  /// Index of the first nonzero entry, or size() for the zero vector.
  std::size_t first_nonzero() const;

  friend bool operator==(const RatVector&, const RatVector&) = default;
  friend RatVector operator+(const RatVector& a, const RatVector& b);
  friend RatVector operator-(const RatVector& a, const RatVector& b);
  friend RatVector operator*(const Rational& s, const RatVector& a);

 private:
  std::vector<Rational> e_;
};

Rational dot(const RatVector& a, const RatVector& b);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t n) { return RatMatrix(n, n); }
  /// Matrix unit E_ij (0-based indices).
  static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static RatMatrix diagonal(const std::vector<Rational>& d);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  /// Rank-one matrix u v^T.
  static RatMatrix outer(const RatVector& u, const RatVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Dimension of a square matrix.
  std::size_t dim() const { return rows_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  std::vector<RatVector> columns() const;
  /// Row-major flattening, the coordinates of gl_n used by every linear map on matrices.
  RatVector flatten() const;
  static RatMatrix unflatten(const RatVector& v, std::size_t rows, std::size_t cols);

  RatMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_scalar() const;
  RatMatrix pow(unsigned k) const;
  /// Square sub-block with rows/cols [start, start+len).
  RatMatrix block(std::size_t start, std::size_t len) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Univariate polynomial, coefficients lowest degree first, never with a
/// trailing zero coefficient.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs) : RatPoly(std::vector<Rational>(coeffs)) {}

  static RatPoly constant(const Rational& c) { return RatPoly({c}); }
  static RatPoly monomial(unsigned k, const Rational& c = 1);
  /// The polynomial t - root.
  static RatPoly linear(const Rational& root) { return RatPoly({-root, 1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  RatPoly monic() const;
  RatPoly derivative() const;
  Rational evaluate(const Rational& x) const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& s, const RatPoly& a);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws std::domain_error when dividing by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
/// Monic gcd (zero only when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<RatPoly> inverse_mod(const RatPoly& a, const RatPoly& m);
std::string to_string(const RatPoly& p, const std::string& var = "t");

/// Reduced row-echelon form and its pivot columns.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(const RatMatrix& m);

/// Rank over Q via fraction-free (Bareiss) elimination on the row-wise
/// integer rescaling of m.
std::size_t rank(const RatMatrix& m);
/// Rank of the matrix whose columns are the given vectors.
std::size_t rank(const std::vector<RatVector>& vectors);

/// Null space basis, one vector per free column in ascending order, with the
/// free coordinate set to 1.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

Rational determinant(const RatMatrix& m);
/// Throws std::domain_error for singular input.
RatMatrix inverse(const RatMatrix& m);
/// Some x with a x = b (free variables set to zero), if the system is consistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// det(tI - M), monic of degree n, by the Faddeev-LeVerrier recurrence.
RatPoly char_poly(const RatMatrix& m);
/// Least-degree monic p with p(M) = 0, found as the first linear dependence
/// among I, M, M^2, ...
RatPoly minimal_poly(const RatMatrix& m);
/// p / gcd(p, p'), made monic. Throws std::invalid_argument for p = 0.
RatPoly squarefree_part(const RatPoly& p);
/// Yun's algorithm: p = c * prod f_i^i with f_i squarefree, pairwise coprime
/// and monic. Returns the nonconstant (f_i, i) in increasing multiplicity.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& p);
bool is_squarefree(const RatPoly& p);
/// p(M) by Horner's rule.
RatMatrix poly_eval_mat(const RatPoly& p, const RatMatrix& m);

/// Incrementally built subspace of Q^d kept in reduced echelon form.
class Span {
 public:
  explicit Span(std::size_t ambient) : ambient_(ambient) {}
  Span(std::size_t ambient, const std::vector<RatVector>& generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool contains(const RatVector& v) const;
  /// Adds v; returns false (and changes nothing) when v is already in the span.
  bool insert(const RatVector& v);

 private:
  RatVector reduce(RatVector v) const;
  std::size_t ambient_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace glorbit
