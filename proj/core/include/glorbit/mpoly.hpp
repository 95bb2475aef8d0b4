#pragma once

#include "glorbit/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace glorbit {

using Exponent = std::vector<unsigned>;

/// Commutative polynomial in a fixed number of variables with rational
/// coefficients. Terms with zero coefficient are never stored, so two
/// polynomials are equal iff their term maps are.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  /// The coordinate function of variable i.
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly monomial(const Exponent& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  int degree() const;
  Rational coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);
  MPoly derivative(std::size_t var) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const MPoly&, const MPoly&) = default;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& s, const MPoly& a);

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// Sum of terms like "-4*eta", "x^2*y"; highest total degree first.
std::string to_string(const MPoly& p, const std::vector<std::string>& names);

}  // namespace glorbit
