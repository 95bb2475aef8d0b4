#pragma once

// Exact arithmetic in the Weyl algebra Q<x_1..x_k, D_1..D_k> with
// [D_i, x_j] = delta_ij. Operators are stored normal ordered (variables left
// of derivations). Also: principal symbols, the Poisson bracket on symbols,
// V-filtration degrees, the b-function root condition, and the sl_2 vector
// field identities.
//
// Poisson convention: {f, g} = sum_i (d f/d xi_i * d g/d x_i - d f/d x_i * d g/d xi_i).
// With it {xi, x} = 1, which matches sigma([D, x]) = sigma(1), and
// {z, xi^2 + 4 eta zeta} = -4 eta.

#include "glorbit/checks.hpp"
#include "glorbit/mpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glorbit {

class WeylOperator {
 public:
  /// Products producing a term of total degree above this throw std::overflow_error.
  static constexpr unsigned kMaxDegree = 16;

  WeylOperator() = default;
  explicit WeylOperator(std::size_t num_vars) : k_(num_vars) {}

  static WeylOperator constant(std::size_t k, const Rational& c);
  static WeylOperator variable(std::size_t k, std::size_t i);
  static WeylOperator derivation(std::size_t k, std::size_t i);
  /// c x^alpha D^beta.
  static WeylOperator term(const Exponent& alpha, const Exponent& beta, const Rational& c = 1);

  std::size_t num_vars() const { return k_; }
  /// Keys are alpha followed by beta (length 2k).
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total derivation degree; -1 for zero.
  int order() const;

  void add_term(const Exponent& key, const Rational& c);

  friend bool operator==(const WeylOperator&, const WeylOperator&) = default;
  friend WeylOperator operator+(const WeylOperator& a, const WeylOperator& b);
  friend WeylOperator operator-(const WeylOperator& a, const WeylOperator& b);
  friend WeylOperator operator-(const WeylOperator& a);
  friend WeylOperator operator*(const Rational& s, const WeylOperator& a);
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);

 private:
  std::size_t k_ = 0;
  std::map<Exponent, Rational> terms_;
};

WeylOperator weyl_mul(const WeylOperator& p, const WeylOperator& q);
WeylOperator weyl_commutator(const WeylOperator& p, const WeylOperator& q);

/// P acting on a polynomial in the same k variables.
MPoly apply(const WeylOperator& p, const MPoly& f);

/// Parses e.g. "2*z*Dz - 2*y*Dy" or "(x*Dx)^2 + 1/2"; variables are `names`,
/// derivations are "D" followed by a name (also "D_" + name). Products are
/// taken in the written order, so "Dx*x" parses to x*Dx + 1. Throws
/// std::invalid_argument on syntax errors.
WeylOperator parse_weyl(std::string_view text, const std::vector<std::string>& names);
/// Canonical form: highest total degree first, "c*x^a*Dx^b" terms.
std::string to_string(const WeylOperator& p, const std::vector<std::string>& names);

/// Symbol names xi_<name> for each variable.
std::vector<std::string> symbol_names(const std::vector<std::string>& names);

/// Top-order part with D_i replaced by xi_i, as a polynomial in
/// (x_1..x_k, xi_1..xi_k). Throws std::invalid_argument for P = 0.
MPoly principal_symbol(const WeylOperator& p);

/// Poisson bracket of two symbols in 2k variables (x first, then xi).
MPoly poisson(const MPoly& f, const MPoly& g);

/// V-filtration degree along {t_i = 0}: max over terms of
/// sum w_i * (exponent of D_{t_i} - exponent of t_i). nullopt for P = 0.
/// Weights default to 1.
std::optional<long> v_degree(const WeylOperator& p, const std::vector<std::size_t>& t_indices,
                             const std::vector<unsigned>& weights = {});

/// theta = sum t_i D_{t_i} over the given indices.
WeylOperator euler_operator(std::size_t k, const std::vector<std::size_t>& t_indices);

struct BFunctionCandidate {
  std::vector<Rational> roots;
  /// Codimension weights n_1..n_p; nonempty.
  std::vector<unsigned> weights;
};

/// Every root strictly greater than -sum(weights). Throws for empty weights.
bool tame_check(const BFunctionCandidate& c);

// ------------------------------------------------------------------ sl_2

enum class Sl2Element { H, X, Y };

/// Variables (x, y, z) are the coordinates of Z = xH + yX + zY.
const std::vector<std::string>& sl2_names();
/// (x, y, z, xi, eta, zeta).
const std::vector<std::string>& sl2_symbol_names();

/// The fundamental vector field tau(e) as a first-order operator:
/// tau(H) = 2(z Dz - y Dy), tau(X) = -z Dx + 2x Dy, tau(Y) = y Dx - 2x Dz.
WeylOperator tau_sl2(Sl2Element e);

struct Sl2Options {
  /// Values of lambda at which [Dx^2 + 4 Dy Dz - lambda, tau(Y)] = 0 is checked.
  std::vector<Rational> lambdas{0, 7, Rational(-3, 2)};
  /// Negative control: replace tau(Y) by -tau(Y).
  bool flip_tau_y = false;
};

/// Checks the relations among the sl_2 fields and their commutation with
/// Dx^2 + 4 Dy Dz - lambda, at operator level and at symbol level.
CheckList verify_sl2(const Sl2Options& options = {});

// ------------------------------------------------- normal crossings

struct CotangentSample {
  std::vector<Rational> y;
  std::vector<Rational> eta;
};

struct NormalCrossingPointResult {
  /// All symbols y_i eta_i vanish.
  bool in_symbol_variety = false;
  /// In the conormal of the coordinate stratum {y_i = 0 exactly for i in I}.
  bool in_conormal_union = false;
};

struct NormalCrossingReport {
  std::vector<NormalCrossingPointResult> points;
  CheckList checks;
};

NormalCrossingReport normal_crossing_charvar_check(std::size_t n, const std::vector<CotangentSample>& samples);

}  // namespace glorbit
