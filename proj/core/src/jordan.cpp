#include "glorbit/jordan.hpp"

#include "glorbit/lie.hpp"

#include <stdexcept>

namespace glorbit {

namespace {

void require_square(const RatMatrix& x) {
  if (!x.is_square() || x.dim() == 0) throw std::invalid_argument("expected a nonempty square matrix");
}

// f(s) mod m, by Horner's rule in Q[t]/(m).
RatPoly compose_mod(const RatPoly& f, const RatPoly& s, const RatPoly& m) {
  RatPoly r;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = (r * s + RatPoly::constant(*it)) % m;
  return r;
}

unsigned newton_steps(std::size_t n) {
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k + 1;
}

}  // namespace

bool is_nilpotent(const RatMatrix& x) {
  require_square(x);
  const std::size_t n = x.dim();
  const bool by_char = char_poly(x) == RatPoly::monomial(static_cast<unsigned>(n));
  const bool by_power = x.pow(static_cast<unsigned>(n)).is_zero();
  if (by_char != by_power) throw std::logic_error("is_nilpotent: characteristic polynomial and power test disagree");
  return by_char;
}

bool is_semisimple(const RatMatrix& x) {
  require_square(x);
  return is_squarefree(minimal_poly(x));
}

bool is_regular_semisimple(const RatMatrix& x) {
  require_square(x);
  return is_squarefree(char_poly(x));
}

ChevalleyDecomp chevalley(const RatMatrix& x) {
  require_square(x);
  const RatPoly chi = char_poly(x);
  const RatPoly f = squarefree_part(chi);
  const RatPoly df = f.derivative();

  RatPoly s = RatPoly::monomial(1) % chi;
  bool converged = false;
  for (unsigned step = 0; step <= newton_steps(x.dim()); ++step) {
    RatPoly fs = compose_mod(f, s, chi);
    if (fs.is_zero()) {
      converged = true;
      break;
    }
    // f'(s) is a unit mod chi: s agrees with t modulo f and gcd(f, f') = 1.
    auto inv = inverse_mod(compose_mod(df, s, chi), chi);
    if (!inv) throw std::logic_error("chevalley: f'(S) is not invertible");
    s = (s - fs * *inv) % chi;
  }
  if (!converged) throw std::logic_error("chevalley: Newton iteration did not converge");

  RatMatrix semi = poly_eval_mat(s, x);
  return {semi, x - semi, s};
}

CheckList verify_chevalley(const RatMatrix& x, const ChevalleyDecomp& d) {
  const auto n = static_cast<unsigned>(x.dim());
  return {
      {"sum_equals_x", d.semisimple + d.nilpotent == x},
      {"s_n_commute", bracket(d.semisimple, d.nilpotent).is_zero()},
      {"s_semisimple", is_squarefree(minimal_poly(d.semisimple))},
      {"n_nilpotent", d.nilpotent.pow(n).is_zero()},
      {"s_is_certificate_of_x", poly_eval_mat(d.certificate, x) == d.semisimple},
  };
}

std::vector<std::size_t> rank_sequence(const RatMatrix& n) {
  require_square(n);
  std::vector<std::size_t> r{n.dim()};
  RatMatrix p = RatMatrix::identity(n.dim());
  while (r.back() != 0 && r.size() <= n.dim() + 1) {
    p = p * n;
    r.push_back(rank(p));
  }
  return r;
}

JordanType jordan_type(const RatMatrix& n) {
  if (!is_nilpotent(n)) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
  const auto r = rank_sequence(n);
  // at_least[k] = number of blocks of size >= k = r_{k-1} - r_k.
  std::vector<std::size_t> at_least(r.size() + 1, 0);
  for (std::size_t k = 1; k < r.size(); ++k) at_least[k] = r[k - 1] - r[k];
  JordanType jt;
  for (std::size_t k = r.size() - 1; k >= 1; --k) {
    const std::size_t exactly = at_least[k] - at_least[k + 1];
    jt.partition.insert(jt.partition.end(), exactly, static_cast<unsigned>(k));
  }
  return jt;
}

bool is_regular_nilpotent(const RatMatrix& x) {
  if (!is_nilpotent(x)) return false;
  const std::size_t n = x.dim();
  const RatMatrix top = x.pow(static_cast<unsigned>(n - 1));
  const bool regular = rank(top) == 1;
  // ker X^{n-1} is a hyperplane exactly when there is a single block.
  const bool hyperplane = kernel_basis(top).size() == n - 1;
  const bool one_block = jordan_type(x).partition == std::vector<unsigned>{static_cast<unsigned>(n)};
  if (regular != hyperplane || regular != one_block)
    throw std::logic_error("is_regular_nilpotent: rank, kernel and Jordan type tests disagree");
  return regular;
}

}  // namespace glorbit
