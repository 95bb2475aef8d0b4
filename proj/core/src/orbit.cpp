#include "glorbit/orbit.hpp"

#include "glorbit/jordan.hpp"
#include "glorbit/lie.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace glorbit {

namespace {

void require_nonzero(const RatVector& v, const char* what) {
  if (v.is_zero()) throw std::invalid_argument(std::string(what) + " must be nonzero");
}

void require_compatible(const RatMatrix& x, const RatVector& v) {
  if (!x.is_square() || x.dim() != v.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
}

// Chain w, Xw, ..., X^{n-1} w.
std::vector<RatVector> chain(const RatMatrix& x, const RatVector& w) {
  std::vector<RatVector> out{w};
  for (std::size_t k = 1; k < w.size(); ++k) out.push_back(x * out.back());
  return out;
}

// Matrix of M restricted to the M-invariant subspace spanned by `basis`.
RatMatrix restrict_to(const RatMatrix& m, const std::vector<RatVector>& basis) {
  const RatMatrix b = RatMatrix::from_columns(basis);
  RatMatrix r(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto c = solve(b, m * basis[j]);
    if (!c) throw std::logic_error("restrict_to: subspace is not invariant");
    for (std::size_t i = 0; i < basis.size(); ++i) r(i, j) = (*c)[i];
  }
  return r;
}

bool divides(const RatPoly& a, const RatPoly& b) { return (b % a).is_zero(); }

// Splits every element of `base` against q so that each one either divides q
// or is coprime to it.
void refine(std::vector<RatPoly>& base, const RatPoly& q) {
  std::vector<RatPoly> next;
  for (const auto& b : base) {
    RatPoly g = gcd(b, q);
    if (g.degree() > 0 && g.degree() < b.degree()) {
      next.push_back(g);
      next.push_back(divmod(b, g).first.monic());
    } else {
      next.push_back(b);
    }
  }
  base = std::move(next);
}

MPoly det_laplace(const std::vector<std::vector<MPoly>>& cols, std::vector<bool>& used_rows, std::size_t col) {
  const std::size_t n = cols.size();
  const std::size_t nv = cols[0][0].nvars();
  if (col == n) return MPoly::constant(nv, 1);
  MPoly total(nv);
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (used_rows[i]) continue;
    if (!cols[col][i].is_zero()) {
      used_rows[i] = true;
      MPoly minor = det_laplace(cols, used_rows, col + 1);
      used_rows[i] = false;
      MPoly term = cols[col][i] * minor;
      total = sign > 0 ? total + term : total - term;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

// ------------------------------------------------------------------ Krylov

RatMatrix krylov_matrix(const RatMatrix& x, const RatVector& v) {
  require_compatible(x, v);
  return RatMatrix::from_columns(chain(x, v));
}

KrylovData krylov_dim(const RatMatrix& x, const RatVector& v,
                      const std::optional<std::vector<std::size_t>>& blocks) {
  require_compatible(x, v);
  const std::size_t n = x.dim();
  KrylovData data;
  Span span(n);
  for (const auto& c : chain(x, v)) {
    // Once X^k v depends on its predecessors so do all later vectors.
    if (!span.insert(c)) break;
    data.basis.push_back(c);
  }
  data.d = data.basis.size();

  if (blocks) {
    if (std::accumulate(blocks->begin(), blocks->end(), std::size_t{0}) != n ||
        std::find(blocks->begin(), blocks->end(), 0) != blocks->end())
      throw std::invalid_argument("krylov_dim: block sizes must be positive and sum to n");
    std::vector<std::size_t> owner(n);
    std::size_t start = 0;
    for (std::size_t b = 0; b < blocks->size(); ++b) {
      for (std::size_t k = 0; k < (*blocks)[b]; ++k) owner[start + k] = b;
      start += (*blocks)[b];
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (owner[i] != owner[j] && !is_zero(x(i, j)))
          throw std::invalid_argument("krylov_dim: matrix is not block diagonal for the given blocks");
    start = 0;
    std::size_t sum = 0;
    for (std::size_t len : *blocks) {
      RatVector part(std::vector<Rational>(v.begin() + start, v.begin() + start + len));
      data.block_dims.push_back(krylov_dim(x.block(start, len), part).d);
      sum += data.block_dims.back();
      start += len;
    }
    if (sum != data.d)
      throw std::invalid_argument("krylov_dim: blocks share eigenvalues, so the block dimensions do not add up");
  }
  return data;
}

Rational sigma_eval(const RatMatrix& x, const RatVector& v0) {
  require_nonzero(v0, "v0");
  return determinant(krylov_matrix(x, v0));
}

std::vector<std::string> matrix_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      names.push_back(n < 10 ? "x" + std::to_string(i) + std::to_string(j)
                             : "x" + std::to_string(i) + "_" + std::to_string(j));
  return names;
}

MPoly sigma_poly(std::size_t n, const RatVector& v0) {
  require_nonzero(v0, "v0");
  if (v0.size() != n) throw std::invalid_argument("sigma_poly: v0 has the wrong dimension");
  if (n > 4) throw std::invalid_argument("sigma_poly: symbolic determinant limited to n <= 4");
  const std::size_t nv = n * n;
  std::vector<std::vector<MPoly>> cols;
  std::vector<MPoly> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(MPoly::constant(nv, v0[i]));
  cols.push_back(c);
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<MPoly> next(n, MPoly(nv));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!cols.back()[j].is_zero()) next[i] = next[i] + MPoly::variable(nv, i * n + j) * cols.back()[j];
    cols.push_back(std::move(next));
  }
  std::vector<bool> used(n, false);
  return det_laplace(cols, used, 0);
}

Rational evaluate_at(const MPoly& p, const RatMatrix& x) { return p.evaluate(x.flatten().entries()); }

// ------------------------------------------------------ regular nilpotents

RegularNilpotentPClass p_index(const RatMatrix& x, const RatVector& v0) {
  require_compatible(x, v0);
  require_nonzero(v0, "v0");
  if (!is_regular_nilpotent(x)) throw std::invalid_argument("p_index: matrix is not regular nilpotent");
  const std::size_t n = x.dim();
  RegularNilpotentPClass cls;
  bool found = false;
  for (std::size_t k = n; k-- > 0;) {
    if (auto w = solve(x.pow(static_cast<unsigned>(k)), v0)) {
      cls.index = k;
      cls.witness_w = *w;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("p_index: v0 not in the image of X^0");
  if ((x.pow(static_cast<unsigned>(n - 1)) * cls.witness_w).is_zero())
    throw std::logic_error("p_index: witness lies in ker X^{n-1}");
  if (cls.index != n - krylov_dim(x, v0).d) throw std::logic_error("p_index: index disagrees with n - d(X, v0)");
  return cls;
}

RatMatrix conjugator_in_P(const RatMatrix& x, const RatMatrix& x2, const RatVector& v0) {
  const auto c1 = p_index(x, v0);
  const auto c2 = p_index(x2, v0);
  if (c1.index != c2.index)
    throw std::invalid_argument("conjugator_in_P: P-indices differ (" + std::to_string(c1.index) + " vs " +
                                std::to_string(c2.index) + "), the matrices are not P-conjugate");
  const RatMatrix b1 = RatMatrix::from_columns(chain(x, c1.witness_w));
  const RatMatrix b2 = RatMatrix::from_columns(chain(x2, c2.witness_w));
  const RatMatrix g = b2 * inverse(b1);
  if (g * v0 != v0 || g * x != x2 * g) throw std::logic_error("conjugator_in_P: construction failed");
  return g;
}

WitnessPair semisimple_witness(const RatMatrix& x, const RatVector& v0, const Rational& a, const Rational& b) {
  if (a == b) throw std::invalid_argument("semisimple_witness: a == b gives a central element");
  const auto cls = p_index(x, v0);
  if (cls.index == 0)
    throw std::invalid_argument("semisimple_witness: P-orbit is dense (index 0), no witness is claimed");
  const std::size_t n = x.dim();
  const RatMatrix basis = RatMatrix::from_columns(chain(x, cls.witness_w));
  std::vector<Rational> diag(n, b);
  std::fill(diag.begin(), diag.begin() + static_cast<std::ptrdiff_t>(cls.index), a);
  const RatMatrix phi = basis * RatMatrix::diagonal(diag) * inverse(basis);
  return {phi, bracket(phi, x)};
}

CheckList verify_witness(const RatMatrix& x, const RatVector& v0, const WitnessPair& w) {
  const StabilizerData stab = stabilizer(v0);
  bool orthogonal = true;
  for (const auto& z : stab.p.basis())
    if (!is_zero(trace_form(w.bracket_value, z))) orthogonal = false;
  return {
      {"phi_semisimple", is_semisimple(w.phi)},
      {"phi_not_scalar", !w.phi.is_scalar()},
      {"bracket_value_matches", bracket(w.phi, x) == w.bracket_value},
      {"bracket_in_p_perp", stab.in_p_perp(w.bracket_value)},
      {"bracket_rank_at_most_one", rank(w.bracket_value) <= 1},
      {"bracket_columns_in_Qv0", stab.p_perp_factor(w.bracket_value).has_value()},
      {"bracket_orthogonal_to_p", orthogonal},
  };
}

bool orbit_dense_check(const RatMatrix& x, const RatVector& v0) {
  require_compatible(x, v0);
  require_nonzero(v0, "v0");
  const StabilizerData stab = stabilizer(v0);
  const bool dense = orbit_tangent_dim(x, stab.p) == rank(ad_matrix(x));
  if (is_regular_nilpotent(x) && dense != (p_index(x, v0).index == 0))
    throw std::logic_error("orbit_dense_check: tangent test disagrees with the P-index");
  return dense;
}

// ---------------------------------------------------- stratum signatures

std::vector<EigenClass> StratumSignature::eigenvalues() const {
  std::vector<EigenClass> out;
  for (const auto& c : classes)
    for (unsigned k = 0; k < c.degree; ++k) out.push_back({1, c.multiplicity, c.partition});
  return out;
}

StratumSignature stratum_signature(const RatMatrix& x, const RatVector& v0) {
  require_compatible(x, v0);
  require_nonzero(v0, "v0");
  const std::size_t n = x.dim();
  const ChevalleyDecomp cd = chevalley(x);
  const RatMatrix& s = cd.semisimple;
  const RatMatrix& nil = cd.nilpotent;

  // On K_k = ker N^k (S-invariant) the characteristic polynomial of S is
  // prod (t - lambda)^{dim ker (X - lambda)^k}; its squarefree pieces group
  // eigenvalues by that kernel dimension. Refining against all k yields a
  // coprime base whose elements each carry one Jordan profile.
  std::vector<RatPoly> base{squarefree_part(char_poly(x))};
  std::vector<std::vector<std::pair<RatPoly, unsigned>>> pieces;
  RatMatrix power = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * nil;
    const auto kernel = kernel_basis(power);
    pieces.push_back(squarefree_decomposition(char_poly(restrict_to(s, kernel))));
    for (const auto& [f, mult] : pieces.back()) refine(base, f);
    if (kernel.size() == n) break;
  }

  std::map<std::pair<unsigned, std::vector<unsigned>>, unsigned> grouped;
  for (const auto& b : base) {
    std::vector<unsigned> r{0};
    for (const auto& level : pieces) {
      unsigned dim_k = 0;
      for (const auto& [f, mult] : level)
        if (divides(b, f)) dim_k = mult;
      r.push_back(dim_k);
    }
    std::vector<unsigned> at_least(r.size() + 1, 0);
    for (std::size_t k = 1; k < r.size(); ++k) at_least[k] = r[k] - r[k - 1];
    std::vector<unsigned> partition;
    for (std::size_t k = r.size() - 1; k >= 1; --k)
      partition.insert(partition.end(), at_least[k] - at_least[k + 1], static_cast<unsigned>(k));
    const unsigned mult = r.back();

    // N restricted to ker b(S) must have each part repeated deg(b) times.
    const auto eigenspace = kernel_basis(poly_eval_mat(b, s));
    std::vector<unsigned> expected;
    for (unsigned part : partition) expected.insert(expected.end(), static_cast<std::size_t>(b.degree()), part);
    std::sort(expected.rbegin(), expected.rend());
    if (eigenspace.size() != static_cast<std::size_t>(b.degree()) * mult ||
        jordan_type(restrict_to(nil, eigenspace)).partition != expected)
      throw std::logic_error("stratum_signature: primary component disagrees with kernel profile");

    grouped[{mult, partition}] += static_cast<unsigned>(b.degree());
  }

  StratumSignature sig;
  for (const auto& [key, degree] : grouped) sig.classes.push_back({degree, key.first, key.second});
  std::sort(sig.classes.begin(), sig.classes.end());
  sig.krylov_d = krylov_dim(x, v0).d;
  return sig;
}

// ------------------------------------------------- section and transfer

RatMatrix section(const RatVector& v, const RatVector& v0) {
  require_nonzero(v, "v");
  require_nonzero(v0, "v0");
  if (v.size() != v0.size()) throw std::invalid_argument("section: dimension mismatch");
  const std::size_t n = v.size();
  auto completion = [n](const RatVector& u) {
    const std::size_t pivot = u.first_nonzero();
    std::vector<RatVector> cols{u};
    for (std::size_t j = 0; j < n; ++j)
      if (j != pivot) cols.push_back(RatVector::unit(n, j));
    return RatMatrix::from_columns(cols);
  };
  const RatMatrix g = completion(v) * inverse(completion(v0));
  if (g * v0 != v) throw std::logic_error("section: g v0 != v");
  return g;
}

RatMatrix phi_map(const RatMatrix& x, const RatVector& v, const RatVector& v0) {
  require_compatible(x, v);
  const RatMatrix g = section(v, v0);
  const RatMatrix out = inverse(g) * x * g;
  if (krylov_dim(out, v0).d != krylov_dim(x, v).d) throw std::logic_error("phi_map: Krylov dimension not preserved");
  return out;
}

// --------------------------------------------------------- genericity

Rational m_genericity_det(const RatMatrix& s, const RatMatrix& y) {
  if (!is_semisimple(s)) throw std::invalid_argument("m_genericity: S is not semisimple");
  if (!bracket(s, y).is_zero()) throw std::invalid_argument("m_genericity: Y does not commute with S");
  const std::size_t n = s.dim();
  const Subalgebra m = centralizer(s);
  const std::vector<RatMatrix> q = orthogonal_complement(n, m.basis());
  if (q.empty()) return 1;
  std::vector<RatVector> qcols;
  for (const auto& b : q) qcols.push_back(b.flatten());
  const RatMatrix qmat = RatMatrix::from_columns(qcols);
  RatMatrix ad(q.size(), q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    auto c = solve(qmat, bracket(y, q[j]).flatten());
    if (!c) throw std::logic_error("m_genericity: ad Y does not preserve q");
    for (std::size_t i = 0; i < q.size(); ++i) ad(i, j) = (*c)[i];
  }
  return determinant(ad);
}

bool m_genericity(const RatMatrix& s, const RatMatrix& y) { return !is_zero(m_genericity_det(s, y)); }

RatMatrix project_traceless(const RatMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("project_traceless: non-square matrix");
  const Rational shift = x.trace() / Rational(static_cast<long>(x.dim()));
  return x - shift * RatMatrix::identity(x.dim());
}

}  // namespace glorbit
