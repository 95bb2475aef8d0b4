#include "glorbit/lie.hpp"

#include <stdexcept>

namespace glorbit {

namespace {

void require_same_square(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.dim() != b.dim())
    throw std::invalid_argument("gl_n: dimension mismatch");
}

std::vector<RatVector> flatten_all(const std::vector<RatMatrix>& ms) {
  std::vector<RatVector> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.flatten());
  return out;
}

std::vector<RatMatrix> unflatten_all(const std::vector<RatVector>& vs, std::size_t n) {
  std::vector<RatMatrix> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(RatMatrix::unflatten(v, n, n));
  return out;
}

}  // namespace

RatMatrix bracket(const RatMatrix& a, const RatMatrix& b) {
  require_same_square(a, b);
  return a * b - b * a;
}

Rational trace_form(const RatMatrix& a, const RatMatrix& b) {
  require_same_square(a, b);
  const std::size_t n = a.dim();
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(a(i, j)) && !is_zero(b(j, i))) s += a(i, j) * b(j, i);
  return s;
}

RatMatrix tau_at(const RatMatrix& z, const RatMatrix& x) { return bracket(x, z); }

RatMatrix ad_matrix(const RatMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("ad of non-square matrix");
  const std::size_t n = x.dim();
  RatMatrix ad(n * n, n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      // [X, E_kl] = sum_i X_ik E_il - sum_j X_lj E_kj
      const std::size_t col = k * n + l;
      for (std::size_t i = 0; i < n; ++i) ad(i * n + l, col) += x(i, k);
      for (std::size_t j = 0; j < n; ++j) ad(k * n + j, col) -= x(l, j);
    }
  return ad;
}

// ------------------------------------------------------------ subalgebras

Subalgebra::Subalgebra(std::size_t n, std::vector<RatMatrix> basis, Trusted)
    : n_(n), basis_(std::move(basis)), span_(n * n, flatten_all(basis_)) {}

Subalgebra::Subalgebra(std::size_t n, std::vector<RatMatrix> basis)
    : n_(n), basis_(std::move(basis)), span_(n * n) {
  for (const auto& b : basis_) {
    if (!b.is_square() || b.dim() != n) throw std::invalid_argument("subalgebra: basis dimension mismatch");
    if (!span_.insert(b.flatten())) throw std::invalid_argument("subalgebra: basis is linearly dependent");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (!span_.contains(bracket(basis_[i], basis_[j]).flatten()))
        throw std::invalid_argument("subalgebra: span not closed under the bracket");
}

Subalgebra Subalgebra::gl(std::size_t n) {
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.push_back(RatMatrix::unit(n, i, j));
  return Subalgebra(n, std::move(basis), Trusted{});
}

bool Subalgebra::contains(const RatMatrix& m) const {
  if (!m.is_square() || m.dim() != n_) return false;
  return span_.contains(m.flatten());
}

// ------------------------------------------------------------- stabilizer

bool StabilizerData::in_p_perp(const RatMatrix& m) const {
  std::vector<RatVector> cols = flatten_all(p_perp);
  const std::size_t base = rank(cols);
  cols.push_back(m.flatten());
  return rank(cols) == base;
}

std::optional<RatVector> StabilizerData::p_perp_factor(const RatMatrix& m) const {
  const std::size_t i0 = v0.first_nonzero();
  RatVector w = Rational(1 / v0[i0]) * m.row(i0);
  if (RatMatrix::outer(v0, w) != m) return std::nullopt;
  return w;
}

StabilizerData stabilizer(const RatVector& v0) {
  if (v0.is_zero()) throw std::invalid_argument("stabilizer: v0 must be nonzero");
  const std::size_t n = v0.size();

  // A -> A v0 as an n x n^2 matrix: (A v0)_i = sum_j A_ij v0_j.
  RatMatrix act(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) act(i, i * n + j) = v0[j];
  std::vector<RatMatrix> p_basis = unflatten_all(kernel_basis(act), n);

  std::vector<RatMatrix> perp;
  for (std::size_t j = 0; j < n; ++j) perp.push_back(RatMatrix::outer(v0, RatVector::unit(n, j)));

  StabilizerData data{v0, Subalgebra(n, std::move(p_basis)), std::move(perp)};

  if (data.p.dim() != n * n - n) throw std::logic_error("stabilizer: dim p != n^2 - n");
  for (const auto& a : data.p.basis())
    if (!(a * v0).is_zero()) throw std::logic_error("stabilizer: p element does not fix v0");
  if (!mutually_orthogonal(data.p.basis(), data.p_perp))
    throw std::logic_error("stabilizer: p and p_perp are not orthogonal");
  // Cross-check the explicit p_perp basis against the computed orthogonal complement.
  auto complement = orthogonal_complement(n, data.p.basis());
  std::vector<RatMatrix> both = complement;
  both.insert(both.end(), data.p_perp.begin(), data.p_perp.end());
  if (complement.size() != n || span_dim(data.p_perp) != n || span_dim(both) != n)
    throw std::logic_error("stabilizer: p_perp does not match the orthogonal complement of p");
  return data;
}

Subalgebra centralizer(const RatMatrix& x) {
  const std::size_t n = x.dim();
  return Subalgebra(n, unflatten_all(kernel_basis(ad_matrix(x)), n));
}

std::size_t orbit_tangent_dim(const RatMatrix& x, const Subalgebra& a) {
  if (!x.is_square() || x.dim() != a.n()) throw std::invalid_argument("orbit_tangent_dim: dimension mismatch");
  std::vector<RatVector> images;
  images.reserve(a.dim());
  for (const auto& z : a.basis()) images.push_back(bracket(x, z).flatten());
  return rank(images);
}

std::vector<RatMatrix> orthogonal_complement(std::size_t n, const std::vector<RatMatrix>& ms) {
  if (ms.empty()) return Subalgebra::gl(n).basis();
  // tr(A Q) = <vec(A^T), vec(Q)>.
  std::vector<RatVector> rows;
  rows.reserve(ms.size());
  for (const auto& m : ms) rows.push_back(m.transpose().flatten());
  return unflatten_all(kernel_basis(RatMatrix::from_rows(rows)), n);
}

bool mutually_orthogonal(const std::vector<RatMatrix>& as, const std::vector<RatMatrix>& bs) {
  for (const auto& a : as)
    for (const auto& b : bs)
      if (!is_zero(trace_form(a, b))) return false;
  return true;
}

std::size_t span_dim(const std::vector<RatMatrix>& ms) { return rank(flatten_all(ms)); }

}  // namespace glorbit
