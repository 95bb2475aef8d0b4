#include "glorbit/ratlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace glorbit {

// ---------------------------------------------------------------- vectors

RatVector RatVector::unit(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

bool RatVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return glorbit::is_zero(x); });
}

std::size_t RatVector::first_nonzero() const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!glorbit::is_zero(e_[i])) return i;
  return e_.size();
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// --------------------------------------------------------------- matrices

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  RatMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  if (cols.empty()) return {};
  RatMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw std::invalid_argument("column size mismatch");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("row size mismatch");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::outer(const RatVector& u, const RatVector& v) {
  RatMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(std::vector<Rational>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<RatVector> RatMatrix::columns() const {
  std::vector<RatVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

RatVector RatMatrix::flatten() const { return RatVector(a_); }

RatMatrix RatMatrix::unflatten(const RatVector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
  RatMatrix m(rows, cols);
  m.a_ = v.entries();
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RatMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return glorbit::is_zero(x); });
}

bool RatMatrix::is_scalar() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !glorbit::is_zero((*this)(i, j))) return false;
      if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
    }
  return true;
}

RatMatrix RatMatrix::pow(unsigned k) const {
  if (!is_square()) throw std::invalid_argument("power of non-square matrix");
  RatMatrix r = identity(rows_);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

RatMatrix RatMatrix::block(std::size_t start, std::size_t len) const {
  RatMatrix b(len, len);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) b(i, j) = (*this)(start + i, start + j);
  return b;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
  return r;
}

RatMatrix operator-(const RatMatrix& a) {
  RatMatrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = -a.a_[k];
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix r(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (is_zero(b(k, j))) continue;
        t = aik * b(k, j);
        r(i, j) += t;
      }
    }
  return r;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  RatVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!is_zero(a(i, j)) && !is_zero(v[j])) r[i] += a(i, j) * v[j];
  return r;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = s * a.a_[k];
  return r;
}

// ------------------------------------------------------------ polynomials

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && glorbit::is_zero(c_.back())) c_.pop_back();
}

RatPoly RatPoly::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return inv * (*this);
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return RatPoly(std::move(d));
}

Rational RatPoly::evaluate(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
  return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
  return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(r));
}

RatPoly operator*(const Rational& s, const RatPoly& a) {
  std::vector<Rational> r(a.c_.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = s * a.c_[k];
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(a.degree() - b.degree() + 1);
  const auto& bc = b.coefficients();
  Rational lead_inv = 1 / b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational q = rem[k + b.degree()] * lead_inv;
    quo[k] = q;
    if (is_zero(q)) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * bc[j];
  }
  rem.resize(b.degree());
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::optional<RatPoly> inverse_mod(const RatPoly& a, const RatPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  RatPoly r0 = m, r1 = a % m;
  RatPoly s0, s1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return ((1 / r0.leading()) * s0) % m;
}

std::string to_string(const RatPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = mag == 1;
    if (!unit || k == 0) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

// ------------------------------------------------------------ elimination

RowEchelon rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // Scale each row by the lcm of its denominators to get an integer matrix.
  std::vector<Integer> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(RatMatrix::from_columns(vectors));
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = 1 / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

// ------------------------------------------------- polynomial invariants

RatPoly char_poly(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk = RatMatrix::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / Rational(static_cast<long>(k));
  }
  return RatPoly(std::move(c));
}

RatPoly minimal_poly(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal_poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVector> powers{RatMatrix::identity(n).flatten()};
  RatMatrix p = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * m;
    powers.push_back(p.flatten());
    auto ker = kernel_basis(RatMatrix::from_columns(powers));
    if (!ker.empty()) {
      // I..M^{k-1} are independent, so the kernel is one-dimensional with a
      // nonzero last coordinate.
      return RatPoly(ker.front().entries()).monic();
    }
  }
  throw std::logic_error("minimal_poly: no dependence found up to degree n");
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of the zero polynomial");
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

bool is_squarefree(const RatPoly& p) { return !p.is_zero() && gcd(p, p.derivative()).degree() == 0; }

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition of the zero polynomial");
  std::vector<std::pair<RatPoly, unsigned>> out;
  if (p.degree() == 0) return out;
  RatPoly a = p.monic();
  RatPoly b = gcd(a, a.derivative());
  RatPoly c = divmod(a, b).first;
  RatPoly d = divmod(a.derivative(), b).first - c.derivative();
  for (unsigned i = 1; c.degree() > 0; ++i) {
    RatPoly f = gcd(c, d);
    if (f.degree() > 0) out.emplace_back(f, i);
    c = divmod(c, f).first;
    d = divmod(d, f).first - c.derivative();
  }
  return out;
}

RatMatrix poly_eval_mat(const RatPoly& p, const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("poly_eval_mat of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix r = RatMatrix::zero(n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r = r * m;
    for (std::size_t i = 0; i < n; ++i) r(i, i) += *it;
  }
  return r;
}

// ------------------------------------------------------------------ spans

Span::Span(std::size_t ambient, const std::vector<RatVector>& generators) : ambient_(ambient) {
  for (const auto& g : generators) insert(g);
}

RatVector Span::reduce(RatVector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("span: vector size mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v[pivots_[k]];
    if (is_zero(f)) continue;
    const RatVector& row = rows_[k];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!is_zero(row[j])) v[j] -= f * row[j];
  }
  return v;
}

bool Span::contains(const RatVector& v) const { return reduce(v).is_zero(); }

bool Span::insert(const RatVector& v) {
  RatVector r = reduce(v);
  std::size_t p = r.first_nonzero();
  if (p == ambient_) return false;
  Rational inv = 1 / r[p];
  rows_.push_back(inv * r);
  pivots_.push_back(p);
  return true;
}

}  // namespace glorbit
