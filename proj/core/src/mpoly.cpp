#include "glorbit/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glorbit {

namespace {

void check_same(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial variable count mismatch");
}

unsigned total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponent& e, const Rational& c) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total(e)));
  return d;
}

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (glorbit::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (glorbit::is_zero(it->second)) terms_.erase(it);
  }
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    d.add_term(f, Rational(static_cast<long>(e[var])) * c);
  }
  return d;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point size mismatch");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  check_same(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  check_same(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MPoly operator-(const MPoly& a) { return Rational(-1) * a; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_same(a, b);
  MPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.nvars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly operator*(const Rational& s, const MPoly& a) {
  MPoly r(a.nvars_);
  if (is_zero(s)) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

std::string to_string(const MPoly& p, const std::vector<std::string>& names) {
  if (names.size() != p.nvars()) throw std::invalid_argument("variable name count mismatch");
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    unsigned da = total(a.first), db = total(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace glorbit
