#include "glorbit/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace glorbit {

namespace {

void check_same(const WeylOperator& a, const WeylOperator& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("Weyl operators over different variable counts");
}

unsigned total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// x^a D^b * x^c D^d = sum_kappa prod_i C(b_i,k_i) C(c_i,k_i) k_i! x^{a+c-k} D^{b+d-k}.
void multiply_terms(const Exponent& lhs, const Rational& cl, const Exponent& rhs, const Rational& cr,
                    std::size_t k, WeylOperator& out) {
  Exponent kappa(k, 0);
  for (;;) {
    Rational coeff = cl * cr;
    Exponent key(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      const unsigned b = lhs[k + i], c = rhs[i], kk = kappa[i];
      coeff *= Rational(binomial(b, kk) * binomial(c, kk) * factorial(kk));
      key[i] = lhs[i] + c - kk;
      key[k + i] = b + rhs[k + i] - kk;
    }
    if (total(key) > WeylOperator::kMaxDegree)
      throw std::overflow_error("Weyl product exceeds the total degree cap of " +
                                std::to_string(WeylOperator::kMaxDegree));
    out.add_term(key, coeff);
    // Next kappa with kappa_i <= min(b_i, c_i).
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (kappa[i] < std::min(lhs[k + i], rhs[i])) {
        ++kappa[i];
        break;
      }
      kappa[i] = 0;
    }
    if (i == k) break;
  }
}

}  // namespace

// --------------------------------------------------------------- algebra

WeylOperator WeylOperator::constant(std::size_t k, const Rational& c) {
  WeylOperator p(k);
  p.add_term(Exponent(2 * k, 0), c);
  return p;
}

WeylOperator WeylOperator::variable(std::size_t k, std::size_t i) {
  Exponent e(2 * k, 0);
  e.at(i) = 1;
  WeylOperator p(k);
  p.add_term(e, 1);
  return p;
}

WeylOperator WeylOperator::derivation(std::size_t k, std::size_t i) {
  Exponent e(2 * k, 0);
  e.at(k + i) = 1;
  WeylOperator p(k);
  p.add_term(e, 1);
  return p;
}

WeylOperator WeylOperator::term(const Exponent& alpha, const Exponent& beta, const Rational& c) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("Weyl term: exponent length mismatch");
  Exponent key = alpha;
  key.insert(key.end(), beta.begin(), beta.end());
  WeylOperator p(alpha.size());
  p.add_term(key, c);
  return p;
}

int WeylOperator::order() const {
  int ord = -1;
  for (const auto& [e, c] : terms_) {
    int o = 0;
    for (std::size_t i = 0; i < k_; ++i) o += static_cast<int>(e[k_ + i]);
    ord = std::max(ord, o);
  }
  return ord;
}

void WeylOperator::add_term(const Exponent& key, const Rational& c) {
  if (key.size() != 2 * k_) throw std::invalid_argument("Weyl term: key length mismatch");
  if (glorbit::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (glorbit::is_zero(it->second)) terms_.erase(it);
  }
}

WeylOperator operator+(const WeylOperator& a, const WeylOperator& b) {
  check_same(a, b);
  WeylOperator r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

WeylOperator operator-(const WeylOperator& a, const WeylOperator& b) {
  check_same(a, b);
  WeylOperator r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

WeylOperator operator-(const WeylOperator& a) { return Rational(-1) * a; }

WeylOperator operator*(const Rational& s, const WeylOperator& a) {
  WeylOperator r(a.k_);
  for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
  return r;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  check_same(a, b);
  WeylOperator r(a.k_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) multiply_terms(ea, ca, eb, cb, a.k_, r);
  return r;
}

WeylOperator weyl_mul(const WeylOperator& p, const WeylOperator& q) { return p * q; }

WeylOperator weyl_commutator(const WeylOperator& p, const WeylOperator& q) { return p * q - q * p; }

MPoly apply(const WeylOperator& p, const MPoly& f) {
  const std::size_t k = p.num_vars();
  if (f.nvars() != k) throw std::invalid_argument("apply: variable count mismatch");
  MPoly out(k);
  for (const auto& [e, c] : p.terms()) {
    MPoly g = f;
    for (std::size_t i = 0; i < k && !g.is_zero(); ++i)
      for (unsigned r = 0; r < e[k + i]; ++r) g = g.derivative(i);
    Exponent alpha(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k));
    out = out + MPoly::monomial(alpha, c) * g;
  }
  return out;
}

// ----------------------------------------------------------- text syntax

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  WeylOperator parse() {
    WeylOperator r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("operator syntax error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t k() const { return names_.size(); }

  WeylOperator expr() {
    WeylOperator r(k());
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    WeylOperator t = term();
    r = neg ? r - t : r + t;
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  WeylOperator term() {
    WeylOperator r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  WeylOperator factor() {
    WeylOperator base = primary();
    if (!eat('^')) return base;
    unsigned e = static_cast<unsigned>(integer().get_ui());
    WeylOperator r = WeylOperator::constant(k(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  WeylOperator primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      WeylOperator r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      if (eat('/')) den = integer();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return WeylOperator::constant(k(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return identifier(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  WeylOperator identifier(const std::string& id) {
    for (std::size_t i = 0; i < k(); ++i)
      if (names_[i] == id) return WeylOperator::variable(k(), i);
    for (std::size_t i = 0; i < k(); ++i)
      if (id == "D" + names_[i] || id == "D_" + names_[i]) return WeylOperator::derivation(k(), i);
    fail("unknown identifier '" + id + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylOperator parse_weyl(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

std::string to_string(const WeylOperator& p, const std::vector<std::string>& names) {
  const std::size_t k = p.num_vars();
  if (names.size() != k) throw std::invalid_argument("to_string: variable name count mismatch");
  if (p.is_zero()) return "0";
  std::vector<std::string> all = names;
  for (const auto& n : names) all.push_back("D" + n);
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const unsigned da = total(a.first), db = total(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += all[i];
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

std::vector<std::string> symbol_names(const std::vector<std::string>& names) {
  std::vector<std::string> out = names;
  for (const auto& n : names) out.push_back("xi_" + n);
  return out;
}

// ----------------------------------------------------------- symbols

MPoly principal_symbol(const WeylOperator& p) {
  if (p.is_zero()) throw std::invalid_argument("principal_symbol of the zero operator");
  const std::size_t k = p.num_vars();
  const int ord = p.order();
  MPoly s(2 * k);
  for (const auto& [e, c] : p.terms()) {
    unsigned o = 0;
    for (std::size_t i = 0; i < k; ++i) o += e[k + i];
    if (static_cast<int>(o) == ord) s.add_term(e, c);
  }
  return s;
}

MPoly poisson(const MPoly& f, const MPoly& g) {
  if (f.nvars() != g.nvars() || f.nvars() % 2 != 0) throw std::invalid_argument("poisson: incompatible symbols");
  const std::size_t k = f.nvars() / 2;
  MPoly r(f.nvars());
  for (std::size_t i = 0; i < k; ++i) r = r + f.derivative(k + i) * g.derivative(i) - f.derivative(i) * g.derivative(k + i);
  return r;
}

std::optional<long> v_degree(const WeylOperator& p, const std::vector<std::size_t>& t_indices,
                             const std::vector<unsigned>& weights) {
  if (!weights.empty() && weights.size() != t_indices.size())
    throw std::invalid_argument("v_degree: one weight per t variable");
  if (p.is_zero()) return std::nullopt;
  const std::size_t k = p.num_vars();
  long best = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    long deg = 0;
    for (std::size_t j = 0; j < t_indices.size(); ++j) {
      const std::size_t i = t_indices[j];
      if (i >= k) throw std::invalid_argument("v_degree: t index out of range");
      const long w = weights.empty() ? 1 : weights[j];
      deg += w * (static_cast<long>(e[k + i]) - static_cast<long>(e[i]));
    }
    best = first ? deg : std::max(best, deg);
    first = false;
  }
  return best;
}

WeylOperator euler_operator(std::size_t k, const std::vector<std::size_t>& t_indices) {
  WeylOperator theta(k);
  for (std::size_t i : t_indices) theta = theta + WeylOperator::variable(k, i) * WeylOperator::derivation(k, i);
  return theta;
}

bool tame_check(const BFunctionCandidate& c) {
  if (c.weights.empty()) throw std::invalid_argument("tame_check: weights must be nonempty");
  const long codim = std::accumulate(c.weights.begin(), c.weights.end(), 0L);
  const Rational bound(-codim);
  return std::all_of(c.roots.begin(), c.roots.end(), [&](const Rational& r) { return r > bound; });
}

// ------------------------------------------------------------------ sl_2

const std::vector<std::string>& sl2_names() {
  static const std::vector<std::string> names{"x", "y", "z"};
  return names;
}

const std::vector<std::string>& sl2_symbol_names() {
  static const std::vector<std::string> names{"x", "y", "z", "xi", "eta", "zeta"};
  return names;
}

WeylOperator tau_sl2(Sl2Element e) {
  switch (e) {
    case Sl2Element::H:
      return parse_weyl("2*z*Dz - 2*y*Dy", sl2_names());
    case Sl2Element::X:
      return parse_weyl("-z*Dx + 2*x*Dy", sl2_names());
    case Sl2Element::Y:
      return parse_weyl("y*Dx - 2*x*Dz", sl2_names());
  }
  throw std::invalid_argument("tau_sl2: unknown element");
}

CheckList verify_sl2(const Sl2Options& options) {
  const auto& names = sl2_names();
  const WeylOperator th = tau_sl2(Sl2Element::H);
  const WeylOperator tx = tau_sl2(Sl2Element::X);
  const WeylOperator ty = options.flip_tau_y ? -tau_sl2(Sl2Element::Y) : tau_sl2(Sl2Element::Y);
  const WeylOperator x = WeylOperator::variable(3, 0), y = WeylOperator::variable(3, 1), z = WeylOperator::variable(3, 2);

  CheckList checks;
  checks.push_back({"x_tauH_plus_y_tauX_plus_z_tauY_zero", (x * th + y * tx + z * ty).is_zero()});
  checks.push_back({"bracket_tauX_tauY_equals_tauH", weyl_commutator(tx, ty) == th});
  checks.push_back({"bracket_tauH_tauY_equals_minus2_tauY", weyl_commutator(th, ty) == Rational(-2) * ty});
  checks.push_back({"z_tauY_equals_minus_x_tauH_minus_y_tauX", z * ty == -(x * th) - y * tx});
  for (const auto& lambda : options.lambdas) {
    const WeylOperator q = parse_weyl("Dx^2 + 4*Dy*Dz", names) - WeylOperator::constant(3, lambda);
    checks.push_back({"casimir_commutes_with_tauY_lambda_" + to_string(lambda), weyl_commutator(q, ty).is_zero()});
  }

  const MPoly casimir_symbol = principal_symbol(parse_weyl("Dx^2 + 4*Dy*Dz - 7", names));
  const MPoly minus_4eta = Rational(-4) * MPoly::variable(6, 4);
  checks.push_back({"casimir_symbol_is_xi2_plus_4_eta_zeta",
                    casimir_symbol == MPoly::variable(6, 3) * MPoly::variable(6, 3) +
                                          Rational(4) * MPoly::variable(6, 4) * MPoly::variable(6, 5)});
  checks.push_back({"poisson_z_casimir_is_minus_4eta", poisson(MPoly::variable(6, 2), casimir_symbol) == minus_4eta});
  const WeylOperator comm = weyl_commutator(z, parse_weyl("Dx^2 + 4*Dy*Dz", names));
  checks.push_back({"commutator_symbol_matches_poisson",
                    comm.order() == 1 && principal_symbol(comm) == minus_4eta});
  checks.push_back({"tauY_symbol_is_y_xi_minus_2x_zeta",
                    principal_symbol(tau_sl2(Sl2Element::Y)) ==
                        MPoly::variable(6, 1) * MPoly::variable(6, 3) -
                            Rational(2) * MPoly::variable(6, 0) * MPoly::variable(6, 5)});
  return checks;
}

// ------------------------------------------------- normal crossings

NormalCrossingReport normal_crossing_charvar_check(std::size_t n, const std::vector<CotangentSample>& samples) {
  if (n == 0) throw std::invalid_argument("normal_crossing_charvar_check: n must be positive");
  std::vector<MPoly> symbols;
  for (std::size_t i = 0; i < n; ++i)
    symbols.push_back(principal_symbol(WeylOperator::variable(n, i) * WeylOperator::derivation(n, i)));

  NormalCrossingReport rep;
  bool agree = true;
  for (const auto& s : samples) {
    if (s.y.size() != n || s.eta.size() != n) throw std::invalid_argument("cotangent sample has the wrong size");
    std::vector<Rational> point = s.y;
    point.insert(point.end(), s.eta.begin(), s.eta.end());
    NormalCrossingPointResult r;
    r.in_symbol_variety = std::all_of(symbols.begin(), symbols.end(),
                                      [&](const MPoly& p) { return is_zero(p.evaluate(point)); });
    // Stratum S_I with I = {i : y_i = 0}; its conormal leaves eta_i free on I
    // and forces eta_j = 0 off I.
    r.in_conormal_union = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(s.y[j]) && !is_zero(s.eta[j])) r.in_conormal_union = false;
    agree = agree && r.in_symbol_variety == r.in_conormal_union;
    rep.points.push_back(r);
  }
  rep.checks.push_back({"symbol_variety_equals_conormal_union", agree});
  return rep;
}

}  // namespace glorbit
