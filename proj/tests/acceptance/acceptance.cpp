// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "glorbit/charvar.hpp"
#include "glorbit/commands.hpp"
#include "glorbit/jordan.hpp"
#include "glorbit/lie.hpp"
#include "glorbit/orbit.hpp"
#include "glorbit/sampling.hpp"
#include "glorbit/weyl.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace glorbit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

RatMatrix shift(std::size_t n) { return shift_matrix(n); }

Outcome ac1_sl2() {
  const Report r = cmd_sl2();
  const Json j = r.json();
  Outcome o;
  o.ok = r.passed() && j["outputs"]["poisson_z_casimir"] == "-4*eta";
  o.detail = std::to_string(j["counts"]["pass"].get<int>()) + " checks";
  return o;
}

Outcome ac2_chevalley() {
  Outcome o;
  std::size_t total = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    SplitMix64 rng(2000 + n);
    for (int s = 0; s < 500; ++s) {
      const RatMatrix x = random_mixed_matrix(rng, n, 10);
      const auto checks = verify_chevalley(x, chevalley(x));
      o.ok = o.ok && checks.size() == 5 && all_passed(checks);
      ++total;
    }
  }
  o.detail = std::to_string(total) + " matrices";
  return o;
}

Outcome ac3_krylov_sigma() {
  Outcome o;
  std::size_t deficient = 0, conjugations = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    SplitMix64 rng(3000 + n);
    for (int s = 0; s < 1000; ++s) {
      const RatMatrix x = random_mixed_matrix(rng, n, 10);
      RatVector v0 = random_nonzero_vector(rng, n, 10);
      if (s % 4 == 0) v0 = RatVector::unit(n, static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 1)));
      const std::size_t d = krylov_dim(x, v0).d;
      deficient += d < n;
      o.ok = o.ok && ((sigma_eval(x, v0) == 0) == (d < n));
    }
    for (int base = 0; base < 10; ++base) {
      const RatMatrix x = random_mixed_matrix(rng, n, 10);
      const RatVector v0 = random_nonzero_vector(rng, n, 10);
      const std::size_t d = krylov_dim(x, v0).d;
      for (int c = 0; c < 100; ++c) {
        const RatMatrix h = random_in_stabilizer(rng, v0, 3);
        o.ok = o.ok && h * v0 == v0 && krylov_dim(h * x * inverse(h), v0).d == d;
        ++conjugations;
      }
    }
  }
  o.ok = o.ok && deficient > 0;
  o.ok = o.ok && sigma_poly(2, RatVector::unit(2, 1)) == -MPoly::variable(4, 1);
  o.detail = "3000 samples (" + std::to_string(deficient) + " with d < n), " + std::to_string(conjugations) +
             " P-conjugations";
  return o;
}

Outcome ac4_classification() {
  Outcome o;
  SplitMix64 rng(4000);
  std::size_t pairs = 0, rejections = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const RatVector v0 = random_nonzero_vector(rng, n, 3);
    for (std::size_t p = 0; p < n; ++p) {
      const RatMatrix x = regular_nilpotent_with_index(n, p, v0);
      o.ok = o.ok && is_regular_nilpotent(x) && p_index(x, v0).index == p && p == n - krylov_dim(x, v0).d;
      for (int k = 0; k < 10; ++k) {
        const RatMatrix h1 = random_in_stabilizer(rng, v0, 2), h2 = random_in_stabilizer(rng, v0, 2);
        const RatMatrix a = h1 * x * inverse(h1), b = h2 * x * inverse(h2);
        const RatMatrix g = conjugator_in_P(a, b, v0);
        o.ok = o.ok && g * v0 == v0 && g * a * inverse(g) == b;
        ++pairs;
      }
      const RatMatrix other = regular_nilpotent_with_index(n, (p + 1) % n, v0);
      try {
        conjugator_in_P(x, other, v0);
        o.ok = false;
      } catch (const std::invalid_argument&) {
        ++rejections;
      }
    }
  }
  o.detail = std::to_string(pairs) + " same-index pairs, " + std::to_string(rejections) + " cross-index rejections";
  return o;
}

Outcome ac5_witness() {
  Outcome o;
  SplitMix64 rng(5000);
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t p = 1; p < n; ++p) {
      const RatVector v0 = random_nonzero_vector(rng, n, 3);
      const RatMatrix x = regular_nilpotent_with_index(n, p, v0);
      const auto st = stabilizer(v0);
      for (int t = 0; t < 10; ++t) {
        Rational a = rng.uniform_int(-10, 10), b = rng.uniform_int(-10, 10);
        if (a == b) b += 1;
        const auto w = semisimple_witness(x, v0, a, b);
        const auto factor = st.p_perp_factor(w.bracket_value);
        o.ok = o.ok && all_passed(verify_witness(x, v0, w)) && w.bracket_value == bracket(w.phi, x) &&
               st.in_p_perp(w.bracket_value) && rank(w.bracket_value) <= 1 && factor &&
               RatMatrix::outer(v0, *factor) == w.bracket_value;
        ++count;
      }
    }
  o.detail = std::to_string(count) + " witnesses";
  return o;
}

Outcome ac6_containments() {
  Outcome o;
  std::size_t points = 0, in_g = 0, p_only = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    SplitMix64 rng(6000 + n);
    for (int s = 0; s < 1000; ++s) {
      const RatVector v0 = random_nonzero_vector(rng, n, 5);
      RatMatrix x = random_mixed_matrix(rng, n, 5);
      RatMatrix y;
      switch (s % 5) {
        case 0: y = random_matrix(rng, n, 5); break;
        case 1: y = chevalley(x).nilpotent; break;
        case 2: y = RatMatrix::zero(n); break;
        case 3: {
          y = RatMatrix::zero(n);
          for (const auto& f : conormal_fiber_p(x, v0)) y = y + Rational(rng.uniform_int(-2, 2)) * f;
          break;
        }
        default: {
          // Nilpotent Y and X with [X, Y] in p_perp, planted in the P-variety.
          // Y needs a non-dense P-orbit, otherwise the fiber is its centralizer.
          if (s % 2) {
            y = regular_nilpotent_with_index(n, static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(n) - 1)), v0);
          } else {
            const RatMatrix g = random_unimodular(rng, n, 2);
            y = g * shift(n).pow(static_cast<unsigned>(n - 1)) * inverse(g);
          }
          x = RatMatrix::zero(n);
          for (const auto& f : conormal_fiber_p(y, v0)) x = x + Rational(rng.uniform_int(-2, 2)) * f;
        }
      }
      const bool g = in_char_g({x, y}).verdict;
      const bool p = in_char_p({x, y}, v0).verdict;
      const bool ext = in_char_N({x, RatVector(n), y, RatVector(n)}).verdict;
      const std::size_t fdim = conormal_fiber_p(x, v0).size();
      o.ok = o.ok && (!g || p) && ext == g && fdim + orbit_tangent_dim(x, stabilizer(v0).p) == n * n;
      in_g += g;
      p_only += p && !g;
      ++points;
    }
  }
  o.ok = o.ok && in_g > 0 && p_only > 0;
  o.detail = std::to_string(points) + " points (" + std::to_string(in_g) + " in the G-variety, " +
             std::to_string(p_only) + " only in the P-variety)";
  return o;
}

Outcome ac7_dichotomy() {
  Outcome o;
  SplitMix64 rng(7000);
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t p = 0; p < n; ++p)
      for (int t = 0; t < 5; ++t) {
        const RatVector v0 = random_nonzero_vector(rng, n, 3);
        const RatMatrix x = regular_nilpotent_with_index(n, p, v0);
        o.ok = o.ok && orbit_dense_check(x, v0) == (p_index(x, v0).index == 0);
        const RatMatrix g = random_unimodular(rng, n, 2);
        const RatMatrix y = g * shift(n) * inverse(g);
        o.ok = o.ok && orbit_dense_check(y, v0) == (p_index(y, v0).index == 0);
        count += 2;
      }
    const auto c = centralizer(shift(n));
    o.ok = o.ok && c.dim() == n;
    for (const auto& b : c.basis()) o.ok = o.ok && chevalley(b).semisimple.is_scalar();
  }
  o.detail = std::to_string(count) + " regular nilpotents";
  return o;
}

Outcome ac8_section() {
  Outcome o;
  SplitMix64 rng(8000);
  std::size_t count = 0;
  for (int s = 0; s < 500; ++s) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 4));
    const RatMatrix x = random_mixed_matrix(rng, n, 5);
    const RatVector v = random_nonzero_vector(rng, n, 5);
    const RatVector v0 = s % 2 ? random_nonzero_vector(rng, n, 5) : RatVector::unit(n, n - 1);
    const RatMatrix moved = phi_map(x, v, v0);
    o.ok = o.ok && section(v, v0) * v0 == v && krylov_dim(moved, v0).d == krylov_dim(x, v).d &&
           stratum_signature(moved, v0) == stratum_signature(x, v);
    ++count;
  }
  o.detail = std::to_string(count) + " pairs";
  return o;
}

Outcome ac9_m_genericity() {
  Outcome o;
  std::size_t count = 0;
  const std::vector<long> grid{-2, -1, 0, 1, 2};
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<Rational> sd;
    for (std::size_t i = 0; i < n; ++i) sd.push_back(static_cast<long>(2 * i + 1));
    const RatMatrix s = RatMatrix::diagonal(sd);
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      std::vector<Rational> yd;
      for (auto i : idx) yd.push_back(grid[i]);
      bool distinct = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) distinct = distinct && yd[i] != yd[j];
      o.ok = o.ok && m_genericity(s, RatMatrix::diagonal(yd)) == distinct;
      ++count;
      std::size_t k = 0;
      while (k < n && ++idx[k] == grid.size()) idx[k++] = 0;
      if (k == n) break;
    }
  }
  o.detail = std::to_string(count) + " grid points";
  return o;
}

Outcome ac10_tame() {
  Outcome o;
  std::size_t count = 0;
  // Every composition of p into positive weights, p = 1..8.
  for (unsigned p = 1; p <= 8; ++p)
    for (unsigned mask = 0; mask < (1u << (p - 1)); ++mask) {
      std::vector<unsigned> w{1};
      for (unsigned b = 0; b + 1 < p; ++b) {
        if (mask & (1u << b))
          w.push_back(1);
        else
          ++w.back();
      }
      const Rational boundary = -static_cast<long>(p);
      o.ok = o.ok && tame_check({{0}, w}) && !tame_check({{boundary}, w}) &&
             tame_check({{boundary + Rational(1, 1000)}, w});
      ++count;
    }
  o.detail = std::to_string(count) + " weight vectors";
  return o;
}

Outcome ac11_determinism() {
  RunConfig cfg;
  cfg.seed = 20240611;
  const Report a = cmd_fuzz(cfg), b = cmd_fuzz(cfg);
  Outcome o;
  o.ok = a.dump() == b.dump() && a.passed();
  o.detail = std::to_string(a.dump().size()) + " bytes, n=3, " + std::to_string(cfg.samples) + " samples";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "sl_2 identities and Poisson check", ac1_sl2, 1.0},
      {2, "Chevalley invariants, n = 2..5", ac2_chevalley, 60.0},
      {3, "Krylov dimension and Sigma", ac3_krylov_sigma, 0},
      {4, "regular nilpotent P-classification", ac4_classification, 0},
      {5, "semisimple witness invariants", ac5_witness, 0},
      {6, "characteristic variety containments", ac6_containments, 0},
      {7, "dense/witness dichotomy", ac7_dichotomy, 0},
      {8, "section transfer", ac8_section, 0},
      {9, "m genericity on a grid", ac9_m_genericity, 0},
      {10, "tameness root condition", ac10_tame, 0},
      {11, "fuzz report determinism", ac11_determinism, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    failures += !o.ok;
    std::printf("AC%-2d %s  %s: %s (%.2f s)\n", c.id, o.ok ? "PASS" : "FAIL", c.title, o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
