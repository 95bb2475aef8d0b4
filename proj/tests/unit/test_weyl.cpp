#include "glorbit/sampling.hpp"
#include "glorbit/weyl.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace glorbit;
using namespace glorbit::test;

namespace {

const std::vector<std::string> kX{"x"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

WeylOperator W(const std::string& s, const std::vector<std::string>& names = kXYZ) { return parse_weyl(s, names); }

WeylOperator random_op(SplitMix64& rng, std::size_t k, unsigned max_exp) {
  WeylOperator p(k);
  const long terms = rng.uniform_int(1, 4);
  for (long t = 0; t < terms; ++t) {
    Exponent e(2 * k);
    for (auto& a : e) a = static_cast<unsigned>(rng.uniform_int(0, max_exp));
    p.add_term(e, rng.uniform_int(-4, 4));
  }
  return p;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("normal-ordered products") {
  CHECK(W("Dx", kX) * W("x", kX) == W("x*Dx + 1", kX));
  CHECK(W("x", kX) * W("Dx", kX) == W("x*Dx", kX));
  const WeylOperator e = W("x*Dx", kX);
  CHECK(e * e == W("x^2*Dx^2 + x*Dx", kX));
  CHECK(to_string(W("Dx*x", kX), kX) == "x*Dx + 1");
}

TEST_CASE("product agrees with the word-rewriting oracle") {
  SplitMix64 rng(71);
  for (int s = 0; s < 200; ++s) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const unsigned cap = k == 3 ? 1 : 2;  // keeps products under the degree cap
    const WeylOperator p = random_op(rng, k, cap), q = random_op(rng, k, cap);
    CHECK(weyl_mul(p, q) == naive_weyl_mul(p, q));
  }
}

TEST_CASE("degree cap") {
  const WeylOperator big = W("x^5*Dx^4", kX);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("commutators of the sl_2 fields") {
  const auto h = tau_sl2(Sl2Element::H), x = tau_sl2(Sl2Element::X), y = tau_sl2(Sl2Element::Y);
  CHECK(weyl_commutator(x, y) == h);
  CHECK(weyl_commutator(h, y) == Rational(-2) * y);
  CHECK(weyl_commutator(h, x) == Rational(2) * x);
  CHECK(weyl_commutator(y, y).is_zero());
}

TEST_CASE("the sl_2 fields") {
  CHECK(tau_sl2(Sl2Element::H) == W("2*z*Dz - 2*y*Dy"));
  CHECK(tau_sl2(Sl2Element::X) == W("-z*Dx + 2*x*Dy"));
  CHECK(tau_sl2(Sl2Element::Y) == W("y*Dx - 2*x*Dz"));
}

TEST_CASE("operators acting on polynomials") {
  const MPoly x = MPoly::variable(1, 0);
  CHECK(apply(W("Dx", kX), x * x) == Rational(2) * x);
  const MPoly z = MPoly::variable(3, 2);
  CHECK(apply(tau_sl2(Sl2Element::H), z) == Rational(2) * z);
  CHECK(apply(W("x^2*Dy + Dz^3"), MPoly(3)).is_zero());
}

TEST_CASE("apply is a ring action") {
  SplitMix64 rng(73);
  for (int s = 0; s < 60; ++s) {
    const WeylOperator p = random_op(rng, 2, 2), q = random_op(rng, 2, 2);
    MPoly f(2);
    for (int t = 0; t < 4; ++t) {
      Exponent e{static_cast<unsigned>(rng.uniform_int(0, 3)), static_cast<unsigned>(rng.uniform_int(0, 3))};
      f.add_term(e, rng.uniform_int(-3, 3));
    }
    CHECK(apply(p * q, f) == apply(p, apply(q, f)));
    CHECK(apply(p + q, f) == apply(p, f) + apply(q, f));
  }
}

TEST_CASE("sl_2 identity suite") {
  const auto checks = verify_sl2();
  CHECK(all_passed(checks));
  Sl2Options flipped;
  flipped.flip_tau_y = true;
  const auto bad = verify_sl2(flipped);
  CHECK_FALSE(all_passed(bad));
  bool bracket_failed = false;
  for (const auto& c : bad)
    if (c.name == "bracket_tauX_tauY_equals_tauH") bracket_failed = !c.passed;
  CHECK(bracket_failed);
}

TEST_CASE("principal symbols") {
  const auto& sn = sl2_symbol_names();
  CHECK(to_string(principal_symbol(tau_sl2(Sl2Element::Y)), sn) == "-2*x*zeta + y*xi");
  CHECK(to_string(principal_symbol(W("Dx^2 + 4*Dy*Dz - 7")), sn) == "xi^2 + 4*eta*zeta");
  CHECK(principal_symbol(W("x")) == MPoly::variable(6, 0));
  CHECK_THROWS_AS(principal_symbol(WeylOperator(3)), std::invalid_argument);
}

TEST_CASE("Poisson brackets") {
  const MPoly z = MPoly::variable(6, 2);
  const MPoly cas = principal_symbol(W("Dx^2 + 4*Dy*Dz"));
  CHECK(poisson(z, cas) == Rational(-4) * MPoly::variable(6, 4));
  CHECK(poisson(cas, cas).is_zero());
  CHECK(poisson(MPoly::variable(2, 1), MPoly::variable(2, 0)) == MPoly::constant(2, 1));
}

TEST_CASE("V-filtration degrees") {
  const WeylOperator theta = euler_operator(3, {0, 1});
  CHECK(theta == W("x*Dx + y*Dy"));
  CHECK(v_degree(theta, {0, 1}) == 0);
  CHECK(v_degree(W("Dx"), {0}) == 1);
  CHECK(v_degree(W("x^2*Dx"), {0}) == -1);
  CHECK(v_degree(W("x^2*Dx + y*Dx*Dy"), {0, 1}, {2, 1}) == 2);
  CHECK_FALSE(v_degree(WeylOperator(3), {0}));
}

TEST_CASE("b-function root condition") {
  CHECK(tame_check({{0}, {1, 1}}));
  CHECK_FALSE(tame_check({{-3}, {1, 1}}));
  CHECK_FALSE(tame_check({{-2}, {1, 1}}));
  CHECK(tame_check({{}, {1, 1}}));
  CHECK(tame_check({{Rational(-1, 2)}, {1}}));
  CHECK_THROWS_AS(tame_check({{0}, {}}), std::invalid_argument);
}

TEST_CASE("normal crossing characteristic variety") {
  const auto r = normal_crossing_charvar_check(2, {{{1, 1}, {0, 0}}, {{0, 1}, {5, 0}}, {{1, 1}, {1, 0}}});
  REQUIRE(r.points.size() == 3);
  CHECK(r.points[0].in_symbol_variety);
  CHECK(r.points[1].in_symbol_variety);
  CHECK_FALSE(r.points[2].in_symbol_variety);
  for (const auto& p : r.points) CHECK(p.in_symbol_variety == p.in_conormal_union);
  CHECK(all_passed(r.checks));
}

TEST_CASE("parser and printer round trip") {
  SplitMix64 rng(79);
  for (int s = 0; s < 100; ++s) {
    const WeylOperator p = random_op(rng, 3, 2);
    CHECK(parse_weyl(to_string(p, kXYZ), kXYZ) == p);
  }
  CHECK(W("(x*Dx)^2 + 1/2", kX) == W("x^2*Dx^2 + x*Dx + 1/2", kX));
  CHECK(W("D_x*x", kX) == W("Dx*x", kX));
  CHECK(to_string(WeylOperator(1), kX) == "0");
  CHECK_THROWS_AS(W("x +", kX), std::invalid_argument);
  CHECK_THROWS_AS(W("Dw", kX), std::invalid_argument);
  CHECK_THROWS_AS(W("x)", kX), std::invalid_argument);
}

}  // TEST_SUITE
