#include "glorbit/jordan.hpp"
#include "glorbit/lie.hpp"
#include "glorbit/sampling.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace glorbit;
using namespace glorbit::test;

TEST_SUITE("jordan") {

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(J(3)));
  CHECK_FALSE(is_nilpotent(RatMatrix::identity(3)));
  const RatMatrix m{{1, -1}, {1, -1}};
  CHECK((m * m).is_zero());
  CHECK(is_nilpotent(m));
}

TEST_CASE("semisimplicity") {
  CHECK(is_semisimple(diag({1, 2})));
  CHECK_FALSE(is_semisimple(J(2)));
  CHECK(is_semisimple(RatMatrix{{0, 1}, {1, 0}}));
  CHECK(is_semisimple(RatMatrix{{0, -1}, {1, 0}}));  // eigenvalues +-i
  CHECK(is_semisimple(RatMatrix::identity(3)));
}

TEST_CASE("regular semisimple") {
  CHECK(is_regular_semisimple(diag({1, 2, 3})));
  CHECK_FALSE(is_regular_semisimple(diag({1, 1, 2})));
  // Companion matrix of t^3 - t.
  const RatMatrix c{{0, 0, 0}, {1, 0, 1}, {0, 1, 0}};
  CHECK(char_poly(c) == RatPoly({0, -1, 0, 1}));
  CHECK(is_regular_semisimple(c));
}

TEST_CASE("Chevalley decomposition examples") {
  const auto d1 = chevalley(diag({1, 2}));
  CHECK(d1.semisimple == diag({1, 2}));
  CHECK(d1.nilpotent.is_zero());

  const auto d2 = chevalley(RatMatrix{{1, 1}, {0, 1}});
  CHECK(d2.semisimple == RatMatrix::identity(2));
  CHECK(d2.nilpotent == E(2, 1, 2));

  const RatMatrix x{{1, 1, 0}, {0, 1, 0}, {0, 0, 2}};
  const auto d3 = chevalley(x);
  CHECK(d3.semisimple == diag({1, 1, 2}));
  CHECK(d3.nilpotent == E(3, 1, 2));
  CHECK(all_passed(verify_chevalley(x, d3)));
  CHECK(verify_chevalley(x, d3).size() == 5);
}

TEST_CASE("Chevalley decomposition recovers a planted S + N") {
  // X = g (D + N0) g^-1 with D diagonal, N0 strictly upper and [D, N0] = 0.
  // Uniqueness of the decomposition forces S = g D g^-1.
  SplitMix64 rng(31);
  for (int s = 0; s < 40; ++s) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 5));
    std::vector<Rational> dv;
    for (std::size_t i = 0; i < n; ++i) dv.push_back(rng.uniform_int(-1, 1));
    RatMatrix n0(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (dv[i] == dv[j]) n0(i, j) = rng.uniform_int(-2, 2);
    const RatMatrix dm = RatMatrix::diagonal(dv);
    REQUIRE(bracket(dm, n0).is_zero());
    const RatMatrix g = random_unimodular(rng, n, 2), gi = inverse(g);
    const RatMatrix x = g * (dm + n0) * gi;
    const auto d = chevalley(x);
    CHECK(d.semisimple == g * dm * gi);
    CHECK(d.nilpotent == g * n0 * gi);
    CHECK(all_passed(verify_chevalley(x, d)));
  }
}

TEST_CASE("Chevalley decomposition with irrational eigenvalues") {
  // Two Jordan blocks over the roots of t^2 - 2, written over Q.
  RatMatrix x(4, 4);
  x(0, 1) = 2;
  x(1, 0) = 1;
  x(2, 3) = 2;
  x(3, 2) = 1;
  x(0, 2) = 1;
  x(1, 3) = 1;
  const auto d = chevalley(x);
  CHECK(all_passed(verify_chevalley(x, d)));
  CHECK_FALSE(d.nilpotent.is_zero());
  CHECK(minimal_poly(d.semisimple) == RatPoly({-2, 0, 1}));
}

TEST_CASE("verify_chevalley rejects wrong decompositions") {
  const RatMatrix x{{1, 1}, {0, 1}};
  const ChevalleyDecomp wrong{x, RatMatrix::zero(2), RatPoly({0, 1})};
  const auto checks = verify_chevalley(x, wrong);
  CHECK_FALSE(all_passed(checks));
}

TEST_CASE("Jordan types") {
  CHECK(jordan_type(J(4)).partition == std::vector<unsigned>{4});
  CHECK(jordan_type(RatMatrix::zero(3)).partition == std::vector<unsigned>{1, 1, 1});
  CHECK(jordan_type(direct_sum(J(2), J(2))).partition == std::vector<unsigned>{2, 2});
  CHECK(rank_sequence(direct_sum(J(2), J(2))) == std::vector<std::size_t>{4, 2, 0});
  CHECK_THROWS_AS(jordan_type(RatMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("Jordan type of a conjugated planted nilpotent") {
  SplitMix64 rng(37);
  const std::vector<std::vector<unsigned>> parts{{3, 2, 1}, {2, 2, 2}, {4, 1, 1}, {6}, {1, 1, 1, 1, 1, 1}, {3, 3}};
  for (const auto& p : parts) {
    const RatMatrix g = random_unimodular(rng, 6, 3);
    CHECK(jordan_type(g * nilpotent_of_type(p) * inverse(g)).partition == p);
  }
}

TEST_CASE("regular nilpotent") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(is_regular_nilpotent(J(n)));
  CHECK_FALSE(is_regular_nilpotent(direct_sum(J(2), J(2))));
  CHECK_FALSE(is_regular_nilpotent(diag({1, 2})));
  CHECK_FALSE(is_regular_nilpotent(RatMatrix::identity(3)));
}

}  // TEST_SUITE
