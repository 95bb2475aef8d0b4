#include "glorbit/commands.hpp"
#include "glorbit/sampling.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace glorbit;
using namespace glorbit::test;

TEST_SUITE("json") {

TEST_CASE("matrix encoding uses num/den strings") {
  const RatMatrix m{{Rational(1, 2), 3}, {-4, Rational(-5, 6)}};
  CHECK(encode(m).dump() == R"([["1/2","3"],["-4","-5/6"]])");
  CHECK(decode_matrix(encode(m)) == m);
  CHECK(parse_matrix_text(R"([[1, "2/4"], ["-3", 0]])") == RatMatrix{{1, Rational(1, 2)}, {-3, 0}});
}

TEST_CASE("round trips") {
  SplitMix64 rng(83);
  for (int s = 0; s < 30; ++s) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const RatMatrix m = Rational(1, 3) * random_matrix(rng, n, 9);
    CHECK(decode_matrix(Json::parse(encode(m).dump())) == m);
    const RatVector v = random_vector(rng, n, 9);
    CHECK(decode_vector(encode(v)) == v);
    const RatPoly p = char_poly(m);
    CHECK(decode_poly(encode(p)) == p);
    const auto d = chevalley(m);
    const auto d2 = decode_chevalley(encode(d));
    CHECK(d2.semisimple == d.semisimple);
    CHECK(d2.nilpotent == d.nilpotent);
    CHECK(d2.certificate == d.certificate);
    const auto c = centralizer(m);
    CHECK(decode_subalgebra(encode(c)).basis() == c.basis());
    const RatVector v0 = random_nonzero_vector(rng, n, 3);
    const auto st = decode_stabilizer(encode(stabilizer(v0)));
    CHECK(st.v0 == v0);
    CHECK(st.p.basis() == stabilizer(v0).p.basis());
    CHECK(st.p_perp == stabilizer(v0).p_perp);
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_matrix_text("[[1,2],[3]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("[[1,2],"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text(R"([["1/0"]])"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("[[1.5]]"), std::invalid_argument);
  CHECK_THROWS_AS(decode_stabilizer(Json::parse(R"({"v0":["1","0"],"p_perp_basis":[]})")), std::invalid_argument);
  CHECK(parse_vector_text("1,0,-1/2") == RatVector{1, 0, Rational(-1, 2)});
  CHECK(parse_vector_text("[\"1\", 2]") == RatVector{1, 2});
  CHECK_THROWS_AS(parse_vector_text("1,,2"), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("commands") {

TEST_CASE("jordan reports") {
  const auto r = cmd_jordan(J(3)).json();
  CHECK(r["outputs"]["nilpotent_partition"] == Json::array({3}));
  CHECK(decode_matrix(r["outputs"]["chevalley"]["S"]).is_zero());
  CHECK(r["counts"]["fail"] == 0);

  const auto d = cmd_jordan(diag({1, 2})).json();
  CHECK(decode_matrix(d["outputs"]["chevalley"]["N"]).is_zero());

  const RatMatrix x{{1, 1}, {0, 2}};
  const auto u = cmd_jordan(x).json();
  const RatMatrix s = decode_matrix(u["outputs"]["chevalley"]["S"]);
  CHECK(s == x);
  CHECK(char_poly(s) == RatPoly::linear(1) * RatPoly::linear(2));
  CHECK(decode_matrix(u["outputs"]["chevalley"]["N"]).is_zero());
  CHECK(u["outputs"]["is_semisimple"] == true);
}

TEST_CASE("stratum reports") {
  const auto a = cmd_stratum(J(2), e(2, 2)).json();
  CHECK(a["outputs"]["signature"]["krylov_d"] == 2);
  CHECK(a["outputs"]["dense"] == true);
  const auto b = cmd_stratum(J(2), e(2, 1)).json();
  CHECK(b["outputs"]["signature"]["krylov_d"] == 1);
  CHECK(b["outputs"]["dense"] == false);
  const auto c = cmd_stratum(RatMatrix::zero(2), e(2, 1)).json();
  CHECK(c["outputs"]["signature"]["krylov_d"] == 1);
  CHECK(c["counts"]["fail"] == 0);
}

TEST_CASE("tame reports") {
  CHECK(cmd_tame({0}, {1, 1}).json()["outputs"]["tame"] == true);
  CHECK(cmd_tame({-2}, {1, 1}).json()["outputs"]["tame"] == false);
  CHECK(cmd_tame({Rational(-1, 2)}, {1}).json()["outputs"]["tame"] == true);
}

TEST_CASE("sl2 report and its negative control") {
  const Report ok = cmd_sl2();
  CHECK(ok.passed());
  CHECK(ok.json()["outputs"]["poisson_z_casimir"] == "-4*eta");
  CHECK(ok.json()["certified_checks"]["negative_control_detected"] == true);
  const Report bad = cmd_sl2(true);
  CHECK_FALSE(bad.passed());
  CHECK(bad.exit_code() == 1);
}

TEST_CASE("report counts and repeated checks") {
  Report r("demo", Json::object());
  r.check("a", true);
  r.check("b", true);
  r.check("a", false);
  const Json j = r.json();
  CHECK(j["certified_checks"]["a"] == false);
  CHECK(j["counts"]["pass"] == 1);
  CHECK(j["counts"]["fail"] == 1);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("other command wrappers pass on valid input") {
  CHECK(cmd_krylov(J(3), e(3, 3), std::nullopt).passed());
  CHECK(cmd_krylov(direct_sum(J(2), diag({5})), RatVector{0, 1, 1}, std::vector<std::size_t>{2, 1}).passed());
  CHECK(cmd_sigma(J(3), e(3, 3)).passed());
  CHECK(cmd_sigma_symbolic(2, e(2, 2)).json()["outputs"]["symbolic"] == "-x12");
  CHECK(cmd_witness(J(3), e(3, 1), 0, 1).passed());
  CHECK(cmd_conjugate(E(2, 1, 2), Rational(2) * E(2, 1, 2), e(2, 1)).passed());
  CHECK(cmd_charvar(diag({1, 0}), E(2, 1, 2), e(2, 1), e(2, 1), e(2, 2)).passed());
  CHECK(cmd_fiber(J(2), e(2, 1), 0).passed());
  CHECK(cmd_section(e(2, 2), e(2, 1), J(2)).passed());
  CHECK(cmd_mgeneric(diag({1, -1}), diag({2, 3})).json()["outputs"]["det_ad_Y_on_q"] == "-1");
}

TEST_CASE("fuzz reports are deterministic and catch injected faults") {
  RunConfig cfg;
  cfg.samples = 15;
  cfg.seed = 99;
  const Report a = cmd_fuzz(cfg), b = cmd_fuzz(cfg);
  CHECK(a.dump() == b.dump());
  CHECK(a.passed());
  cfg.seed = 100;
  CHECK(cmd_fuzz(cfg).dump() != a.dump());
  cfg.inject_fault = true;
  const Json f = cmd_fuzz(cfg).json();
  CHECK(f["certified_checks"]["lie.trace_form_ad_invariance"] == false);
  CHECK(f["certified_checks"]["orbit.sigma_iff_krylov_deficient"] == false);
  CHECK(f["counts"]["fail"] == 2);
  cfg.samples = 0;
  CHECK_THROWS_AS(cmd_fuzz(cfg), std::invalid_argument);
}

}  // TEST_SUITE
