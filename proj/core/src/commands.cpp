#include "glorbit/commands.hpp"

#include "glorbit/sampling.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace glorbit {

// ------------------------------------------------------------------ Report

Report::Report(std::string command, Json inputs) {
  body_ = {{"command", std::move(command)},
           {"inputs", std::move(inputs)},
           {"outputs", Json::object()},
           {"certified_checks", Json::object()}};
}

void Report::check(const std::string& name, bool passed) {
  auto& slot = body_["certified_checks"][name];
  if (!slot.is_null()) {
    // Repeated names accumulate as a conjunction.
    if (slot.get<bool>() && !passed) {
      --passes_;
      ++failures_;
      slot = false;
    }
    return;
  }
  slot = passed;
  ++(passed ? passes_ : failures_);
}

void Report::checks(const CheckList& list, const std::string& prefix) {
  for (const auto& c : list) check(prefix + c.name, c.passed);
}

Json Report::json() const {
  Json j = body_;
  j["counts"] = {{"pass", passes_}, {"fail", failures_}};
  return j;
}

std::string Report::dump() const { return json().dump(2) + "\n"; }

// ---------------------------------------------------------- single shots

Report cmd_jordan(const RatMatrix& x) {
  Report r("jordan", {{"X", encode(x)}});
  const ChevalleyDecomp d = chevalley(x);
  r.output("chevalley", encode(d));
  r.output("char_poly", encode(char_poly(x)));
  r.output("minimal_poly", encode(minimal_poly(x)));
  r.output("nilpotent_partition", encode(jordan_type(d.nilpotent)));
  r.output("is_nilpotent", is_nilpotent(x));
  r.output("is_semisimple", is_semisimple(x));
  r.output("is_regular_semisimple", is_regular_semisimple(x));
  r.output("is_regular_nilpotent", is_regular_nilpotent(x));
  r.checks(verify_chevalley(x, d), "chevalley.");
  return r;
}

Report cmd_stratum(const RatMatrix& x, const RatVector& v0) {
  Report r("stratum", {{"X", encode(x)}, {"v0", encode(v0)}});
  const StratumSignature sig = stratum_signature(x, v0);
  const Rational sigma = sigma_eval(x, v0);
  const bool dense = orbit_dense_check(x, v0);
  r.output("signature", encode(sig));
  r.output("sigma", encode(sigma));
  r.output("in_sigma", is_zero(sigma));
  r.output("dense", dense);
  std::size_t weighted = 0;
  for (const auto& c : sig.classes) weighted += static_cast<std::size_t>(c.degree) * c.multiplicity;
  r.check("multiplicities_sum_to_n", weighted == x.dim());
  r.check("sigma_zero_iff_d_below_n", is_zero(sigma) == (sig.krylov_d < x.dim()));
  return r;
}

Report cmd_krylov(const RatMatrix& x, const RatVector& v, const std::optional<std::vector<std::size_t>>& blocks) {
  Json in = {{"X", encode(x)}, {"v", encode(v)}};
  if (blocks) in["blocks"] = *blocks;
  Report r("krylov", in);
  const KrylovData k = krylov_dim(x, v, blocks);
  r.output("krylov", encode(k));
  r.check("d_equals_rank_of_krylov_matrix", k.d == rank(krylov_matrix(x, v)));
  r.check("d_zero_iff_v_zero", (k.d == 0) == v.is_zero());
  if (blocks) {
    std::size_t sum = 0;
    for (auto b : k.block_dims) sum += b;
    r.check("d_is_sum_of_block_dims", sum == k.d);
  }
  return r;
}

Report cmd_sigma(const RatMatrix& x, const RatVector& v0) {
  Report r("sigma", {{"X", encode(x)}, {"v0", encode(v0)}});
  const Rational sigma = sigma_eval(x, v0);
  const std::size_t d = krylov_dim(x, v0).d;
  r.output("sigma", encode(sigma));
  r.output("d", d);
  r.output("in_sigma", is_zero(sigma));
  r.check("sigma_zero_iff_d_below_n", is_zero(sigma) == (d < x.dim()));
  if (x.dim() <= 4) {
    const MPoly p = sigma_poly(x.dim(), v0);
    r.output("symbolic", to_string(p, matrix_variable_names(x.dim())));
    r.check("symbolic_matches_numeric", evaluate_at(p, x) == sigma);
  }
  return r;
}

Report cmd_sigma_symbolic(std::size_t n, const RatVector& v0) {
  Report r("sigma", {{"n", n}, {"v0", encode(v0)}});
  const MPoly p = sigma_poly(n, v0);
  r.output("symbolic", to_string(p, matrix_variable_names(n)));
  r.output("variables", matrix_variable_names(n));
  return r;
}

Report cmd_witness(const RatMatrix& x, const RatVector& v0, const Rational& a, const Rational& b) {
  Report r("witness", {{"X", encode(x)}, {"v0", encode(v0)}, {"a", encode(a)}, {"b", encode(b)}});
  const auto cls = p_index(x, v0);
  const WitnessPair w = semisimple_witness(x, v0, a, b);
  r.output("p_index", cls.index);
  r.output("w", encode(cls.witness_w));
  r.output("witness", encode(w));
  if (auto f = stabilizer(v0).p_perp_factor(w.bracket_value)) r.output("bracket_factor", encode(*f));
  r.checks(verify_witness(x, v0, w));
  return r;
}

Report cmd_conjugate(const RatMatrix& x, const RatMatrix& x2, const RatVector& v0) {
  Report r("conjugate", {{"X", encode(x)}, {"X2", encode(x2)}, {"v0", encode(v0)}});
  const RatMatrix g = conjugator_in_P(x, x2, v0);
  r.output("g", encode(g));
  r.output("p_index", p_index(x, v0).index);
  r.check("g_fixes_v0", g * v0 == v0);
  r.check("g_conjugates_X_to_X2", g * x * inverse(g) == x2);
  return r;
}

Report cmd_charvar(const RatMatrix& x, const RatMatrix& y, const RatVector& v0, const std::optional<RatVector>& u,
                   const std::optional<RatVector>& v) {
  const std::size_t n = x.dim();
  const RatVector uu = u.value_or(RatVector(n)), vv = v.value_or(RatVector(n));
  Report r("charvar", {{"X", encode(x)}, {"Y", encode(y)}, {"v0", encode(v0)}, {"u", encode(uu)}, {"v", encode(vv)}});
  const auto g = in_char_g({x, y});
  const auto p = in_char_p({x, y}, v0);
  const auto ext = in_char_N({x, uu, y, vv});
  r.output("char_g", encode(g));
  r.output("char_p", encode(p));
  r.output("char_N", encode(ext));
  r.check("char_g_implies_char_p", !g.verdict || p.verdict);
  if (uu.is_zero() && vv.is_zero()) r.check("char_N_at_zero_matches_char_g", ext.verdict == g.verdict);
  if (p.verdict) r.check("char_p_witness_factorizes", p.witness_w && RatMatrix::outer(v0, *p.witness_w) == bracket(x, y));
  return r;
}

Report cmd_fiber(const RatMatrix& x, const RatVector& v0, std::uint64_t seed) {
  Report r("fiber", {{"X", encode(x)}, {"v0", encode(v0)}, {"seed", seed}});
  const auto fiber = conormal_fiber_p(x, v0);
  const std::size_t tangent = orbit_tangent_dim(x, stabilizer(v0).p);
  r.output("fiber_basis", encode(fiber));
  r.output("fiber_dim", fiber.size());
  r.output("tangent_dim_p", tangent);
  r.check("fiber_dim_plus_tangent_dim", fiber.size() + tangent == x.dim() * x.dim());
  if (is_regular_nilpotent(x)) {
    const DichotomyReport d = fiber_dichotomy(x, v0, seed);
    r.output("dichotomy", encode(d));
    r.checks(d.checks, "dichotomy.");
  }
  return r;
}

Report cmd_section(const RatVector& v, const RatVector& v0, const std::optional<RatMatrix>& x) {
  Json in = {{"v", encode(v)}, {"v0", encode(v0)}};
  if (x) in["X"] = encode(*x);
  Report r("section", in);
  const RatMatrix g = section(v, v0);
  r.output("g", encode(g));
  r.check("g_maps_v0_to_v", g * v0 == v);
  r.check("g_invertible", !is_zero(determinant(g)));
  if (v == v0) r.check("g_in_P_when_v_is_v0", g * v0 == v0);
  if (x) {
    const RatMatrix t = phi_map(*x, v, v0);
    r.output("phi_map", encode(t));
    r.output("d", krylov_dim(*x, v).d);
    r.check("krylov_preserved", krylov_dim(t, v0).d == krylov_dim(*x, v).d);
    r.check("signature_preserved", stratum_signature(t, v0) == stratum_signature(*x, v));
  }
  return r;
}

Report cmd_mgeneric(const RatMatrix& s, const RatMatrix& y) {
  Report r("mgeneric", {{"S", encode(s)}, {"Y", encode(y)}});
  const Rational det = m_genericity_det(s, y);
  const std::size_t m_dim = centralizer(s).dim();
  r.output("det_ad_Y_on_q", encode(det));
  r.output("generic", !is_zero(det));
  r.output("dim_m", m_dim);
  r.output("dim_q", s.dim() * s.dim() - m_dim);
  return r;
}

Report cmd_sl2(bool inject_fault) {
  Report r("sl2", {{"inject_fault", inject_fault}});
  const auto& names = sl2_names();
  Json taus = {{"H", to_string(tau_sl2(Sl2Element::H), names)},
               {"X", to_string(tau_sl2(Sl2Element::X), names)},
               {"Y", to_string(tau_sl2(Sl2Element::Y), names)}};
  r.output("tau", taus);
  const MPoly z = MPoly::variable(6, 2);
  const MPoly casimir = principal_symbol(parse_weyl("Dx^2 + 4*Dy*Dz", names));
  r.output("poisson_z_casimir", to_string(poisson(z, casimir), sl2_symbol_names()));
  r.output("symbol_tauY", to_string(principal_symbol(tau_sl2(Sl2Element::Y)), sl2_symbol_names()));
  Sl2Options opts;
  opts.flip_tau_y = inject_fault;
  r.checks(verify_sl2(opts));
  Sl2Options control;
  control.flip_tau_y = true;
  r.check("negative_control_detected", !all_passed(verify_sl2(control)));
  return r;
}

Report cmd_tame(const std::vector<Rational>& roots, const std::vector<unsigned>& weights) {
  Json jr = Json::array();
  for (const auto& q : roots) jr.push_back(encode(q));
  Report r("tame", {{"roots", jr}, {"weights", weights}});
  long codim = 0;
  for (auto w : weights) codim += w;
  r.output("tame", tame_check({roots, weights}));
  r.output("bound", -codim);
  return r;
}

// -------------------------------------------------------------------- fuzz

namespace {

class Tally {
 public:
  void record(const std::string& name, bool ok, std::size_t sample) {
    auto& e = entries_[name];
    ++(ok ? e.pass : e.fail);
    if (!ok && !e.first_failure) e.first_failure = sample;
  }

  void write(Report& r) const {
    Json inv = Json::object();
    for (const auto& [name, e] : entries_) {
      Json o = {{"pass", e.pass}, {"fail", e.fail}};
      if (e.first_failure) o["first_failure_sample"] = *e.first_failure;
      inv[name] = o;
      r.check(name, e.fail == 0);
    }
    r.output("invariants", inv);
  }

 private:
  struct Entry {
    std::size_t pass = 0, fail = 0;
    std::optional<std::size_t> first_failure;
  };
  std::map<std::string, Entry> entries_;
};

WeylOperator random_weyl(SplitMix64& rng, std::size_t k) {
  WeylOperator p(k);
  const long terms = rng.uniform_int(1, 3);
  for (long t = 0; t < terms; ++t) {
    Exponent e(2 * k);
    for (auto& x : e) x = static_cast<unsigned>(rng.uniform_int(0, 1));
    p.add_term(e, rng.uniform_int(-3, 3));
  }
  return p;
}

MPoly random_mpoly(SplitMix64& rng, std::size_t k) {
  MPoly f(k);
  for (int t = 0; t < 3; ++t) {
    Exponent e(k);
    for (auto& x : e) x = static_cast<unsigned>(rng.uniform_int(0, 2));
    f.add_term(e, rng.uniform_int(-3, 3));
  }
  return f;
}

bool nilpotent_three_way(const RatMatrix& x) {
  const std::size_t n = x.dim();
  const RatPoly chi = char_poly(x);
  const bool a = chi == RatPoly::monomial(static_cast<unsigned>(n));
  const bool b = x.pow(static_cast<unsigned>(n)).is_zero();
  bool c = true;
  for (std::size_t k = 0; k < n; ++k) c = c && is_zero(chi.coeff(k));
  return a == b && b == c && a == is_nilpotent(x);
}

bool p_perp_three_way(const RatMatrix& x, const RatMatrix& y, const StabilizerData& stab) {
  const RatMatrix br = bracket(x, y);
  const bool by_rank = stab.in_p_perp(br);
  bool by_form = true, by_tangent = true;
  for (const auto& z : stab.p.basis()) {
    by_form = by_form && is_zero(trace_form(br, z));
    by_tangent = by_tangent && is_zero(trace_form(y, bracket(x, z)));
  }
  return by_rank == by_form && by_form == by_tangent;
}

void fuzz_sample(SplitMix64& rng, const RunConfig& cfg, std::size_t sample, Tally& t) {
  const std::size_t n = cfg.n;
  const long bound = cfg.entry_bound;
  auto rec = [&](const std::string& name, bool ok) { t.record(name, ok, sample); };

  const RatMatrix x = random_mixed_matrix(rng, n, bound);
  const RatMatrix y = random_mixed_matrix(rng, n, bound);
  const RatMatrix z = random_matrix(rng, n, bound);
  const RatVector v0 = random_nonzero_vector(rng, n, bound);
  const RatVector v = random_nonzero_vector(rng, n, bound);
  const RatMatrix g = random_unimodular(rng, n, 2);
  const RatMatrix ginv = inverse(g);
  const RatMatrix h = random_in_stabilizer(rng, v0, 2);
  const RatMatrix hinv = inverse(h);
  const Subalgebra gl = Subalgebra::gl(n);

  // ratlin
  const RatPoly chi = char_poly(x);
  const RatPoly mu = minimal_poly(x);
  rec("ratlin.cayley_hamilton", poly_eval_mat(chi, x).is_zero());
  rec("ratlin.minpoly_divides_charpoly", (chi % mu).is_zero() && poly_eval_mat(mu, x).is_zero());
  rec("ratlin.rank_nullity", rank(x) + kernel_basis(x).size() == n);
  rec("ratlin.rank_matches_rref", rank(x) == rref(x).pivots.size());
  rec("ratlin.squarefree_part_coprime_to_derivative", is_squarefree(squarefree_part(chi)));

  // lie
  const Rational lhs = trace_form(bracket(x, y), z), rhs = trace_form(y, bracket(x, z));
  const Rational ad_sum = cfg.inject_fault ? Rational(lhs - rhs) : Rational(lhs + rhs);
  rec("lie.trace_form_ad_invariance", is_zero(ad_sum));
  const StabilizerData stab = stabilizer(v0);
  rec("lie.p_plus_p_perp_dims", stab.p.dim() + stab.p_perp.size() == n * n &&
                                    mutually_orthogonal(stab.p.basis(), stab.p_perp));
  const Subalgebra cx = centralizer(x);
  rec("lie.tangent_plus_centralizer_dim", orbit_tangent_dim(x, gl) + cx.dim() == n * n);

  // jordan
  const ChevalleyDecomp cd = chevalley(x);
  rec("jordan.chevalley_invariants", all_passed(verify_chevalley(x, cd)));
  bool inside = true;
  for (const auto& b : cx.basis())
    inside = inside && bracket(b, cd.semisimple).is_zero() && bracket(b, cd.nilpotent).is_zero();
  rec("jordan.centralizer_inside_S_N_centralizers", inside);
  rec("jordan.nilpotent_three_way", nilpotent_three_way(x) && nilpotent_three_way(cd.nilpotent));
  rec("jordan.jordan_type_conjugation_invariant",
      jordan_type(cd.nilpotent) == jordan_type(g * cd.nilpotent * ginv));

  // orbit
  const std::size_t d = krylov_dim(x, v0).d;
  rec("orbit.krylov_gl_equivariance", krylov_dim(g * x * ginv, g * v0).d == d);
  rec("orbit.krylov_p_invariance", krylov_dim(h * x * hinv, v0).d == d);
  const Rational sigma = sigma_eval(x, v0);
  const bool deficient = cfg.inject_fault ? d <= n : d < n;
  rec("orbit.sigma_iff_krylov_deficient", is_zero(sigma) == deficient);
  const StratumSignature sig = stratum_signature(x, v0);
  rec("orbit.signature_g_conjugation_classes", stratum_signature(g * x * ginv, v0).classes == sig.classes);
  rec("orbit.signature_p_conjugation", stratum_signature(h * x * hinv, v0) == sig);
  rec("orbit.section_maps_v0_to_v", section(v, v0) * v0 == v);
  const RatMatrix moved = phi_map(x, v, v0);
  rec("orbit.phi_map_preserves_krylov", krylov_dim(moved, v0).d == krylov_dim(x, v).d);
  rec("orbit.phi_map_preserves_signature", stratum_signature(moved, v0) == stratum_signature(x, v));

  const RatMatrix rg = g * shift_matrix(n) * ginv;
  const auto cls = p_index(rg, v0);
  rec("orbit.p_index_plus_d_equals_n", cls.index + krylov_dim(rg, v0).d == n);
  rec("orbit.dense_iff_index_zero", orbit_dense_check(rg, v0) == (cls.index == 0));
  rec("orbit.tangent_dichotomy",
      (orbit_tangent_dim(rg, stab.p) == orbit_tangent_dim(rg, gl)) == (cls.index == 0));
  const auto p = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 1));
  const RatMatrix rep = regular_nilpotent_with_index(n, p, v0);
  const RatMatrix rep2 = h * rep * hinv;
  const RatMatrix conj = conjugator_in_P(rep, rep2, v0);
  rec("orbit.conjugator_in_P", conj * v0 == v0 && conj * rep == rep2 * conj);
  if (n >= 2) {
    const RatMatrix other = regular_nilpotent_with_index(n, (p + 1) % n, v0);
    bool rejected = false;
    try {
      conjugator_in_P(rep, other, v0);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    rec("orbit.cross_index_conjugation_rejected", rejected);
  }
  if (p >= 1) {
    Rational a = rng.uniform_int(-bound, bound), b = rng.uniform_int(-bound, bound);
    if (a == b) b += 1;
    rec("orbit.witness_invariants", all_passed(verify_witness(rep, v0, semisimple_witness(rep, v0, a, b))));
  }
  {
    std::vector<Rational> dd, ee;
    for (std::size_t i = 0; i < n; ++i) {
      dd.push_back(static_cast<long>(3 * i) + rng.uniform_int(0, 2));  // distinct
      ee.push_back(rng.uniform_int(-2, 2));
    }
    const RatMatrix s = g * RatMatrix::diagonal(dd) * ginv;
    const RatMatrix ym = g * RatMatrix::diagonal(ee) * ginv;
    rec("orbit.m_genericity_iff_regular_semisimple", m_genericity(s, ym) == is_regular_semisimple(ym));
  }

  // charvar
  const std::vector<RatMatrix> ys{y, cd.nilpotent, g * nilpotent_of_type(jordan_type(cd.nilpotent).partition) * ginv};
  for (const auto& yc : ys) {
    const auto cg = in_char_g({x, yc});
    const auto cp = in_char_p({x, yc}, v0);
    const auto cn = in_char_N({x, RatVector(n), yc, RatVector(n)});
    rec("charvar.char_g_implies_char_p", !cg.verdict || cp.verdict);
    rec("charvar.char_N_at_zero_matches_char_g", cn.verdict == cg.verdict);
    rec("charvar.p_witness_factorizes",
        !cp.verdict || (cp.witness_w && RatMatrix::outer(v0, *cp.witness_w) == bracket(x, yc)));
    rec("lie.p_perp_membership_three_way", p_perp_three_way(x, yc, stab));
  }
  {
    // A point planted in the P-variety: X in the conormal fiber of a nilpotent with a given P-index.
    RatMatrix xp = RatMatrix::zero(n);
    for (const auto& f : conormal_fiber_p(rep, v0)) xp = xp + Rational(rng.uniform_int(-2, 2)) * f;
    const auto cp = in_char_p({xp, rep}, v0);
    rec("charvar.planted_point_in_char_p", cp.verdict);
    rec("charvar.char_g_implies_char_p", !in_char_g({xp, rep}).verdict || cp.verdict);
  }
  const auto fiber = conormal_fiber_p(x, v0);
  rec("charvar.conormal_dim", fiber.size() + orbit_tangent_dim(x, stab.p) == n * n);
  bool in_fiber = true;
  for (const auto& f : fiber) in_fiber = in_fiber && stab.in_p_perp(bracket(x, f)) && p_perp_three_way(x, f, stab);
  rec("charvar.fiber_elements_satisfy_condition", in_fiber);

  // weyl
  const WeylOperator wp = random_weyl(rng, 2), wq = random_weyl(rng, 2), wr = random_weyl(rng, 2);
  rec("weyl.associativity", (wp * wq) * wr == wp * (wq * wr));
  rec("weyl.jacobi", (weyl_commutator(wp, weyl_commutator(wq, wr)) + weyl_commutator(wq, weyl_commutator(wr, wp)) +
                      weyl_commutator(wr, weyl_commutator(wp, wq)))
                         .is_zero());
  const MPoly f = random_mpoly(rng, 2);
  rec("weyl.apply_is_action", apply(wp * wq, f) == apply(wp, apply(wq, f)));
  if (!wp.is_zero() && !wq.is_zero()) {
    rec("weyl.symbol_multiplicative", principal_symbol(wp * wq) == principal_symbol(wp) * principal_symbol(wq));
    const WeylOperator c = weyl_commutator(wp, wq);
    if (!c.is_zero() && c.order() == wp.order() + wq.order() - 1)
      rec("weyl.commutator_symbol_is_poisson", principal_symbol(c) == poisson(principal_symbol(wp), principal_symbol(wq)));
  }
}

}  // namespace

Report cmd_fuzz(const RunConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("fuzz: n must be at least 1");
  if (cfg.samples < 1) throw std::invalid_argument("fuzz: samples must be at least 1");
  if (cfg.entry_bound < 1) throw std::invalid_argument("fuzz: bound must be at least 1");
  Report r("fuzz", {{"n", cfg.n},
                    {"seed", cfg.seed},
                    {"samples", cfg.samples},
                    {"bound", cfg.entry_bound},
                    {"inject_fault", cfg.inject_fault}});
  SplitMix64 master(cfg.seed);
  Tally tally;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    SplitMix64 rng = master.fork();
    bool completed = true;
    try {
      fuzz_sample(rng, cfg, s, tally);
    } catch (const std::exception&) {
      completed = false;
    }
    tally.record("harness.sample_completed", completed, s);
  }
  tally.write(r);
  r.output("prng", "splitmix64");
  return r;
}

}  // namespace glorbit
