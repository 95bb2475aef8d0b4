#include "glorbit/charvar.hpp"

#include "glorbit/jordan.hpp"
#include "glorbit/lie.hpp"
#include "glorbit/sampling.hpp"

#include <stdexcept>

namespace glorbit {

namespace {

MembershipReport finish(CheckList checks) {
  MembershipReport r;
  r.verdict = all_passed(checks);
  r.checks = std::move(checks);
  return r;
}

}  // namespace

MembershipReport in_char_g(const CotangentPoint& pt) {
  return finish({{"y_nilpotent", is_nilpotent(pt.y)}, {"bracket_zero", bracket(pt.x, pt.y).is_zero()}});
}

MembershipReport in_char_p(const CotangentPoint& pt, const RatVector& v0) {
  const StabilizerData stab = stabilizer(v0);
  const RatMatrix br = bracket(pt.x, pt.y);
  MembershipReport r = finish({{"y_nilpotent", is_nilpotent(pt.y)}, {"bracket_in_p_perp", stab.in_p_perp(br)}});
  if (r.verdict) r.witness_w = stab.p_perp_factor(br);
  return r;
}

MembershipReport in_char_N(const ExtendedCotangentPoint& pt) {
  const RatMatrix br = bracket(pt.x, pt.y);
  return finish({{"y_nilpotent", is_nilpotent(pt.y)}, {"bracket_equals_uv", br == RatMatrix::outer(pt.u, pt.v)}});
}

std::vector<RatMatrix> conormal_fiber_p(const RatMatrix& x, const RatVector& v0) {
  const StabilizerData stab = stabilizer(v0);
  std::vector<RatMatrix> tangent;
  for (const auto& z : stab.p.basis()) tangent.push_back(bracket(x, z));
  return orthogonal_complement(x.dim(), tangent);
}

DichotomyReport fiber_dichotomy(const RatMatrix& x, const RatVector& v0, std::uint64_t seed,
                                std::size_t combinations, long bound) {
  const auto cls = p_index(x, v0);
  const StabilizerData stab = stabilizer(v0);
  const auto fiber = conormal_fiber_p(x, v0);
  const std::size_t n = x.dim();

  DichotomyReport rep;
  rep.p_index = cls.index;
  rep.fiber_dim = fiber.size();
  rep.checks.push_back({"fiber_dim_plus_tangent_dim", fiber.size() + orbit_tangent_dim(x, stab.p) == n * n});

  if (cls.index == 0) {
    rep.kind = FiberKind::DenseContained;
    std::vector<RatMatrix> tested = fiber;
    SplitMix64 rng(seed);
    for (std::size_t c = 0; c < combinations; ++c) {
      RatMatrix y = RatMatrix::zero(n);
      for (const auto& b : fiber) y = y + Rational(rng.uniform_int(-bound, bound)) * b;
      tested.push_back(y);
    }
    for (const auto& y : tested) {
      if (!is_nilpotent(project_traceless(y))) rep.all_nilpotent_mod_scalars = false;
      if (!stab.in_p_perp(bracket(x, y))) rep.checks.push_back({"fiber_element_in_fiber", false});
    }
    rep.sampled = tested.size();
    rep.checks.push_back({"nilpotent_mod_scalars_sampled", rep.all_nilpotent_mod_scalars});
    rep.checks.push_back({"dense_orbit", orbit_dense_check(x, v0)});
  } else {
    rep.kind = FiberKind::WitnessFound;
    WitnessPair w = semisimple_witness(x, v0);
    for (auto& c : verify_witness(x, v0, w)) rep.checks.push_back(std::move(c));
    rep.checks.push_back({"witness_in_fiber", stab.in_p_perp(bracket(x, w.phi))});
    rep.checks.push_back({"orbit_not_dense", !orbit_dense_check(x, v0)});
    rep.witness = std::move(w);
  }
  return rep;
}

std::string to_string(FiberKind kind) {
  return kind == FiberKind::DenseContained ? "dense/contained" : "witness found";
}

}  // namespace glorbit
