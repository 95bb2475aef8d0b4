#pragma once

// Report-producing front ends for every CLI command. Each report is a JSON
// object { command, inputs, outputs, certified_checks, counts }; a command
// fails (exit code 1) iff one of its certified checks is false. Keys are
// sorted, so reports are byte-identical for identical inputs and seeds.

#include "glorbit/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace glorbit {

struct RunConfig {
  std::size_t n = 3;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  long entry_bound = 10;
  /// Test mode: deliberately breaks two predicates so that failures surface.
  bool inject_fault = false;
};

class Report {
 public:
  Report(std::string command, Json inputs);

  void output(const std::string& key, Json value) { body_["outputs"][key] = std::move(value); }
  void check(const std::string& name, bool passed);
  void checks(const CheckList& list, const std::string& prefix = "");

  bool passed() const { return failures_ == 0; }
  int exit_code() const { return passed() ? 0 : 1; }
  Json& body() { return body_; }
  /// Finalized JSON text (with counts), pretty-printed.
  std::string dump() const;
  Json json() const;

 private:
  Json body_;
  std::size_t passes_ = 0;
  std::size_t failures_ = 0;
};

Report cmd_jordan(const RatMatrix& x);
Report cmd_stratum(const RatMatrix& x, const RatVector& v0);
Report cmd_krylov(const RatMatrix& x, const RatVector& v, const std::optional<std::vector<std::size_t>>& blocks);
Report cmd_sigma(const RatMatrix& x, const RatVector& v0);
/// Symbolic determinant in the entries of a generic n x n matrix.
Report cmd_sigma_symbolic(std::size_t n, const RatVector& v0);
Report cmd_witness(const RatMatrix& x, const RatVector& v0, const Rational& a, const Rational& b);
Report cmd_conjugate(const RatMatrix& x, const RatMatrix& x2, const RatVector& v0);
Report cmd_charvar(const RatMatrix& x, const RatMatrix& y, const RatVector& v0, const std::optional<RatVector>& u,
                   const std::optional<RatVector>& v);
Report cmd_fiber(const RatMatrix& x, const RatVector& v0, std::uint64_t seed);
Report cmd_section(const RatVector& v, const RatVector& v0, const std::optional<RatMatrix>& x);
Report cmd_mgeneric(const RatMatrix& s, const RatMatrix& y);
Report cmd_sl2(bool inject_fault = false);
Report cmd_tame(const std::vector<Rational>& roots, const std::vector<unsigned>& weights);
Report cmd_fuzz(const RunConfig& config);

}  // namespace glorbit
