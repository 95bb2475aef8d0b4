#include "glorbit/json_io.hpp"

#include <stdexcept>

namespace glorbit {

namespace {

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected a JSON array");
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json partition_json(const std::vector<unsigned>& p) { return Json(p); }

}  // namespace

Json encode(const Rational& q) { return to_string(q); }

Json encode(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

Json encode(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode(m.row(i)));
  return a;
}

Json encode(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(encode(c));
  return a;
}

Json encode(const std::vector<RatMatrix>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(encode(m));
  return a;
}

Json encode(const Subalgebra& a) { return encode(a.basis()); }

Json encode(const StabilizerData& s) {
  return {{"v0", encode(s.v0)}, {"p_basis", encode(s.p)}, {"p_perp_basis", encode(s.p_perp)}};
}

Json encode(const ChevalleyDecomp& d) {
  return {{"S", encode(d.semisimple)}, {"N", encode(d.nilpotent)}, {"certificate", encode(d.certificate)}};
}

Json encode(const JordanType& t) { return partition_json(t.partition); }

Json encode(const CheckList& checks) {
  Json o = Json::object();
  for (const auto& c : checks) o[c.name] = c.passed;
  return o;
}

Json encode(const KrylovData& k) {
  Json o = {{"d", k.d}, {"basis", Json::array()}};
  for (const auto& b : k.basis) o["basis"].push_back(encode(b));
  if (!k.block_dims.empty()) o["block_dims"] = k.block_dims;
  return o;
}

Json encode(const StratumSignature& s) {
  Json classes = Json::array();
  for (const auto& c : s.classes)
    classes.push_back({{"degree", c.degree}, {"multiplicity", c.multiplicity}, {"partition", partition_json(c.partition)}});
  return {{"classes", classes}, {"krylov_d", s.krylov_d}};
}

Json encode(const WitnessPair& w) { return {{"phi", encode(w.phi)}, {"bracket_value", encode(w.bracket_value)}}; }

Json encode(const MembershipReport& r) {
  Json o = {{"verdict", r.verdict}, {"checks", encode(r.checks)}};
  if (r.witness_w) o["witness_w"] = encode(*r.witness_w);
  return o;
}

Json encode(const DichotomyReport& r) {
  Json o = {{"kind", to_string(r.kind)},
            {"p_index", r.p_index},
            {"fiber_dim", r.fiber_dim},
            {"checks", encode(r.checks)}};
  if (r.kind == FiberKind::DenseContained) {
    o["sampled"] = r.sampled;
    o["all_nilpotent_mod_scalars"] = r.all_nilpotent_mod_scalars;
    o["evidence"] = "sampled";
  }
  if (r.witness) o["witness"] = encode(*r.witness);
  return o;
}

Rational decode_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()), 10);
  throw std::invalid_argument("rational: expected a string \"num/den\" or an integer");
}

RatVector decode_vector(const Json& j) {
  require_array(j, "vector");
  std::vector<Rational> e;
  for (const auto& x : j) e.push_back(decode_rational(x));
  if (e.empty()) throw std::invalid_argument("vector: empty");
  return RatVector(std::move(e));
}

RatMatrix decode_matrix(const Json& j) {
  require_array(j, "matrix");
  if (j.empty()) throw std::invalid_argument("matrix: no rows");
  std::vector<RatVector> rows;
  for (const auto& r : j) rows.push_back(decode_vector(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw std::invalid_argument("matrix: ragged rows");
  return RatMatrix::from_rows(rows);
}

RatPoly decode_poly(const Json& j) {
  require_array(j, "polynomial");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(decode_rational(x));
  return RatPoly(std::move(c));
}

std::vector<RatMatrix> decode_matrices(const Json& j) {
  require_array(j, "matrix list");
  std::vector<RatMatrix> out;
  for (const auto& m : j) out.push_back(decode_matrix(m));
  return out;
}

Subalgebra decode_subalgebra(const Json& j) {
  auto basis = decode_matrices(j);
  if (basis.empty()) throw std::invalid_argument("subalgebra: empty basis (ambient dimension unknown)");
  const std::size_t n = basis.front().rows();
  return Subalgebra(n, std::move(basis));
}

StabilizerData decode_stabilizer(const Json& j) {
  StabilizerData s = stabilizer(decode_vector(field(j, "v0")));
  if (j.contains("p_basis") && decode_matrices(j.at("p_basis")) != s.p.basis())
    throw std::invalid_argument("stabilizer: p_basis does not match v0");
  if (j.contains("p_perp_basis") && decode_matrices(j.at("p_perp_basis")) != s.p_perp)
    throw std::invalid_argument("stabilizer: p_perp_basis does not match v0");
  return s;
}

ChevalleyDecomp decode_chevalley(const Json& j) {
  return {decode_matrix(field(j, "S")), decode_matrix(field(j, "N")), decode_poly(field(j, "certificate"))};
}

RatMatrix parse_matrix_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("matrix: invalid JSON: ") + e.what());
  }
  return decode_matrix(j);
}

RatVector parse_vector_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return decode_vector(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("vector: invalid JSON: ") + e.what());
    }
  }
  std::vector<Rational> e;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    e.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RatVector(std::move(e));
}

}  // namespace glorbit
