#pragma once

// JSON encodings. Rationals are strings "num/den" (denominator omitted when
// it is 1); matrices are row-major arrays of arrays; vectors and polynomials
// (lowest degree first) are arrays. Decoders also accept JSON integers.

#include "glorbit/charvar.hpp"
#include "glorbit/checks.hpp"
#include "glorbit/jordan.hpp"
#include "glorbit/lie.hpp"
#include "glorbit/orbit.hpp"
#include "glorbit/ratlin.hpp"
#include "glorbit/weyl.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace glorbit {

using Json = nlohmann::json;

Json encode(const Rational& q);
Json encode(const RatVector& v);
Json encode(const RatMatrix& m);
Json encode(const RatPoly& p);
Json encode(const std::vector<RatMatrix>& ms);
Json encode(const Subalgebra& a);
Json encode(const StabilizerData& s);
Json encode(const ChevalleyDecomp& d);
Json encode(const JordanType& t);
Json encode(const CheckList& checks);
Json encode(const KrylovData& k);
Json encode(const StratumSignature& s);
Json encode(const WitnessPair& w);
Json encode(const MembershipReport& r);
Json encode(const DichotomyReport& r);

/// All decoders throw std::invalid_argument on malformed input.
Rational decode_rational(const Json& j);
RatVector decode_vector(const Json& j);
RatMatrix decode_matrix(const Json& j);
RatPoly decode_poly(const Json& j);
std::vector<RatMatrix> decode_matrices(const Json& j);
Subalgebra decode_subalgebra(const Json& j);
/// Rebuilds from v0 and rejects payloads whose bases disagree with it.
StabilizerData decode_stabilizer(const Json& j);
ChevalleyDecomp decode_chevalley(const Json& j);

/// Matrix or vector literal: JSON text, or for vectors also "1,0,-1/2".
RatMatrix parse_matrix_text(const std::string& text);
RatVector parse_vector_text(const std::string& text);

}  // namespace glorbit
