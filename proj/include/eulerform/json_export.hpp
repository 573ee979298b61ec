#pragma once

#include <json.hpp>

#include "eulerform/asymptotics.hpp"
#include "eulerform/verify.hpp"

namespace eulerform {

using Json = nlohmann::ordered_json;

/// Levels {rank, twists, matrix} of a resolution; matrices as row lists of
/// polynomial strings.
Json to_json(const FreeResolution& res);
/// {functor, index, presentation, length, dimension}.
Json to_json(const HomologyModule& h);
/// {coefficients, n0}, coefficients of n^0, n^1, ... as exact strings.
Json to_json(const HilbertPolynomial& p);
/// {e, trace: [{n, partial_sum, scaled}], verdict, certificate}.
Json to_json(const AsymptoticEstimate& a);
Json to_json(const Complexity& c);
/// {invariant, args, value, lengths: [{functor, i, length}], hypotheses:
/// [{name, holds}]} plus the computed values of a check.
Json to_json(const CheckReport& r, const std::vector<std::string>& args);
Json to_json(const VerifySummary& s);

/// Lengths map keyed "Tor_i" / "Ext^i" as [{functor, i, length}].
Json lengths_json(const std::map<std::string, long>& lengths);
std::string length_to_string(long l);

}  // namespace eulerform
