#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kschubert/basis.hpp"
#include "kschubert/chains.hpp"
#include "kschubert/perm.hpp"
#include "kschubert/pipedream.hpp"
#include "kschubert/poly.hpp"
#include "kschubert/subst.hpp"

namespace kschubert {

/// Insertion-ordered, so every dump is byte-stable.
using Json = nlohmann::ordered_json;

/// "1,4,3,2" or "1432" (single digits only); throws std::invalid_argument.
Permutation parse_permutation(const std::string& s);
/// "2,5,6" -> {2,5,6}; an empty string is the empty set.
std::vector<int> parse_int_list(const std::string& s);

/// One-line notation padded to n (0: trimmed).
Json to_json(const Permutation& w, int n = 0);
Json to_json(const SetComposition& A);
/// {"alphabets":{"x":3}, "terms":[{"coeff":"-2","exps":{"x":[2,1]}}]} in term order.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
/// {"N":6,"coeffs":[{"w":[...],"c":"1"}]} sorted by one-line notation.
Json to_json(const BasisExpansion& e);
Json to_json(const RcGraph& R);
Json to_json(const MarkedRcGraph& R);
Json to_json(const DoubleRcGraph& D);
/// {"start":[...],"covers":[{"t":[a,b],"marked":true}]}.
Json to_json(const MarkedChain& c, int n);
/// {"family":"G","alphabets":[...],"ranks":[...],"terms":[{"power":j,"perms":[[...]],"c":"1"}]}.
Json to_json(const SubstitutionExpansion& e);

std::string to_text(const BasisExpansion& e);
std::string to_text(const MarkedChain& c, int n);
std::string to_text(const SubstitutionExpansion& e);

}  // namespace kschubert
