#pragma once

#include "colorfan/chow.hpp"
#include "colorfan/geometry.hpp"
#include "colorfan/ground.hpp"
#include "colorfan/multimatroid.hpp"

#include <json.hpp>

#include <string>

namespace colorfan {

using Json = nlohmann::json;

/// Rationals travel as strings "p/q" (or "p"); plain JSON integers are also
/// accepted on input.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

GroundSet ground_from_json(const Json& j);
Json ground_to_json(const GroundSet& g);

/// Colored sets are sorted label arrays.
int set_from_json(const Poset& poset, const Json& j);
Json set_to_json(const Poset& poset, int id);

Chain chain_from_json(const Poset& poset, const Json& j);
Json chain_to_json(const Poset& poset, const Chain& chain);

RankFunction rank_from_json(PosetPtr poset, const Json& j);
Json rank_to_json(const RankFunction& rk);

Divisor divisor_from_json(PosetPtr poset, const Json& j);
Json divisor_to_json(const Divisor& d);

Json polytope_to_json(const ExactPolytope& p);

Json load_json_file(const std::string& path);

} // namespace colorfan
