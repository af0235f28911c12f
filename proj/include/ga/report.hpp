#pragma once
#include <json.hpp>
#include <string>

#include "ga/coxgroup.hpp"
#include "ga/enumerate.hpp"
#include "ga/gassoc.hpp"
#include "ga/mutation.hpp"
#include "ga/polygon.hpp"
#include "ga/wiring.hpp"

namespace ga {

using Json = nlohmann::ordered_json;

Json roots_json(const RootSystem& rs, const CoxeterData& cd);
std::string roots_text(const RootSystem& rs, const CoxeterData& cd);

std::string weak_order_dot(const CoxeterGroup& g, const WeakOrder& wo);
std::string absolute_interval_dot(const CoxeterGroup& g, const AbsoluteInterval& ai);

Json polytope_json(const RootSystem& rs, const AssociahedronPolytope& p);
std::string polytope_off(const AssociahedronPolytope& p);  // 3-dimensional only
Json fan_json(const RootSystem& rs, const ClusterComplexData& cc);

// {m, n, btilde, cluster, frozen}
Seed seed_from_json(const Json& j);
Json seed_json(const Seed& s);
Json exchange_graph_json(const ExchangeGraphRecord& rec);
std::string exchange_graph_dot(const ExchangeGraphRecord& rec);

std::string flip_graph_dot(int n);
std::string move_graph_dot(const WiringClasses& wc);
Json gl3_json(const Gl3Report& r);

}  // namespace ga
