// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "json.hpp"
#include "mtg/construct.hpp"
#include "mtg/exact.hpp"
#include "mtg/graph.hpp"
#include "mtg/represent.hpp"

namespace mtg {

using Json = nlohmann::json;

// Exact numbers serialize as {"unit": "p/q", "roots": {"2": "p/q", ...}};
// keys of roots are the primes under the square roots, in decimal.
Json exact_to_json(const ExactReal& x);
ExactReal exact_from_json(const Json& j);

// Graphs serialize as {"n": n, "edges": [[u, v], ...], "labels": {...}};
// edges are sorted pairs with u < v, labels may be absent.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Representations serialize as {"ranks": [...], "thresholds": [...]}.
Json rep_to_json(const Representation& rep);
Representation rep_from_json(const Json& j);

Json verify_report_to_json(const VerifyReport& report);
Json plan_to_json(const ClusterPlan& plan);
Json theta_result_to_json(const ThetaResult& result);
Json construction_to_json(const Construction& c);

// Graphviz dot text; node labels are used when present.
std::string graph_to_dot(const Graph& g, const std::string& name = "G");

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace mtg
