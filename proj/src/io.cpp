// SPDX-License-Identifier: Apache-2.0
#include "mtg/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "mtg/errors.hpp"

namespace mtg {

Json exact_to_json(const ExactReal& x) {
    Json roots = Json::object();
    for (const auto& [prime, coeff] : x.roots())
        roots[std::to_string(prime)] = rat_to_string(coeff);
    return Json{{"unit", rat_to_string(x.unit())}, {"roots", roots}};
}

ExactReal exact_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("exact number must be a JSON object");
    Rat unit(0);
    if (j.contains("unit")) unit = rat_from_string(j.at("unit").get<std::string>());
    std::map<long, Rat> roots;
    if (j.contains("roots")) {
        if (!j.at("roots").is_object()) throw InputError("roots must be an object");
        for (const auto& [key, value] : j.at("roots").items()) {
            long prime = 0;
            try {
                size_t used = 0;
                prime = std::stol(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InputError("bad root key: " + key);
            }
            roots[prime] = rat_from_string(value.get<std::string>());
        }
    }
    return ExactReal::make(unit, roots);
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    Json out{{"n", g.n}, {"edges", edges}};
    if (!g.labels.empty()) {
        Json labels = Json::object();
        for (const auto& [v, text] : g.labels) labels[std::to_string(v)] = text;
        out["labels"] = labels;
    }
    return out;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n"))
        throw InputError("graph object needs an n field");
    Graph g(j.at("n").get<int>());
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("each edge must be a pair");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    }
    if (j.contains("labels")) {
        for (const auto& [key, value] : j.at("labels").items()) {
            int v = std::stoi(key);
            if (v < 0 || v >= g.n) throw InputError("label on a missing vertex");
            g.labels[v] = value.get<std::string>();
        }
    }
    return g;
}

Json rep_to_json(const Representation& rep) {
    Json ranks = Json::array();
    for (const auto& r : rep.ranks) ranks.push_back(exact_to_json(r));
    Json thresholds = Json::array();
    for (const auto& t : rep.thresholds) thresholds.push_back(exact_to_json(t));
    return Json{{"ranks", ranks}, {"thresholds", thresholds}};
}

Representation rep_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ranks") || !j.contains("thresholds"))
        throw InputError("representation needs ranks and thresholds");
    Representation rep;
    for (const auto& r : j.at("ranks")) rep.ranks.push_back(exact_from_json(r));
    for (const auto& t : j.at("thresholds")) rep.thresholds.push_back(exact_from_json(t));
    rep.validate();
    return rep;
}

Json verify_report_to_json(const VerifyReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back(Json{{"u", v.u},
                                  {"v", v.v},
                                  {"sum", exact_to_json(v.sum)},
                                  {"region", v.region},
                                  {"is_edge", v.is_edge}});
    }
    return Json{{"ok", report.ok}, {"violations", violations}};
}

Json plan_to_json(const ClusterPlan& plan) {
    Json anchors = Json::array();
    for (const auto& a : plan.anchors) anchors.push_back(exact_to_json(a));
    Json triples = Json::array();
    for (const auto& t : plan.triples) triples.push_back(Json::array({t[0], t[1], t[2]}));
    return Json{{"m", plan.m},
                {"boundary", plan.boundary},
                {"anchors", anchors},
                {"triples", triples},
                {"delta_lb", rat_to_string(plan.delta_lb)},
                {"eps", rat_to_string(plan.eps)}};
}

Json theta_result_to_json(const ThetaResult& result) {
    return Json{{"lo", result.lo},
                {"hi", result.hi},
                {"exact", result.exact()},
                {"source", result.source},
                {"boundary", result.boundary}};
}

Json construction_to_json(const Construction& c) {
    Json out{{"spec", c.spec.to_string()},
             {"graph", graph_to_json(c.graph)},
             {"representation", rep_to_json(c.rep)},
             {"threshold_count", c.rep.threshold_count()},
             {"formula", theta_result_to_json(c.formula)},
             {"tight", c.tight}};
    if (c.plan) out["plan"] = plan_to_json(*c.plan);
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

namespace {

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}  // namespace

std::string graph_to_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  " << v;
        auto it = g.labels.find(v);
        if (it != g.labels.end()) out << " [label=\"" << dot_escape(it->second) << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& err) {
        throw InputError("bad JSON in " + path + ": " + err.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace mtg
