// SPDX-License-Identifier: Apache-2.0
// Command line front end: build family graphs, run the constructions,
// verify and color representations, and query the formula or the oracle.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mtg/construct.hpp"
#include "mtg/errors.hpp"
#include "mtg/io.hpp"
#include "mtg/oracle.hpp"
#include "mtg/spec_parse.hpp"
#include "mtg/theta.hpp"

namespace {

using mtg::Json;

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kValidNotTight = 2;
constexpr int kUsageError = 3;
constexpr int kBudgetExceeded = 4;

struct Options {
    bool json = false;
};

void emit(const Options& opt, const Json& machine, const std::string& human) {
    if (opt.json)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << human;
}

std::string describe_formula(const mtg::ThetaResult& r) {
    std::ostringstream out;
    if (r.exact())
        out << r.lo;
    else
        out << "in [" << r.lo << ", " << r.hi << "]";
    out << " [" << r.source << "]";
    return out.str();
}

std::string decimals(const mtg::ExactReal& x) { return x.to_decimal_string(6); }

int run_build(const Options& opt, const std::string& spec_text,
              const std::string& out_path) {
    mtg::FamilySpec spec = mtg::parse_family_spec(spec_text);
    mtg::Graph g = mtg::build_family(spec);
    Json j = mtg::graph_to_json(g);
    if (!out_path.empty()) {
        mtg::write_json_file(out_path, j);
        std::ostringstream human;
        human << spec.to_string() << ": " << g.n << " vertices, " << g.edges.size()
              << " edges -> " << out_path << "\n";
        emit(opt, Json{{"spec", spec.to_string()},
                       {"n", g.n},
                       {"edges", g.edges.size()},
                       {"output", out_path}},
             human.str());
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kOk;
}

int run_construct(const Options& opt, const std::string& spec_text,
                  const std::string& out_path) {
    mtg::FamilySpec spec = mtg::parse_family_spec(spec_text);
    mtg::Construction c = mtg::construct_for(spec);
    Json bundle = mtg::construction_to_json(c);
    if (!out_path.empty()) mtg::write_json_file(out_path, bundle);
    std::ostringstream human;
    human << c.spec.to_string() << ": " << c.graph.n << " vertices, "
          << c.rep.threshold_count() << " thresholds, theta "
          << describe_formula(c.formula) << "\n";
    human << "thresholds:";
    for (const auto& t : c.rep.thresholds) human << " " << decimals(t);
    human << "\n";
    human << "tight: " << (c.tight ? "yes" : "no") << "\n";
    if (!c.note.empty()) human << "note: " << c.note << "\n";
    if (!out_path.empty()) human << "bundle -> " << out_path << "\n";
    if (opt.json && out_path.empty())
        emit(opt, bundle, human.str());
    else
        emit(opt,
             Json{{"spec", c.spec.to_string()},
                  {"threshold_count", c.rep.threshold_count()},
                  {"formula", mtg::theta_result_to_json(c.formula)},
                  {"tight", c.tight},
                  {"output", out_path}},
             human.str());
    return kOk;
}

int run_verify(const Options& opt, const std::string& graph_path,
               const std::string& rep_path) {
    mtg::Graph g = mtg::graph_from_json(mtg::read_json_file(graph_path));
    mtg::Representation rep = mtg::rep_from_json(mtg::read_json_file(rep_path));
    mtg::VerifyReport report = mtg::verify(g, rep);
    std::ostringstream human;
    if (report.ok) {
        human << "ok: all " << g.n * (g.n - 1) / 2 << " pairs match\n";
    } else {
        human << report.violations.size() << " violated pair(s)\n";
        size_t shown = 0;
        for (const auto& v : report.violations) {
            if (++shown > 10) {
                human << "  ...\n";
                break;
            }
            human << "  {" << v.u << "," << v.v << "}: sum " << decimals(v.sum)
                  << " lies in region " << v.region << " ("
                  << (v.region % 2 == 1 ? "edge" : "nonedge") << ") but the graph has "
                  << (v.is_edge ? "an edge" : "no edge") << "\n";
        }
    }
    emit(opt, mtg::verify_report_to_json(report), human.str());
    return report.ok ? kOk : kVerifyFailure;
}

int run_certify(const Options& opt, const std::string& spec_text) {
    mtg::FamilySpec spec = mtg::parse_family_spec(spec_text);
    mtg::Construction c = mtg::construct_for(spec);
    // construct_for already gates on verify; re-check here so the exit code
    // never depends on an internal invariant.
    mtg::VerifyReport report = mtg::verify(c.graph, c.rep);
    std::ostringstream human;
    human << "spec: " << c.spec.to_string() << "\n";
    human << "verified: " << (report.ok ? "yes" : "NO") << "\n";
    human << "thresholds: " << c.rep.threshold_count() << "\n";
    human << "theta: " << describe_formula(c.formula) << "\n";
    human << "tight: " << (c.tight ? "yes" : "no") << "\n";
    if (!c.note.empty()) human << "note: " << c.note << "\n";
    Json machine{{"spec", c.spec.to_string()},
                 {"verified", report.ok},
                 {"threshold_count", c.rep.threshold_count()},
                 {"formula", mtg::theta_result_to_json(c.formula)},
                 {"tight", c.tight}};
    if (!c.note.empty()) machine["note"] = c.note;
    emit(opt, machine, human.str());
    if (!report.ok) return kVerifyFailure;
    return c.tight ? kOk : kValidNotTight;
}

int run_theta_formula(const Options& opt, const std::string& spec_text) {
    mtg::FamilySpec spec = mtg::parse_family_spec(spec_text);
    mtg::ThetaResult r = mtg::theta_formula(spec);
    std::ostringstream human;
    human << "theta(" << spec.to_string() << ") = " << describe_formula(r) << "\n";
    emit(opt, mtg::theta_result_to_json(r), human.str());
    return kOk;
}

int run_theta_oracle(const Options& opt, const std::string& graph_path, int max_k,
                     long budget_nodes, double timeout, int workers) {
    mtg::Graph g = mtg::graph_from_json(mtg::read_json_file(graph_path));
    mtg::OracleBudget budget;
    budget.max_nodes = budget_nodes;
    budget.timeout_sec = timeout;
    mtg::ThetaSearchResult result = mtg::theta_search(g, max_k, budget, workers);
    std::ostringstream human;
    if (result.theta.exact())
        human << "theta = " << result.theta.lo;
    else
        human << "theta in [" << result.theta.lo << ", " << result.theta.hi << "]";
    human << " (" << result.theta.source << ", " << result.nodes << " nodes)\n";
    Json machine{{"theta", mtg::theta_result_to_json(result.theta)},
                 {"exceeded", result.exceeded},
                 {"nodes", result.nodes}};
    if (result.witness) {
        machine["witness"] = mtg::rep_to_json(*result.witness);
        human << "witness thresholds:";
        for (const auto& t : result.witness->thresholds) human << " " << decimals(t);
        human << "\n";
    }
    emit(opt, machine, human.str());
    if (result.exceeded || !result.theta.exact()) return kBudgetExceeded;
    return kOk;
}

int run_color(const Options& opt, const std::string& graph_path,
              const std::string& rep_path) {
    mtg::Graph g = mtg::graph_from_json(mtg::read_json_file(graph_path));
    mtg::Representation rep = mtg::rep_from_json(mtg::read_json_file(rep_path));
    mtg::VerifyReport report = mtg::verify(g, rep);
    if (!report.ok) {
        std::cerr << "representation does not verify; nothing to color\n";
        return kVerifyFailure;
    }
    // Color every triangle of the graph; the admissibility lemmas only apply
    // when the triangles are pairwise disjoint.
    std::vector<std::array<int, 3>> triangles;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            for (int w = v + 1; w < g.n; ++w)
                if (g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w))
                    triangles.push_back({u, v, w});
    std::vector<mtg::ColorTriple> colors = mtg::color_triangles(g, rep, triangles);
    std::vector<int> seen(static_cast<size_t>(g.n), 0);
    bool disjoint = true;
    for (const auto& t : triangles)
        for (int v : t) disjoint = disjoint && !std::exchange(seen[static_cast<size_t>(v)], 1);
    std::ostringstream human;
    Json list = Json::array();
    for (size_t i = 0; i < triangles.size(); ++i) {
        human << "triangle {" << triangles[i][0] << "," << triangles[i][1] << ","
              << triangles[i][2] << "}: colors {" << colors[i][0] << "," << colors[i][1]
              << "," << colors[i][2] << "}\n";
        list.push_back(Json{{"triangle", triangles[i]}, {"colors", colors[i]}});
    }
    Json machine{{"triangles", list}};
    if (disjoint) {
        auto conflict = mtg::check_coloring_lemmas(colors);
        machine["admissible"] = !conflict.has_value();
        if (conflict) {
            machine["conflict"] = *conflict;
            human << "not admissible: " << *conflict << "\n";
        } else {
            human << "admissible family of " << colors.size() << " triple(s)\n";
        }
    } else {
        human << "triangles overlap; admissibility lemmas not applicable\n";
    }
    emit(opt, machine, human.str());
    return kOk;
}

int run_export_dot(const std::string& graph_path, const std::string& out_path) {
    mtg::Graph g = mtg::graph_from_json(mtg::read_json_file(graph_path));
    std::string dot = mtg::graph_to_dot(g);
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        std::ofstream out(out_path);
        if (!out) throw mtg::InputError("cannot open " + out_path + " for writing");
        out << dot;
        std::cout << "dot -> " << out_path << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multithreshold graph constructions, verification, and search"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine readable JSON output");

    std::function<int()> action;

    std::string spec_text, graph_path, rep_path, out_path;

    auto* build = app.add_subcommand("build", "write a family graph as JSON");
    build->fallthrough();
    build->add_option("spec", spec_text, "family spec, e.g. cluster:1,2,3")->required();
    build->add_option("-o,--output", out_path, "output file (default stdout)");
    build->callback([&] { action = [&] { return run_build(opt, spec_text, out_path); }; });

    auto* construct = app.add_subcommand("construct", "run the family construction");
    construct->fallthrough();
    construct->add_option("spec", spec_text, "family spec")->required();
    construct->add_option("-o,--output", out_path, "bundle output file");
    construct->callback(
        [&] { action = [&] { return run_construct(opt, spec_text, out_path); }; });

    auto* verify_cmd = app.add_subcommand("verify", "check a representation against a graph");
    verify_cmd->fallthrough();
    verify_cmd->add_option("-g,--graph", graph_path, "graph JSON")->required();
    verify_cmd->add_option("-r,--rep", rep_path, "representation JSON")->required();
    verify_cmd->callback(
        [&] { action = [&] { return run_verify(opt, graph_path, rep_path); }; });

    auto* certify = app.add_subcommand(
        "certify", "construct, verify, and compare the count to the formula");
    certify->fallthrough();
    certify->add_option("spec", spec_text, "family spec")->required();
    certify->callback([&] { action = [&] { return run_certify(opt, spec_text); }; });

    auto* theta = app.add_subcommand("theta", "threshold number queries");
    theta->require_subcommand(1);
    auto* formula = theta->add_subcommand("formula", "closed-form value or bounds");
    formula->fallthrough();
    formula->add_option("spec", spec_text, "family spec")->required();
    formula->callback([&] { action = [&] { return run_theta_formula(opt, spec_text); }; });

    int max_k = 6;
    long budget_nodes = 1000000;
    double timeout = 60.0;
    int workers = 1;
    auto* oracle = theta->add_subcommand("oracle", "exact search for the true value");
    oracle->fallthrough();
    oracle->add_option("-g,--graph", graph_path, "graph JSON")->required();
    oracle->add_option("--max-k", max_k, "largest threshold count to try");
    oracle->add_option("--budget-nodes", budget_nodes, "search node budget per k");
    oracle->add_option("--timeout", timeout, "wall clock budget in seconds per k");
    oracle->add_option("--workers", workers, "search threads");
    oracle->callback([&] {
        action = [&] {
            return run_theta_oracle(opt, graph_path, max_k, budget_nodes, timeout, workers);
        };
    });

    auto* color = app.add_subcommand("color", "color the triangles of a verified rep");
    color->fallthrough();
    color->add_option("-g,--graph", graph_path, "graph JSON")->required();
    color->add_option("-r,--rep", rep_path, "representation JSON")->required();
    color->callback([&] { action = [&] { return run_color(opt, graph_path, rep_path); }; });

    auto* exporter = app.add_subcommand("export", "export formats");
    exporter->require_subcommand(1);
    auto* dot = exporter->add_subcommand("dot", "Graphviz dot");
    dot->fallthrough();
    dot->add_option("-g,--graph", graph_path, "graph JSON")->required();
    dot->add_option("-o,--output", out_path, "output file (default stdout)");
    dot->callback([&] { action = [&] { return run_export_dot(graph_path, out_path); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        return action ? action() : kUsageError;
    } catch (const mtg::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const mtg::LimitError& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const mtg::CoincidenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerifyFailure;
    }
}
