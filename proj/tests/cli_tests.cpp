// SPDX-License-Identifier: Apache-2.0
// End to end checks driving the installed binary through a shell.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "mtg/io.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MTG_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    RunResult r;
    r.out = out;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("exit codes separate the outcome classes") {
    CHECK(run("--help").code == 0);
    CHECK(run("certify cluster:0,0,2").code == 0);
    CHECK(run("certify multipartite:0,0,4").code == 2);  // valid but one over
    CHECK(run("construct cycle:5").code == 3);           // no covered construction
    CHECK(run("build bogus:1").code == 3);               // parse error
    CHECK(run("build path:0").code == 3);                // validation error
    CHECK(run("no-such-command").code == 3);
    CHECK(run("").code == 3);  // a subcommand is required
}

TEST_CASE("certify reports tightness in text output") {
    RunResult tight = run("certify cluster:1,1,4");
    CHECK(tight.code == 0);
    CHECK(tight.out.find("tight: yes") != std::string::npos);

    RunResult loose = run("certify multipartite:0,0,4");
    CHECK(loose.code == 2);
    CHECK(loose.out.find("tight: no") != std::string::npos);
    CHECK(loose.out.find("note:") != std::string::npos);
}

TEST_CASE("json mode emits parseable documents") {
    RunResult formula = run("--json theta formula multipartite:0,0,4");
    REQUIRE(formula.code == 0);
    mtg::Json f = mtg::Json::parse(formula.out);
    CHECK(f.at("lo") == 6);
    CHECK(f.at("hi") == 6);
    CHECK(f.at("exact") == true);

    RunResult bounds = run("--json theta formula 'complement(tent:9)'");
    REQUIRE(bounds.code == 0);
    mtg::Json b = mtg::Json::parse(bounds.out);
    CHECK(b.at("exact") == false);
    CHECK(b.at("lo").get<long>() <= b.at("hi").get<long>());

    RunResult cert = run("--json certify cluster:1,1,4");
    REQUIRE(cert.code == 0);
    mtg::Json c = mtg::Json::parse(cert.out);
    CHECK(c.at("verified") == true);
    CHECK(c.at("threshold_count") == 6);
    CHECK(c.at("tight") == true);
}

TEST_CASE("build, construct, verify round trip through files") {
    REQUIRE(run("build path:5 -o cli_graph.json").code == 0);
    REQUIRE(run("construct path:5 -o cli_bundle.json").code == 0);

    mtg::Json bundle = mtg::read_json_file("cli_bundle.json");
    REQUIRE(bundle.contains("representation"));
    mtg::write_json_file("cli_rep.json", bundle.at("representation"));

    RunResult ok = run("verify -g cli_graph.json -r cli_rep.json");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("ok") != std::string::npos);

    // The same representation cannot serve a different graph.
    REQUIRE(run("build cycle:5 -o cli_other.json").code == 0);
    RunResult bad = run("verify -g cli_other.json -r cli_rep.json");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("violated") != std::string::npos);
}

TEST_CASE("constructed bundles are byte stable") {
    REQUIRE(run("construct cluster:1,1,4 -o cli_b1.json").code == 0);
    REQUIRE(run("construct cluster:1,1,4 -o cli_b2.json").code == 0);
    CHECK(slurp("cli_b1.json") == slurp("cli_b2.json"));

    RunResult a = run("--json construct cluster:0,0,3");
    RunResult b = run("--json construct cluster:0,0,3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("oracle exit code flags an inconclusive search") {
    REQUIRE(run("build multipartite:0,0,2 -o cli_k33.json").code == 0);
    CHECK(run("theta oracle -g cli_k33.json --max-k 1").code == 4);
    RunResult full = run("--json theta oracle -g cli_k33.json --max-k 4");
    CHECK(full.code == 0);
    mtg::Json j = mtg::Json::parse(full.out);
    CHECK(j.at("theta").at("lo") == 2);
    CHECK(j.at("exceeded") == false);
    CHECK(j.contains("witness"));

    // A starved node budget must surface as exceeded, not as an answer.
    REQUIRE(run("build cluster:0,0,2 -o cli_2k3.json").code == 0);
    CHECK(run("theta oracle -g cli_2k3.json --budget-nodes 3").code == 4);
}

TEST_CASE("coloring a constructed cluster is admissible") {
    REQUIRE(run("construct cluster:0,0,4 -o cli_c4.json").code == 0);
    mtg::Json bundle = mtg::read_json_file("cli_c4.json");
    mtg::write_json_file("cli_c4_graph.json", bundle.at("graph"));
    mtg::write_json_file("cli_c4_rep.json", bundle.at("representation"));
    RunResult colored = run("color -g cli_c4_graph.json -r cli_c4_rep.json");
    CHECK(colored.code == 0);
    CHECK(colored.out.find("admissible") != std::string::npos);
}

TEST_CASE("dot export names every vertex") {
    REQUIRE(run("build path:3 -o cli_p3.json").code == 0);
    RunResult dot = run("export dot -g cli_p3.json");
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph") != std::string::npos);
    CHECK(dot.out.find("0 -- 1") != std::string::npos);
}
