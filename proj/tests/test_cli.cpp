#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "censym/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = censym::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze reports index, unimodularity and csc facts") {
    auto file = write_temp("censym_id2.mat", "2 2\n1 0\n0 1\n");
    auto r = run({"analyze", file});
    REQUIRE(r.code == 0);
    json res = r.report()["results"];
    CHECK(res["lattice_index"] == 1);
    CHECK(res["unimodular"] == true);
    CHECK(res["delta"] == 1);
    CHECK(res["csc_unimodular"] == false);
    CHECK(res["rank"] == 2);

    auto gorb = write_temp("censym_gorb.mat", "3 3\n1 1 0\n1 0 1\n1 1 1\n");
    CHECK(run({"analyze", gorb}).report()["results"]["delta"] == 1);

    auto nn = write_temp("censym_nn.mat", "2 3\n2 1 0\n0 1 2\n");
    json nres = run({"analyze", nn}).report()["results"];
    CHECK(nres["lattice_index"] == 2);
    CHECK(nres["gcd_maximal_minors"] == 2);
    CHECK(nres["csc_lattice_index"] == 2);
}

TEST_CASE("reports are byte-identical across runs") {
    auto file = write_temp("censym_det.mat", "2 3\n2 1 0\n0 1 2\n");
    auto a = run({"analyze", file});
    auto b = run({"analyze", file});
    CHECK(a.out == b.out);
    auto g1 = run({"gb", file, "--csc", "--center-smallest"});
    auto g2 = run({"gb", file, "--csc", "--center-smallest"});
    CHECK(g1.out == g2.out);
}

TEST_CASE("gb subcommand on the five-vertex fixture graph") {
    auto file = write_temp("censym_tie.graph", "1 5\n3 5\n1 3\n2 5\n4 5\n2 4\n");
    auto r = run({"gb", file, "--graph", "--kind", "rho"});
    REQUIRE(r.code == 0);
    json res = r.report()["results"];
    CHECK(res["element_count"] == 1);
    CHECK(res["basis"]["text"][0] == "x3*x4*x5 - x1*x2*x6");
    CHECK(res["squarefree"] == true);
    CHECK(res["partial"] == false);
}

TEST_CASE("gb budget exhaustion exits 3 with a partial report") {
    auto file = write_temp("censym_k23.graph", "1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
    auto r = run({"gb", file, "--graph", "--kind", "mu+-", "--budget", "2"});
    CHECK(r.code == 3);
    CHECK(r.report()["results"]["partial"] == true);
}

TEST_CASE("graph-report via family generation") {
    auto r = run({"graph-report", "--family", "wheel:6"});
    REQUIRE(r.code == 0);
    json res = r.report()["results"];
    CHECK(res["disjoint_odd_cycles"].is_null());
    CHECK(res["rho_unimodular"]["flag"] == true);
    CHECK(res["criteria_agree"] == true);
    CHECK(res["bipartite"].is_null());

    auto c6 = run({"graph-report", "--family", "cycle:6"}).report()["results"];
    CHECK_FALSE(c6["bipartite"].is_null());
    CHECK(c6["chordal_bipartite"] == false);
}

TEST_CASE("hilbert subcommand reproduces the wheel numerator") {
    auto r = run({"hilbert", "--family", "wheel:4", "--kind", "rho+-"});
    REQUIRE(r.code == 0);
    json res = r.report()["results"];
    CHECK(res["h_vector"] == json::array({1, 8, 14, 8, 1}));
    CHECK(res["krull_dim"] == 5);
    CHECK(res["stabilized"] == true);
}

TEST_CASE("normal subcommand finds the displayed witness") {
    auto nn = write_temp("censym_nn2.mat", "2 3\n2 1 0\n0 1 2\n");
    auto r = run({"normal", nn, "--csc"});
    REQUIRE(r.code == 0);
    json res = r.report()["results"];
    CHECK(res["normal"] == false);
    CHECK(res["witness"] == json::array({1, -1, 1}));
    CHECK(res["witness_degree"] == 1);
    // without --csc the base configuration is normal
    CHECK(run({"normal", nn, "--bound", "4"}).report()["results"]["normal"] == true);
}

TEST_CASE("fano subcommand symmetrizes by default") {
    auto d2 = write_temp("censym_d2.mat", "2 2\n1 1\n1 -1\n");
    auto r = run({"fano", d2});
    REQUIRE(r.code == 0);
    CHECK(r.report()["results"]["gorenstein_fano"] == true);
    CHECK(r.report()["results"]["symmetrized_input"] == true);

    auto gora = write_temp("censym_gora.mat", "3 3\n1 1 0\n1 0 1\n0 1 1\n");
    CHECK(run({"fano", gora}).report()["results"]["gorenstein_fano"] == false);
}

TEST_CASE("theorem42 subcommand verifies its basis") {
    auto r = run({"theorem42", "--family", "bipartite:2,2"});
    REQUIRE(r.code == 0);
    json res = r.report()["results"];
    CHECK(res["verified"] == true);
    CHECK(res["element_count"] == 10);
    CHECK(res["raw_family_count"] == 10);
    // graph-labelled variable naming in the serialized basis
    bool found = false;
    for (const auto& line : res["basis"]["text"])
        if (line.get<std::string>().find("x_{1,1}") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("split-apex emits the displayed bipartite matrix") {
    auto file = write_temp("censym_tie2.graph", "1 5\n3 5\n1 3\n2 5\n4 5\n2 4\n");
    auto r = run({"split-apex", file, "--vertex", "5"});
    REQUIRE(r.code == 0);
    json res = r.report()["results"];
    CHECK(res["result_vertices"] == 7 - 1);
    CHECK(res["bipartite"] == true);
    CHECK(res["rho_matrix"]["data"] ==
          json::array({json::array({1, 0, 1, 0, 0, 0}), json::array({0, 0, 0, 1, 0, 1}),
                       json::array({0, 1, 1, 0, 0, 0}), json::array({0, 0, 0, 0, 1, 1}),
                       json::array({1, 0, 0, 1, 0, 0}), json::array({0, 1, 0, 0, 1, 0})}));
}

TEST_CASE("error taxonomy maps to exit codes") {
    CHECK(run({"analyze", "/nonexistent/file.mat"}).code == 2);
    auto ragged = write_temp("censym_ragged.mat", "2 2\n1 2\n3\n");
    CHECK(run({"analyze", ragged}).code == 2);
    auto rankdef = write_temp("censym_rankdef.mat", "2 2\n1 2\n2 4\n");
    auto r = run({"analyze", rankdef});
    CHECK(r.code == 0);  // analyze reports rank deficiency in-band
    CHECK(r.report()["results"]["lattice_index"] == "infinite");
    CHECK(run({"bogus-subcommand"}).code == 2);
    // precondition violation: theorem42 on a chordless 6-cycle
    CHECK(run({"theorem42", "--family", "cycle:6"}).code == 2);
}

TEST_CASE("json matrices and pretty printing") {
    auto jm = write_temp("censym_j.mat", R"({"rows":2,"cols":2,"data":[[1,1],[1,-1]]})");
    auto r = run({"analyze", jm});
    REQUIRE(r.code == 0);
    CHECK(r.report()["results"]["delta"] == 2);
    auto pretty = run({"analyze", jm, "--pretty"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find('\n') != std::string::npos);
    CHECK(json::parse(pretty.out) == r.report());
}

}  // TEST_SUITE
