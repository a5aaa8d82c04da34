#include "cspoly/reports.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace cspoly;
using nlohmann::json;

namespace {

const json& claim(const json& report, const std::string& name) {
    for (const auto& c : report.at("claims"))
        if (c.at("name") == name) return c;
    FAIL("missing claim " << name);
    static const json none;
    return none;
}

RunConfig config(const std::string& command, unsigned m) {
    RunConfig cfg;
    cfg.command = command;
    cfg.m = m;
    return cfg;
}

}  // namespace

TEST_SUITE("reports") {

TEST_CASE("2-neighborly report at m = 2") {
    const auto r = run_command(config("theorem-2neighb", 2));
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report["construction"]["N"] == 16);
    CHECK(r.report["construction"]["affine_dim"] == 6);
    CHECK(claim(r.report, "edge_count")["observed"] == 112);
    CHECK(claim(r.report, "two_neighborly")["status"] == "pass");
    CHECK(r.report["version"] == kToolVersion);
    CHECK(r.report["config"]["command"] == "theorem-2neighb");
    CHECK(r.report["timing"].is_null());
    CHECK(r.certificates->size() == 112);
    CHECK(r.vertices_csv.find("index,num,den,cluster,x0") == 0);
}

TEST_CASE("m = 1 runs below the hypothesis") {
    const auto r = run_command(config("theorem-2neighb", 1));
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report["details"]["below_hypothesis"] == true);
    CHECK(r.report["construction"]["N"] == 4);
    CHECK(r.report["construction"]["ambient_dim"] == 4);
    CHECK(claim(r.report, "affine_dimension")["status"] == "outside_hypothesis");
    CHECK(claim(r.report, "affine_dimension")["observed"] == 2);
}

TEST_CASE("configuration errors exit with 4") {
    CHECK(run_command(config("theorem-2neighb", 0)).exit_code == kExitConfigError);
    RunConfig c = config("theorem-2neighb", 2);
    c.s = 1;
    CHECK(run_command(c).exit_code == kExitConfigError);
    c = config("theorem-kneighb", 8);
    c.k = 2;
    CHECK(run_command(c).exit_code == kExitConfigError);
    c = config("antipodal", 2);
    c.tol.face = -1;
    CHECK(run_command(c).exit_code == kExitConfigError);
    c = config("antipodal", 2);
    c.precision_bits = 32;
    CHECK(run_command(c).exit_code == kExitConfigError);
    CHECK(run_command(config("nonsense", 2)).exit_code == kExitConfigError);
}

TEST_CASE("antipodal report") {
    const auto r = run_command(config("antipodal", 2));
    CHECK(r.exit_code == kExitOk);
    CHECK(claim(r.report, "all_pairs_strictly_antipodal")["observed"] == 28);
    CHECK(claim(r.report, "beats_baseline")["predicted"] == 3);
    CHECK(antipodal_baseline(6) == 3);
    CHECK(antipodal_baseline(9) == 9);
    CHECK(antipodal_baseline(7) == 4);
    CHECK(antipodal_lower_bound(6) == 8);
    CHECK(antipodal_lower_bound(8) == 26);
}

TEST_CASE("family command: generation and failing import") {
    RunConfig c = config("family", 4);
    c.k = 2;
    auto r = run_command(c);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report["construction"]["size"] == 3);
    REQUIRE(r.family);
    CHECK((*r.family)["verified_k"] == 2);

    const std::string path = "cspoly_test_family.json";
    {
        std::ofstream out(path);
        out << json{{"m", 4}, {"members", {3, 5, 3}}}.dump();
    }
    c.import_path = path;
    r = run_command(c);
    std::remove(path.c_str());
    CHECK(r.exit_code == kExitClaimFailure);
    CHECK(r.report["details"]["first_failing_subfamily"] == json::array({"{1,2}", "{1,2}"}));

    RunConfig impossible = config("family", 7);
    impossible.k = 3;
    CHECK(run_command(impossible).exit_code == kExitClaimFailure);
}

TEST_CASE("family json round trip") {
    SetFamily f;
    f.m = 6;
    f.members = {0b000111, 0b011001};
    const SetFamily g = family_from_json(family_to_json(f), 1);
    CHECK(g.m == 6);
    CHECK(g.members == f.members);
    CHECK(family_from_json(json::array({1, 2}), 3).m == 3);
    CHECK_THROWS(family_from_json(json{{"m", 2}, {"members", {7}}}, 2));
}

TEST_CASE("reports do not depend on the worker count") {
    RunConfig a = config("antipodal", 2);
    a.s = 2;
    RunConfig b = a;
    b.workers = 4;
    CHECK(run_command(a).report.dump() == run_command(b).report.dump());
}

TEST_CASE("timing is reported on request") {
    RunConfig c = config("antipodal", 1);
    c.timing = true;
    const auto r = run_command(c);
    CHECK(r.report["timing"].contains("total_seconds"));
}

}
