#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "properclass/orbit.hpp"
#include "properclass/serialize.hpp"
#include "properclass/verify_suite.hpp"

#include <json.hpp>

using namespace properclass;
using nlohmann::json;

TEST_CASE("homology serializes to the documented schema") {
    HomologyResult h;
    h.groups.resize(2);
    h.groups[0].betti = 1;
    h.groups[1].betti = 0;
    h.groups[1].torsion = {mpz_class(2)};
    json j = json::parse(homology_to_json(h));
    CHECK(j["schema"] == 1);
    CHECK(j["betti"] == json::array({1, 0}));
    CHECK(j["torsion"] == json::array({json::array(), json::array({2})}));
}

TEST_CASE("complex JSON round trip") {
    SimplicialComplex x = fixture_rp2();
    SimplicialComplex y = complex_from_json(complex_to_json(x));
    CHECK(x.simplices == y.simplices);
    CHECK(x.num_vertices == y.num_vertices);
}

TEST_CASE("category JSON lists objects, homs and composition triples") {
    PermGroup g = catalogue_perm_group("Z2");
    StandardModel m = standard_model(g, finite_family(g));
    json j = json::parse(category_to_json(m.orbit.category));
    CHECK(j["objects"].size() == 2);
    CHECK(j["morphisms"].size() == 4);
    CHECK(j["compositions"].size() > 0);
    // composition triples reference valid morphism ids
    for (const auto& triple : j["compositions"]) {
        REQUIRE(triple.size() == 3);
        for (const auto& id : triple) {
            CHECK(id.get<int>() >= 0);
            CHECK(id.get<int>() < 4);
        }
    }
}

TEST_CASE("verification reports serialize with verdicts") {
    VerificationReport r;
    r.id = "X1";
    r.claim = "test claim";
    r.computed = "values";
    r.verdict = "pass";
    r.seconds = 0.5;
    json j = json::parse(report_to_json(r));
    CHECK(j["id"] == "X1");
    CHECK(j["verdict"] == "pass");

    json suite = json::parse(reports_to_json({r}));
    CHECK(suite["passed"] == true);
    CHECK(suite["items"].size() == 1);
}

TEST_CASE("nullification report JSON carries the pi1 comparison") {
    NullificationReport rep = nullification_report(catalogue_group("ZxZ3"), 2);
    json j = json::parse(nullification_report_to_json(rep));
    CHECK(j["group"] == "ZxZ3");
    CHECK(j["verdict"] == "consistent");
    CHECK(j["pi1"]["abelianizations_match"] == true);
    CHECK(j["normalizer_prediction_matches"] == true);
    CHECK(j["homology"]["betti"] == json::array({1, 1}));
}

TEST_CASE("suite items are stable and deterministic for a fixed seed") {
    std::vector<std::string> ids = paper_suite_items();
    REQUIRE(ids.size() == 13);
    CHECK(ids.front() == "A1");
    CHECK(ids.back() == "A13");
}

TEST_CASE("overcategory report JSON") {
    OvercategoryReport rep = check_contractible_overcategory(fixture_single_triangle(), 0, 4, 10);
    json j = json::parse(overcategory_report_to_json(rep));
    CHECK(j["acyclic"] == true);
    CHECK(j["objects"] == 7);
}

#ifdef PROPERCLASS_CLI_PATH
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

int run_cli(const std::string& args, std::string* output = nullptr) {
    std::string tmp = "cli_test_output.tmp";
    std::string cmd = std::string(PROPERCLASS_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(tmp);
        std::ostringstream buf;
        buf << in.rdbuf();
        *output = buf.str();
    }
    std::remove(tmp.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("cli: bbar emits matching text and json numbers") {
    std::string text_out, json_out;
    CHECK(run_cli("bbar --group p3 --format text", &text_out) == 0);
    CHECK(run_cli("bbar --group p3 --format json", &json_out) == 0);
    json j = json::parse(json_out);
    CHECK(j["homology"]["betti"] == json::array({1, 0, 1}));
    CHECK(text_out.find("H0=Z, H1=0, H2=Z") != std::string::npos);
}

TEST_CASE("cli: unknown group exits with code three") {
    CHECK(run_cli("bbar --group nosuch") == 3);
    CHECK(run_cli("group --name nosuch") == 3);
}

TEST_CASE("cli: subgroup listing") {
    std::string out;
    CHECK(run_cli("group --name S3 --subgroups --format json", &out) == 0);
    json j = json::parse(out);
    CHECK(j["order"] == 6);
    CHECK(j["subgroups"].size() == 6);
}

TEST_CASE("cli: orbitcat reports acyclic nerve homology") {
    std::string out;
    CHECK(run_cli("orbitcat --group Z3 --max-dim 4 --format json", &out) == 0);
    json j = json::parse(out);
    CHECK(j["homology"]["betti"][0] == 1);
    for (size_t d = 1; d < j["homology"]["betti"].size(); ++d)
        CHECK(j["homology"]["betti"][d] == 0);
}
#endif
