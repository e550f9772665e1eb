#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vancoh/builtin_fixtures.hpp"
#include "vancoh/cli.hpp"
#include "vancoh/json_io.hpp"
#include "vancoh/report.hpp"
#include "vancoh/verify.hpp"

using namespace vancoh;

namespace {

const std::string kFixtures = VANCOH_FIXTURE_DIR;

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_input(const std::string& name, const std::string& body) {
    const std::string path = std::string("/tmp/vancoh_test_") + name + ".json";
    std::ofstream f(path);
    f << body;
    return path;
}

}  // namespace

TEST_CASE("cone input parsing") {
    const auto j = load_json_file(kFixtures + "/cone_generic_m4_n2.json");
    const auto parsed = parse_input(j);
    REQUIRE(parsed.mode == "cone");
    const auto& in = std::get<ConeSingularityInput>(parsed.value);
    CHECK(in.n == 2);
    CHECK(in.m() == 4);
    CHECK(in.e() == 4);

    CHECK_THROWS_AS(parse_input(Json{{"mode", "cone"}, {"n", 2}}), SchemaError);
    CHECK_THROWS_AS(
        parse_input(Json{{"mode", "cone"}, {"n", 2}, {"multiplicities", {1}}, {"degrees", {1, 1}}}),
        SchemaError);
    CHECK_THROWS_AS(parse_input(Json{{"mode", "cone"},
                                     {"n", 2},
                                     {"multiplicities", {1.5}},
                                     {"degrees", {1}}}),
                    SchemaError);
    CHECK_THROWS_AS(parse_input(Json{{"mode", "nope"}}), SchemaError);
}

TEST_CASE("snc link input parsing enforces n >= 2 at the schema level") {
    CHECK_THROWS_AS(parse_input(Json{{"mode", "snc_link"},
                                     {"n", 1},
                                     {"multiplicities", {1, 1}},
                                     {"rational_homology_manifold", false}}),
                    SchemaError);
}

TEST_CASE("jordan fixture file matches the built-in graph") {
    const auto j = load_json_file(kFixtures + "/a3_resolution.json");
    const auto parsed = parse_input(j);
    REQUIRE(parsed.mode == "jordan");
    const auto& g = std::get<ResolutionGraph>(parsed.value);
    const auto builtin = fixtures::a3_resolution_graph(2);

    REQUIRE(g.components.size() == builtin.components.size());
    for (size_t i = 0; i < g.components.size(); ++i) {
        CHECK(g.components[i].name == builtin.components[i].name);
        CHECK(g.components[i].multiplicity == builtin.components[i].multiplicity);
        CHECK(g.components[i].exceptional == builtin.components[i].exceptional);
    }
    REQUIRE(g.strata.size() == builtin.strata.size());
    for (const auto& st : builtin.strata) {
        const auto* other = g.find_stratum(st.comps);
        REQUIRE(other != nullptr);
        CHECK(other->connected_components == st.connected_components);
        CHECK(other->cohomology == st.cohomology);
    }
    REQUIRE(g.gysin.size() == builtin.gysin.size());
    for (size_t i = 0; i < g.gysin.size(); ++i) {
        CHECK(g.gysin[i].pair == builtin.gysin[i].pair);
        CHECK(g.gysin[i].single == builtin.gysin[i].single);
        CHECK(g.gysin[i].classes == builtin.gysin[i].classes);
    }

    const auto u = find_witness(g);
    REQUIRE(u.has_value());
    CHECK(check_condition_two(g, *u));
}

TEST_CASE("unipotent fixture file loads and yields no witness") {
    const auto parsed = parse_input(load_json_file(kFixtures + "/a3_resolution_unipotent.json"));
    const auto& g = std::get<ResolutionGraph>(parsed.value);
    CHECK(g.target_order == 1);
    CHECK(!find_witness(g).has_value());
    const auto builtin = fixtures::a3_resolution_graph(1);
    CHECK(g.gysin.size() == builtin.gysin.size());
}

TEST_CASE("cone report content") {
    const auto doc = build_cone_report(fixtures::generic_arrangement_input(4, 2));
    CHECK(doc.at("derived").at("e") == "4");
    CHECK(doc.at("derived").at("chi_u") == "1");
    CHECK(doc.at("zeta").at("display") == "(1-t^4)^-1");
    for (const auto& c : doc.at("checks")) CHECK(c.at("pass").get<bool>());
    CHECK(doc.at("oracles").at("agreement").get<bool>());

    // every numeric field is a string; nothing is ever a float
    std::function<void(const Json&)> no_floats = [&](const Json& j) {
        CHECK(!j.is_number_float());
        if (j.is_object() || j.is_array())
            for (const auto& v : j) no_floats(v);
    };
    no_floats(doc);
}

TEST_CASE("report JSON round-trips and agrees with the table text") {
    for (const char* name :
         {"cone_generic_m4_n2", "cone_quadric", "cone_weighted_pair", "snc_link_triple",
          "a3_resolution"}) {
        const auto parsed = parse_input(load_json_file(kFixtures + "/" + name + ".json"));
        Json doc;
        std::visit(
            [&](const auto& in) {
                using T = std::decay_t<decltype(in)>;
                if constexpr (std::is_same_v<T, ConeSingularityInput>)
                    doc = build_cone_report(in);
                else if constexpr (std::is_same_v<T, SncLinkInput>)
                    doc = build_snc_link_report(in);
                else
                    doc = build_jordan_report(in);
            },
            parsed.value);
        CHECK(Json::parse(render_report_json(doc)) == doc);
        const std::string table = render_report_table(doc, false);
        CHECK(!table.empty());
        if (doc.contains("zeta"))
            CHECK(table.find(doc.at("zeta").at("display").get<std::string>()) !=
                  std::string::npos);
    }
}

TEST_CASE("snc report renders intervals and undetermined degrees") {
    const auto doc =
        build_snc_link_report(SncLinkInput(3, {1, 1, 1}, false));
    const std::string table = render_report_table(doc, false);
    CHECK(table.find("[0, 1]") != std::string::npos);
    CHECK(table.find("?") != std::string::npos);
    CHECK(!doc.at("warnings").empty());

    const auto rhm = build_snc_link_report(SncLinkInput(3, {1, 1, 1}, true));
    bool found_exact_one = false;
    for (const auto& row : rhm.at("betti"))
        if (row.at("order") == "1")
            found_exact_one = row.at("ranks")[2].at("kind") == "exact" &&
                              row.at("ranks")[2].at("value") == "1";
    CHECK(found_exact_one);
}

TEST_CASE("cli end to end") {
    SECTION("cone table output") {
        const auto r = cli({"cone", "--input", kFixtures + "/cone_generic_m4_n2.json"});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("(1-t^4)^-1") != std::string::npos);
    }
    SECTION("cone json output parses") {
        const auto r = cli({"cone", "--input", kFixtures + "/cone_quadric.json", "--format",
                            "json"});
        CHECK(r.exit_code == 0);
        const Json doc = Json::parse(r.out);
        CHECK(doc.at("mode") == "cone");
        CHECK(doc.at("zeta").at("display") == "(1-t^2)^-1");
    }
    SECTION("snc-link") {
        const auto r = cli({"snc-link", "--input", kFixtures + "/snc_link_triple.json"});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("[0, 1]") != std::string::npos);
    }
    SECTION("jordan") {
        const auto r = cli({"jordan", "--input", kFixtures + "/a3_resolution.json"});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("necessary conditions only") != std::string::npos);
        CHECK(r.out.find("Z1'") != std::string::npos);
    }
    SECTION("jordan degenerate variant reports absence") {
        const auto r = cli({"jordan", "--input", kFixtures + "/a3_multiplicity_one.json"});
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("no vector satisfies") != std::string::npos);
    }
    SECTION("missing input is a usage error") {
        CHECK(cli({"cone"}).exit_code == 1);
        CHECK(cli({}).exit_code == 1);
        CHECK(cli({"bogus-subcommand"}).exit_code == 1);
    }
    SECTION("malformed JSON exits 1") {
        const auto path = temp_input("malformed", "{ not json");
        const auto r = cli({"cone", "--input", path});
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("malformed") != std::string::npos);
    }
    SECTION("schema violation exits 1 naming the field") {
        const auto path = temp_input("schema", R"({"mode": "cone", "n": 2,
            "multiplicities": [1], "degrees": [0]})");
        const auto r = cli({"cone", "--input", path});
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("degrees") != std::string::npos);
    }
    SECTION("d not dividing e in explicit mode exits 2") {
        const auto path = temp_input(
            "dnote", R"({"mode": "cone", "n": 2, "explicit": {"e": 5, "d": 2, "chi_u": 1, "m": 2}})");
        const auto r = cli({"cone", "--input", path});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("divide") != std::string::npos);
    }
    SECTION("incomplete jordan data exits 2 naming the stratum") {
        Json j = load_json_file(kFixtures + "/a3_resolution.json");
        for (auto& st : j.at("strata"))
            if (st.at("components") == Json::array({"E1"})) st.erase("cohomology");
        const auto path = temp_input("incomplete", j.dump());
        const auto r = cli({"jordan", "--input", path});
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("E1") != std::string::npos);
    }
    SECTION("mode mismatch between subcommand and file exits 1") {
        const auto r = cli({"snc-link", "--input", kFixtures + "/cone_quadric.json"});
        CHECK(r.exit_code == 1);
    }
    SECTION("VANCOH_COLOR=0 strips ANSI codes") {
        setenv("VANCOH_COLOR", "0", 1);
        const auto plain = cli({"cone", "--input", kFixtures + "/cone_quadric.json"});
        CHECK(plain.out.find("\033[") == std::string::npos);
        unsetenv("VANCOH_COLOR");
        const auto colored = cli({"cone", "--input", kFixtures + "/cone_quadric.json"});
        CHECK(colored.out.find("\033[") != std::string::npos);
    }
}

TEST_CASE("verify runs deterministically on the small budget") {
    std::ostringstream first, second;
    VerifyOptions opts;
    opts.seed = 1234;
    opts.full = false;
    const auto r1 = run_verify(opts, first);
    const auto r2 = run_verify(opts, second);
    CHECK(r1.all_pass);
    CHECK(first.str() == second.str());

    const auto r = cli({"verify", "--seed", "99", "--budget", "small"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}
