#include <doctest.h>

#include <sstream>

#include "simplicial/io.hpp"

using namespace simplicial;

TEST_CASE("edge-list parsing") {
    SUBCASE("comments and blank lines are skipped") {
        std::istringstream in("# header\n1,2\n\n2,3\n");
        const auto g = parse_edge_list(in, "edges.txt");
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(1, 2));
        CHECK(g.has_edge(2, 3));
    }
    SUBCASE("malformed lines carry their line number") {
        std::istringstream in("1,2\nnope\n");
        try {
            parse_edge_list(in, "edges.txt");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("edges.txt:2") != std::string::npos);
        }
    }
    SUBCASE("loops are rejected with a line number") {
        std::istringstream in("3,3\n");
        CHECK_THROWS_AS(parse_edge_list(in), ParseError);
    }
    SUBCASE("negative ids are rejected") {
        std::istringstream in("1,-2\n");
        CHECK_THROWS_AS(parse_edge_list(in), ParseError);
    }
    SUBCASE("empty input is an error") {
        std::istringstream in("# nothing\n");
        CHECK_THROWS_AS(parse_edge_list(in), ParseError);
    }
}

TEST_CASE("point-cloud parsing") {
    SUBCASE("well-formed points") {
        std::istringstream in("0,0.0,1.0\n1,2.5,-1.0\n");
        const auto pc = parse_point_cloud(in);
        CHECK(pc.size() == 2);
        CHECK(pc.dimension() == 2);
        CHECK(pc.coords(1)[0] == doctest::Approx(2.5));
    }
    SUBCASE("mismatched dimension is reported with its line") {
        std::istringstream in("0,0.0,1.0\n1,2.5\n");
        try {
            parse_point_cloud(in, "pts.csv");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("exchange data attaches to the cloud") {
        std::istringstream in("0,0.0\n1,1.0\n2,2.0\n");
        auto pc = parse_point_cloud(in);
        std::istringstream ex("0,1,4.0\n1,2,0.5\n");
        parse_exchange_data(ex, pc);
        CHECK(pc.distance(0, 1, Metric::exchange_size_d4) == doctest::Approx(0.25));
        CHECK(pc.distance(1, 2, Metric::exchange_size_d4) == doctest::Approx(2.0));
        CHECK(pc.distance(0, 2, Metric::exchange_flag_d5) == doctest::Approx(1.0));
    }
    SUBCASE("bad exchange size is rejected") {
        std::istringstream in("0,0.0\n1,1.0\n");
        auto pc = parse_point_cloud(in);
        std::istringstream ex("0,1,-3\n");
        CHECK_THROWS_AS(parse_exchange_data(ex, pc), ParseError);
    }
}

TEST_CASE("feature-table and target parsing") {
    SUBCASE("feature table with header") {
        std::istringstream in("individual,alpha,beta\nv0,1.5,2\nv1,0,3.25\n");
        const auto tbl = parse_feature_table(in);
        CHECK(tbl.size() == 2);
        CHECK(tbl.feature_names() == std::vector<std::string>{"alpha", "beta"});
        CHECK(tbl.column("beta")[1] == doctest::Approx(3.25));
    }
    SUBCASE("missing header is an error") {
        std::istringstream in("v0,1.5\n");
        CHECK_THROWS_AS(parse_feature_table(in), ParseError);
    }
    SUBCASE("ragged rows are rejected with their line") {
        std::istringstream in("individual,alpha\nv0,1.5\nv1\n");
        try {
            parse_feature_table(in, "f.csv");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("targets parse 0/1 labels") {
        std::istringstream in("individual,label\nv0,1\nv1,0\n");
        const auto t = parse_target(in, "attacker");
        CHECK(t("v0"));
        CHECK_FALSE(t("v1"));
    }
    SUBCASE("non-binary labels are rejected") {
        std::istringstream in("v0,2\n");
        CHECK_THROWS_AS(parse_target(in, "t"), ParseError);
    }
    SUBCASE("duplicate individuals are rejected") {
        std::istringstream in("v0,1\nv0,0\n");
        CHECK_THROWS_AS(parse_target(in, "t"), ParseError);
    }
}

TEST_CASE("pattern JSON parsing") {
    SUBCASE("objects and arrays of objects") {
        std::istringstream in(R"([
            {"feature": "a", "op": "<", "threshold": 4},
            [{"feature": "a", "op": ">=", "threshold": 1},
             {"feature": "b", "op": ">", "threshold": 0.5}]
        ])");
        const auto patterns = parse_patterns_json(in);
        REQUIRE(patterns.size() == 2);
        CHECK(patterns[0].length() == 1);
        CHECK(patterns[1].length() == 2);
        CHECK(patterns[0].conditions[0].op == CmpOp::lt);
    }
    SUBCASE("invalid op is rejected") {
        std::istringstream in(R"([{"feature": "a", "op": "!!", "threshold": 1}])");
        CHECK_THROWS_AS(parse_patterns_json(in), ParseError);
    }
    SUBCASE("invalid JSON is rejected") {
        std::istringstream in("not json");
        CHECK_THROWS_AS(parse_patterns_json(in), ParseError);
    }
}

TEST_CASE("centrality report serialization") {
    CentralityReport r;
    r.measure = "degree_pp";
    r.p = 2;
    r.order = {0, 1};
    r.values = {3.0, 0.123456789};
    r.meta.complex_dim = 2;

    SUBCASE("CSV uses 6 significant digits") {
        std::ostringstream out;
        write_centrality_csv(out, {r});
        CHECK(out.str() ==
              "vertex,measure,p,value\n0,degree_pp,2,3\n1,degree_pp,2,0.123457\n");
    }
    SUBCASE("table mode rounds to 3 decimals") {
        std::ostringstream out;
        write_centrality_csv(out, {r}, true);
        CHECK(out.str() ==
              "vertex,measure,p,value\n0,degree_pp,2,3.000\n1,degree_pp,2,0.123\n");
    }
    SUBCASE("JSON carries the metadata") {
        const auto doc = centrality_to_json({r});
        CHECK(doc["reports"][0]["measure"] == "degree_pp");
        CHECK(doc["reports"][0]["p"] == 2);
        CHECK(doc["reports"][0]["meta"]["dim"] == 2);
        CHECK(doc["reports"][0]["values"]["1"] == doctest::Approx(0.123456789));
    }
}

TEST_CASE("mining report serialization") {
    PatternEvaluation row{Pattern{{"a", CmpOp::ge, 0.027}},
                          "attacker",
                          13,
                          6.0 / 13.0,
                          29.0 / 260.0,
                          Rational{29, 260},
                          false};
    std::ostringstream out;
    write_mining_csv(out, {row});
    const std::string text = out.str();
    CHECK(text.find("pattern,target,support,share,quality,quality_exact") == 0);
    CHECK(text.find("29/260") != std::string::npos);
    CHECK(text.find("attacker,13") != std::string::npos);
}

TEST_CASE("SI trajectory serialization") {
    SIParams params;
    params.total = 4;
    params.initial_infected = 1;
    params.contact_probability = 0.5;
    params.contact_number = 2.0;

    SIState a;
    a.t = 0;
    a.infectious = {0};
    a.susceptible = {1, 2, 3};
    SIState b = a;
    b.t = 1;
    b.infectious = {0, 2};
    b.susceptible = {1, 3};

    std::ostringstream out;
    write_si_trajectory(out, {a, b}, params);
    std::istringstream lines(out.str());
    std::string line;
    REQUIRE(std::getline(lines, line));
    auto first = nlohmann::json::parse(line);
    CHECK(first["t"] == 0);
    CHECK(first["infectious_ids"] == nlohmann::json::array({0}));
    CHECK(first["g_expected"] == doctest::Approx(1.0));
    REQUIRE(std::getline(lines, line));
    auto second = nlohmann::json::parse(line);
    CHECK(second["infectious_ids"].size() == 2);
}
