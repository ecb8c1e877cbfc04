#include <doctest.h>

#include <cmath>

#include "simplicial/fixtures.hpp"
#include "simplicial/mining.hpp"

using namespace simplicial;

namespace {

FeatureTable toy_table() {
    FeatureTable tbl;
    for (int i = 0; i < 6; ++i) tbl.add_individual(std::to_string(i));
    tbl.add_feature("a", {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
    tbl.add_feature("b", {0.0, 0.0, 1.0, 1.0, 2.0, 2.0});
    return tbl;
}

Target toy_target() {
    Target t;
    t.name = "hit";
    t.labels = {{"0", true}, {"1", true}, {"2", false},
                {"3", false}, {"4", false}, {"5", true}};
    return t;
}

}  // namespace

TEST_CASE("rational arithmetic normalizes") {
    CHECK(Rational{2, 4} == Rational{1, 2});
    CHECK(Rational{1, -2} == Rational{-1, 2});
    CHECK((Rational{5, 9} - Rational{13, 20}) == Rational{-17, 180});
    CHECK(Rational{6, 13} - Rational{7, 20} == Rational{29, 260});
    CHECK(Rational{7, 20}.to_string() == "7/20");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("support") {
    const auto tbl = toy_table();
    CHECK(support(tbl, Pattern{{"a", CmpOp::lt, 3.5}}) ==
          std::vector<std::string>{"0", "1", "2"});
    CHECK(support(tbl, Pattern{{"a", CmpOp::lt, 0.5}}).empty());
    CHECK(support(tbl, Pattern{{"b", CmpOp::ge, 1.0}, {"a", CmpOp::le, 4.0}}) ==
          std::vector<std::string>{"2", "3"});

    SUBCASE("a condition conjoined with itself changes nothing") {
        const Pattern once{{"a", CmpOp::lt, 3.5}};
        const Pattern twice{{"a", CmpOp::lt, 3.5}, {"a", CmpOp::lt, 3.5}};
        CHECK(twice.length() == 1);
        CHECK(support(tbl, once) == support(tbl, twice));
    }
    SUBCASE("unknown features are rejected") {
        CHECK_THROWS_AS(support(tbl, Pattern{{"zz", CmpOp::lt, 1.0}}), std::invalid_argument);
    }
    SUBCASE("fixture support of (deg_pp_1 < 4)") {
        const auto congress = fixtures::congress_feature_table();
        CHECK(support(congress, Pattern{{"deg_pp_1", CmpOp::lt, 4.0}}) ==
              std::vector<std::string>{"1", "2", "5", "6", "10"});
    }
}

TEST_CASE("target share and base rate") {
    const auto tbl = toy_table();
    const auto t = toy_target();
    CHECK(base_rate(tbl, t) == doctest::Approx(0.5));
    CHECK(target_share(tbl, Pattern{{"a", CmpOp::lt, 3.5}}, t) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(target_share(tbl, Pattern{{"a", CmpOp::lt, 0.0}}, t), std::invalid_argument);

    SUBCASE("all-ones target has share 1 on any nonempty support") {
        Target ones;
        ones.name = "ones";
        for (const auto& id : tbl.individuals()) ones.labels[id] = true;
        CHECK(target_share(tbl, Pattern{{"a", CmpOp::gt, 4.5}}, ones) == doctest::Approx(1.0));
    }
    SUBCASE("all-zero target has base rate 0") {
        Target zeros;
        zeros.name = "zeros";
        for (const auto& id : tbl.individuals()) zeros.labels[id] = false;
        CHECK(base_rate(tbl, zeros) == 0.0);
    }
    SUBCASE("empty table has no base rate") {
        CHECK_THROWS_AS(base_rate(FeatureTable{}, t), std::invalid_argument);
    }
    SUBCASE("a missing label is an error") {
        Target partial;
        partial.name = "partial";
        partial.labels = {{"0", true}};
        CHECK_THROWS_AS(base_rate(tbl, partial), std::invalid_argument);
    }
}

TEST_CASE("quality-function family") {
    const auto tbl = toy_table();
    const auto t = toy_target();
    const Pattern p{{"a", CmpOp::lt, 3.5}};  // support 3, share 2/3, base 1/2

    CHECK(quality(tbl, p, t, QualitySpec{0.0}) == doctest::Approx(1.0 / 6.0));
    CHECK(quality(tbl, p, t, QualitySpec{0.5}) == doctest::Approx(std::sqrt(3.0) / 6.0));
    CHECK(quality(tbl, p, t, QualitySpec{1.0}) == doctest::Approx(0.5));

    SUBCASE("exact fractions for integer exponents") {
        CHECK(*quality_detail(tbl, p, t, QualitySpec{0.0}).exact == Rational{1, 6});
        CHECK(*quality_detail(tbl, p, t, QualitySpec{1.0}).exact == Rational{1, 2});
        CHECK_FALSE(quality_detail(tbl, p, t, QualitySpec{0.5}).exact.has_value());
    }
    SUBCASE("empty support reports 0 with a flag") {
        const Pattern none{{"a", CmpOp::lt, 0.0}};
        const auto q = quality_detail(tbl, none, t, QualitySpec{0.0});
        CHECK(q.value == 0.0);
        CHECK(q.empty_support);
    }
    SUBCASE("share equal to the base rate gives quality 0 for every a") {
        const Pattern p2{{"a", CmpOp::le, 4.0}};  // {0,1,2,3}: 2 hits of 4 -> share 1/2 = base
        for (double a : {0.0, 0.5, 1.0}) {
            CHECK(quality(tbl, p2, t, QualitySpec{a}) == doctest::Approx(0.0));
        }
    }
    SUBCASE("gain quality is bounded by [-t0, 1 - t0]") {
        for (double th : {0.5, 1.5, 2.5, 3.5, 4.5, 5.5, 6.5}) {
            for (auto op : {CmpOp::lt, CmpOp::gt}) {
                const auto q = quality_detail(tbl, Pattern{{"a", op, th}}, t, QualitySpec{0.0});
                if (q.empty_support) continue;
                CHECK(q.value >= -0.5 - 1e-12);
                CHECK(q.value <= 0.5 + 1e-12);
            }
        }
    }
}

TEST_CASE("reference quality values from the congress tables") {
    const auto tbl = fixtures::congress_feature_table();
    const auto attacker = fixtures::congress_attacker_target();
    const auto non_attacker = fixtures::congress_non_attacker_target();

    CHECK(base_rate_fraction(tbl, non_attacker) == Rational{13, 20});
    CHECK(base_rate_fraction(tbl, attacker) == Rational{7, 20});

    for (const auto& ref : fixtures::reference_qualities()) {
        CAPTURE(ref.label);
        const auto& target = ref.against_attacker ? attacker : non_attacker;
        const auto q = quality_detail(tbl, ref.pattern, target, QualitySpec{0.0});
        REQUIRE(q.exact.has_value());
        CHECK(*q.exact == ref.computed);
    }
}

TEST_CASE("threshold scans") {
    const auto congress = fixtures::congress_feature_table();
    const auto attacker = fixtures::congress_attacker_target();
    const auto non_attacker = fixtures::congress_non_attacker_target();

    SUBCASE("deg_pp_1 with < against non-attackers reaches 7/20 at support 5") {
        const auto r = scan_thresholds(congress, "deg_pp_1", CmpOp::lt, non_attacker,
                                       QualitySpec{0.0});
        CHECK(r.quality == doctest::Approx(7.0 / 20.0));
        CHECK(r.support == 5);  // tie at 3/3 vs 5/5 broken toward larger support
        CHECK_FALSE(r.degenerate);
    }
    SUBCASE("eig_1 with > against attackers reaches 13/20") {
        const auto r = scan_thresholds(congress, "eig_1", CmpOp::gt, attacker, QualitySpec{0.0});
        CHECK(r.quality == doctest::Approx(13.0 / 20.0));
        CHECK(r.support == 1);
    }
    SUBCASE("deg_pp_2 with < against non-attackers reaches 7/20") {
        const auto r = scan_thresholds(congress, "deg_pp_2", CmpOp::lt, non_attacker,
                                       QualitySpec{0.0});
        CHECK(r.quality == doctest::Approx(7.0 / 20.0));
    }
    SUBCASE("constant feature is flagged degenerate") {
        FeatureTable tbl;
        tbl.add_individual("0");
        tbl.add_individual("1");
        tbl.add_feature("c", {5.0, 5.0});
        Target t;
        t.name = "t";
        t.labels = {{"0", true}, {"1", false}};
        const auto r = scan_thresholds(tbl, "c", CmpOp::lt, t, QualitySpec{0.0});
        CHECK(r.degenerate);
    }
    SUBCASE("winner dominates an exhaustive midpoint re-scan") {
        const auto tbl = toy_table();
        const auto t = toy_target();
        for (auto op : {CmpOp::lt, CmpOp::le, CmpOp::gt, CmpOp::ge}) {
            const auto best = scan_thresholds(tbl, "a", op, t, QualitySpec{0.5});
            for (double th = 0.5; th < 7.0; th += 0.5) {
                const auto q = quality_detail(tbl, Pattern{{"a", op, th}}, t, QualitySpec{0.5});
                CHECK(best.quality >= q.value - 1e-12);
            }
        }
    }
}

TEST_CASE("pattern-set evaluation") {
    const auto congress = fixtures::congress_feature_table();
    const auto attacker = fixtures::congress_attacker_target();
    const auto non_attacker = fixtures::congress_non_attacker_target();

    std::vector<Pattern> degree_patterns = {
        Pattern{{"deg_pp_1", CmpOp::lt, 4.0}},  Pattern{{"deg_pp_2", CmpOp::lt, 2.0}},
        Pattern{{"deg_pp_3", CmpOp::lt, 1.0}},  Pattern{{"deg_pp_1", CmpOp::gt, 5.0}},
        Pattern{{"deg_pp_2", CmpOp::gt, 14.0}}, Pattern{{"deg_pp_3", CmpOp::gt, 7.0}}};

    const auto rows = evaluate_pattern_set(congress, degree_patterns, {non_attacker, attacker},
                                           QualitySpec{0.0});
    CHECK(rows.size() == 12);
    CHECK(rows.front().quality == doctest::Approx(13.0 / 20.0));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i - 1].quality >= rows[i].quality);
    }

    SUBCASE("empty pattern list gives an empty report") {
        CHECK(evaluate_pattern_set(congress, {}, {attacker}, QualitySpec{0.0}).empty());
    }
}

TEST_CASE("complementary targets have shares summing to 1") {
    const auto tbl = fixtures::congress_feature_table();
    const auto attacker = fixtures::congress_attacker_target();
    const auto non_attacker = fixtures::congress_non_attacker_target();
    for (const auto& ref : fixtures::reference_qualities()) {
        const auto rows = support_rows(tbl, ref.pattern);
        if (rows.empty()) continue;
        CHECK(target_share(tbl, ref.pattern, attacker) +
                  target_share(tbl, ref.pattern, non_attacker) ==
              doctest::Approx(1.0));
    }
}

TEST_CASE("adding a conjunct never enlarges the support") {
    const auto tbl = fixtures::congress_feature_table();
    const std::vector<AtomicCondition> conds = {{"deg_pp_1", CmpOp::lt, 7.0},
                                                {"eig_1", CmpOp::gt, 0.5},
                                                {"closeness_1", CmpOp::ge, 0.025}};
    for (std::size_t i = 0; i < conds.size(); ++i) {
        std::vector<AtomicCondition> prefix(conds.begin(), conds.begin() + i + 1);
        const auto now = support_rows(tbl, Pattern{prefix}).size();
        if (i > 0) {
            std::vector<AtomicCondition> before(conds.begin(), conds.begin() + i);
            CHECK(now <= support_rows(tbl, Pattern{before}).size());
        }
    }
}
