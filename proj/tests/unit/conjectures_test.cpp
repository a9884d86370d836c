#include <doctest.h>

#include <stdexcept>

#include "beatty/conjectures.hpp"
#include "beatty/search.hpp"

using namespace beatty;

TEST_CASE("RationalFunctionSpec validation") {
    CHECK_THROWS_AS(RationalFunctionSpec(1, {1}, {0}), std::domain_error);
    CHECK_THROWS_AS(RationalFunctionSpec(7, {}, {}), std::domain_error);
    CHECK_THROWS_AS(RationalFunctionSpec(7, {1, 2}, {0}), std::domain_error);
    CHECK_THROWS_AS(RationalFunctionSpec(7, {2, 1}, {0, 0}), std::domain_error);
    CHECK_THROWS_AS(RationalFunctionSpec(7, {1, 1}, {0, 0}), std::domain_error);
    CHECK_THROWS_AS(RationalFunctionSpec(9, {3}, {0}), std::domain_error);
    CHECK_THROWS_AS(RationalFunctionSpec(7, {7}, {0}), std::domain_error);
    CHECK_NOTHROW(RationalFunctionSpec(7, {1, 2, 4}, {-3, 10, 0}));
}

TEST_CASE("vanishes_at_root basics") {
    for (Int q = 2; q < 20; ++q) {
        const RationalFunctionSpec one(q, {1}, {0});
        for (Int e = 1; e < q; ++e) CHECK_FALSE(vanishes_at_root(one, e));
        CHECK_THROWS_AS(vanishes_at_root(one, 0), std::domain_error);
        CHECK_THROWS_AS(vanishes_at_root(one, q), std::domain_error);
    }
    // from the 7-cover {(1,0), (2,2), (4,3)}: u = pbar, v = -r
    const RationalFunctionSpec cover(7, {1, 2, 4}, {0, -3, -2});
    CHECK(vanishes_at_root(cover, 1));
    CHECK(numeric_magnitude(cover, 1) < 1e-12);
}

TEST_CASE("Buhler example") {
    const auto b = buhler_spec();
    for (Int e = 1; e < 15; ++e) {
        if (gcd(e, 15) == 1) CHECK(vanishes_at_root(b, e));
        if (e % 3 == 0) CHECK_FALSE(vanishes_at_root(b, e));
        CHECK(vanishes_at_root(b, e) == (numeric_magnitude(b, e) < 1e-8));
    }
    CHECK_FALSE(passes_subset_filter(b));
}

TEST_CASE("exact decision agrees with numerics on random specs") {
    for (Int q = 5; q <= 13; ++q) {
        std::vector<Int> units;
        for (Int x = 1; x < q; ++x)
            if (gcd(x, q) == 1) units.push_back(x);
        for (std::size_t a = 0; a < units.size(); ++a)
            for (std::size_t b = a + 1; b < units.size(); ++b)
                for (Int v = 0; v < q; ++v) {
                    const RationalFunctionSpec s(q, {units[a], units[b]}, {0, v});
                    for (Int e = 1; e < q; ++e) CHECK(vanishes_at_root(s, e) == (numeric_magnitude(s, e) < 1e-8));
                }
    }
}

TEST_CASE("rational function scans") {
    CHECK(scan_rational_function(5, 4, 4).empty());
    CHECK(scan_rational_function(7, 4, 6).empty());
    CHECK(scan_rational_function(11, 0, 10).empty());
    std::size_t scanned = 0;
    CHECK(scan_rational_function(13, 3, 12, 2, &scanned).empty());
    CHECK(scanned > 0);
    CHECK_THROWS_AS(scan_rational_function(1, 2, 1), std::domain_error);
    CHECK_THROWS_AS(scan_rational_function(7, 2, -1), std::domain_error);
}

TEST_CASE("scan counts the full v range") {
    // q = 5, n <= 2, sum u < 5: u in {(1),(2),(3),(4),(1,2),(1,3)}; v_1 = 0, v_2 in [0, 4]
    std::size_t scanned = 0;
    scan_rational_function(5, 2, 4, 1, &scanned);
    CHECK(scanned == 4 + 2 * 5);
}

TEST_CASE("strengthened scan") {
    for (Int q = 3; q <= 12; ++q) CHECK(strengthened_scan(q, 3, q - 1).empty());
    CHECK(passes_subset_filter(RationalFunctionSpec(7, {1, 2}, {0, 0})));
    CHECK_FALSE(passes_subset_filter(RationalFunctionSpec(7, {1, 2, 4}, {0, 0, 0})));
}

TEST_CASE("strong Martin inequalities") {
    CHECK(martin_inequalities_hold(7, {1, 2, 4}));
    CHECK(is_martin_expected({7, {1, 2, 4}}));
    CHECK(is_martin_expected({15, {8, 4, 2, 1}}));
    CHECK_FALSE(is_martin_expected({7, {1, 2, 3}}));
    CHECK_FALSE(is_martin_expected({9, {1, 2, 4}}));
    CHECK(is_martin_expected_up_to_sign({7, {1, 2, 3}}));
    CHECK(is_martin_expected_up_to_sign({15, {1, 2, 4, 7}}));
    CHECK_FALSE(is_martin_expected_up_to_sign({7, {1, 2, 5}}));

    // {1, 2, 3} = {1, 2, -4} mod 7 meets every inequality with equality
    CHECK(martin_inequalities_hold(7, {1, 2, 3}));
    const auto at7 = strong_martin_scan(3, 7, 7);
    REQUIRE(at7.size() == 2);
    CHECK(at7[0] == MartinTuple{7, {1, 2, 3}});
    CHECK(at7[1] == MartinTuple{7, {1, 2, 4}});
    CHECK(strong_martin_scan(3, 11, 11).empty());
    // q 4^3 > 7^3 first holds at q = 6, which has only two units
    std::size_t scanned = 0;
    strong_martin_scan(3, 2, 6, &scanned);
    CHECK(scanned == 0);
    strong_martin_scan(3, 7, 7, &scanned);
    CHECK(scanned > 0);

    const auto rep = run_strong_martin_scan(3, 2, 40);
    CHECK(rep.martin_hits.size() == 2);
    CHECK(rep.violation_count == 1);
    for (const auto& t : rep.martin_hits) CHECK(is_martin_expected_up_to_sign(t));
    const nlohmann::json j = rep;
    CHECK(j.at("kind") == "strong-martin");
    CHECK(j.at("hits").size() == rep.martin_hits.size());
    CHECK(j.at("hits")[0].at("expected") == false);
    CHECK(j.at("hits")[0].at("expected_up_to_sign") == true);
}

TEST_CASE("search covers induce vanishing rational functions") {
    const auto rep = run_full_search(5, 33, 2);
    for (const auto& c : rep.perfect_covers) {
        const auto spec = rational_function_of_cover(c);
        REQUIRE(spec.has_value());
        CHECK(vanishes_at_root(*spec, 1));
    }
    for (Int q = 3; q <= 41; q += 2) {
        const auto spec = rational_function_of_cover(construct_cfc(q, 1, 0));
        REQUIRE(spec.has_value());
        CHECK(vanishes_at_root(*spec, 1));
    }
    CHECK_FALSE(rational_function_of_cover(CoveringInstance(6, {{2, 0}, {4, 1}})).has_value());
}

TEST_CASE("scan report JSON") {
    const auto rep = run_rf_scan(2, 9, 3, false, 2);
    CHECK(rep.violation_count == 0);
    const nlohmann::json j = rep;
    CHECK(j.at("kind") == "rf");
    CHECK(j.at("hits").empty());
    CHECK(j.at("v_bound") == "q-1");
    CHECK(j.at("scanned").get<std::size_t>() == rep.scanned);
}
