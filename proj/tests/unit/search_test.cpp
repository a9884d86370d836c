#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "beatty/search.hpp"

using namespace beatty;

TEST_CASE("q_bound") {
    CHECK(q_bound(3, 1) == 7);
    CHECK(q_bound(4, 1) == 17);
    CHECK(q_bound(5, 1) == 33);
    CHECK(q_bound(6, 2) == 1460);
    const double base = 7.0 / (std::numbers::e - 1.0) + 1.0;
    CHECK(q_bound(7, 1) == static_cast<Int>(std::ceil(std::pow(base, 7) + 1.0)));
    CHECK(q_bound(7, 3) == static_cast<Int>(std::ceil((std::pow(base, 7) + 1.0) * 3)));
    CHECK_THROWS_AS(q_bound(2, 1), std::domain_error);
    CHECK_THROWS_AS(q_bound(4, 0), std::domain_error);
    CHECK_THROWS_AS(q_bound(40, 1), std::overflow_error);
}

TEST_CASE("inequality_sum") {
    // q = 7, (1, 2, 4): pbar = 4, 2 and sin(pi/7)/sin(4pi/7) + sin(pi/7)/sin(2pi/7) = 1
    CHECK(inequality_sum(7, {1, 2, 4}) == doctest::Approx(1.0).epsilon(1e-12));
    // members sharing a factor with q drop out
    CHECK(inequality_sum(9, {1, 3, 6}) == 0.0);
}

TEST_CASE("enumerate_candidates matches a bitmask enumeration") {
    const Int q_max = 16;
    const auto cands = enumerate_candidates(5, q_max);
    std::set<CandidateTuple> got(cands.begin(), cands.end());
    CHECK(got.size() == cands.size());
    std::set<CandidateTuple> expect;
    for (Int q = 4; q <= q_max; ++q)
        for (unsigned mask = 0; mask < (1u << (q - 2)); ++mask) {
            std::vector<Int> p{1};
            for (Int v = 2; v < q; ++v)
                if (mask & (1u << (v - 2))) p.push_back(v);
            if (p.size() < 3 || p.size() > 5) continue;
            Int sum = 0;
            bool pair = false;
            double ineq = 0.0;
            for (std::size_t a = 0; a < p.size(); ++a) {
                sum += p[a];
                for (std::size_t b = a + 1; b < p.size(); ++b) pair = pair || p[a] + p[b] == q;
                if (a == 0 || gcd(p[a], q) != 1) continue;
                Int inv = 1;
                while (p[a] * inv % q != 1) ++inv;
                ineq += std::sin(std::numbers::pi / q) / std::sin(std::numbers::pi * inv / q);
            }
            if (sum % q == 0 && !pair && ineq >= 1.0 - 1e-9) expect.insert({q, p});
        }
    CHECK(got == expect);
    CHECK(got.contains(CandidateTuple{7, {1, 2, 4}}));
    for (const auto& t : cands) CHECK(t.p[1] != t.q - 1);
}

TEST_CASE("enumeration order and thread independence") {
    const auto serial = enumerate_candidates(5, 25, 1);
    CHECK(serial == enumerate_candidates(5, 25, 4));
    for (std::size_t i = 1; i < serial.size(); ++i) {
        const auto& a = serial[i - 1];
        const auto& b = serial[i];
        CHECK((a.m() < b.m() || (a.m() == b.m() && (a.q < b.q || (a.q == b.q && a.p < b.p)))));
    }
}

TEST_CASE("boundary ties are the CFC-like tuples at equality") {
    const auto ties = boundary_ties(enumerate_candidates(3, 10));
    REQUIRE(ties.size() == 1);
    CHECK(ties[0] == CandidateTuple{7, {1, 2, 4}});
}

TEST_CASE("refine_by_rotation") {
    const auto cands = enumerate_candidates(5, 33);
    const auto kept = refine_by_rotation(cands);
    std::map<std::size_t, int> by_m;
    for (const auto& t : kept) ++by_m[t.m()];
    CHECK(by_m[3] == 1);
    CHECK(by_m[4] == 1);
    CHECK(by_m[5] == 10);
    CHECK(std::find(kept.begin(), kept.end(), CandidateTuple{7, {1, 2, 4}}) != kept.end());
    CHECK(std::find(kept.begin(), kept.end(), CandidateTuple{15, {1, 2, 4, 8}}) != kept.end());
    // a lone tuple survives only if every rotation maps it to itself
    CHECK(refine_by_rotation({CandidateTuple{11, {1, 3, 4, 5, 9}}}).size() == 1);
    CHECK(refine_by_rotation({CandidateTuple{13, {1, 2, 6, 8, 9}}}).empty());
}

TEST_CASE("exhaustive_r_search agrees with brute force") {
    for (const CandidateTuple& t : {CandidateTuple{7, {1, 2, 4}}, CandidateTuple{11, {1, 3, 4, 5, 9}},
                                    CandidateTuple{9, {1, 2, 6}}}) {
        std::vector<std::vector<Int>> brute;
        const Int q = t.q;
        std::vector<Int> r(t.m(), 0);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == t.m()) {
                std::vector<std::pair<Int, Int>> members;
                for (std::size_t i = 0; i < t.m(); ++i) members.emplace_back(t.p[i], r[i]);
                if (is_perfect_cover(CoveringInstance(q, members)).is_perfect) brute.push_back(r);
                return;
            }
            for (Int v = 0; v < q; ++v) {
                r[k] = v;
                self(self, k + 1);
            }
        };
        rec(rec, 1);
        CHECK(exhaustive_r_search(t) == brute);
        CHECK(exhaustive_r_search(t, 3) == brute);
    }
    const auto seven = exhaustive_r_search({7, {1, 2, 4}});
    REQUIRE(seven.size() == 1);
    CHECK(seven[0] == std::vector<Int>{0, 2, 3});
    CHECK(exhaustive_r_search({11, {1, 3, 4, 5, 9}}).empty());
    CHECK_THROWS_AS(exhaustive_r_search({5, {5}}), std::domain_error);
}

TEST_CASE("full search") {
    const auto rep = run_full_search(5, 33, 2);
    CHECK(rep.stage2_by_m.at(3) == 1);
    CHECK(rep.stage2_by_m.at(4) == 1);
    CHECK(rep.stage2_by_m.at(5) == 10);
    CHECK(rep.eliminated.size() == 9);
    for (const auto& t : rep.eliminated) CHECK(t.m() == 5);
    REQUIRE(rep.perfect_covers.size() == 3);
    std::set<Int> qs;
    for (const auto& c : rep.perfect_covers) {
        qs.insert(c.q());
        CHECK(is_perfect_cover(c).is_perfect);
        CHECK(covering_criterion(c).is_perfect);
        CHECK(find_cfc_parameters(c).has_value());
        for (Int j = 0; j < c.q(); ++j) CHECK(few_gi_property(c, j) == std::optional<bool>(true));
    }
    CHECK(qs == std::set<Int>{7, 15, 31});
    std::size_t total = 0;
    for (const auto& [m, n] : rep.stage1_by_m) total += n;
    CHECK(total == rep.stage1_count);
    for (const auto& t : rep.boundary_ties) CHECK(std::abs(inequality_sum(t.q, t.p) - 1.0) < 1e-9);

    const nlohmann::json a = rep;
    const nlohmann::json b = run_full_search(5, 33, 1);
    CHECK(a == b);
    CHECK(a.at("stage2_survivors").size() == 12);
    CHECK(a.at("perfect_covers")[0].at("q") == 7);
}
