#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "beatty/identities.hpp"

using namespace beatty;

namespace {

double csc(double x) { return 1.0 / std::sin(x); }

}  // namespace

TEST_CASE("cosets") {
    CHECK(coset(7, 1).elements == std::vector<Int>{1, 2, 4});
    CHECK(coset(7, 3).elements == std::vector<Int>{3, 6, 5});
    const auto z = coset(9, 0);
    CHECK(z.elements == std::vector<Int>(6, 0));
    CHECK(coset(7, -1).elements == std::vector<Int>{6, 5, 3});
    CHECK_THROWS_AS(coset(8, 1), std::domain_error);
    for (Int q = 3; q <= 201; q += 2) {
        std::set<Int> seen;
        std::size_t total = 0;
        for (const auto& part : coset_partition(q)) {
            total += part.size();
            seen.insert(part.begin(), part.end());
            for (Int x : part) CHECK(std::binary_search(part.begin(), part.end(), 2 * x % q));
        }
        CHECK(total == static_cast<std::size_t>(q));
        CHECK(seen.size() == static_cast<std::size_t>(q));
    }
}

TEST_CASE("csc identity for small q") {
    const auto seven = csc_identity_check(7);
    CHECK(seven.exact);
    CHECK(seven.m == 3);
    CHECK(std::abs(seven.residual) < 1e-9);
    const double pi = std::numbers::pi;
    CHECK(std::abs(csc(pi / 7) - csc(2 * pi / 7) - csc(3 * pi / 7)) < 1e-12);
    CHECK(csc_identity_terms(7) == std::vector<CscTerm>{{1, 1}, {-1, 2}, {-1, 3}});

    CHECK(csc_identity_check(21).exact);
    CHECK(csc_identity_terms(21) == std::vector<CscTerm>{{1, 1}, {-1, 2}, {-1, 4}, {-1, 5}, {-1, 8}, {1, 10}});
    CHECK(std::abs(csc(pi / 21) - csc(2 * pi / 21) - csc(4 * pi / 21) - csc(5 * pi / 21) - csc(8 * pi / 21) +
                   csc(10 * pi / 21)) < 1e-12);

    const auto three = csc_identity_check(3);
    CHECK(three.exact);
    CHECK(std::abs(three.residual) < 1e-12);
    CHECK(csc_identity_terms(3).empty());
    CHECK_THROWS_AS(csc_identity_check(10), std::domain_error);
}

TEST_CASE("csc identity sweep") {
    for (Int q = 3; q <= 151; q += 2) {
        const auto c = csc_identity_check(q);
        CHECK(c.exact);
        CHECK(std::abs(c.residual) < 1e-9);
        double folded = 0.0;
        for (const auto& t : csc_identity_terms(q)) {
            CHECK(t.a >= 1);
            CHECK(2 * t.a <= q);
            folded += static_cast<double>(t.coefficient) * csc(std::numbers::pi * static_cast<double>(t.a) / q);
        }
        CHECK(std::abs(folded) < 1e-9);
    }
}

TEST_CASE("S(q, t)") {
    const auto s72 = s_sum(7, 2);
    CHECK(s72.exact == CycloElt::from_integer(7, -1));
    CHECK(std::abs(s72.value - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(s_sum(7, 0).exact.is_zero());
    CHECK(s_sum_cover_multiplicity(7, 2) == 1);
    CHECK_FALSE(s_sum_cover_multiplicity(7, 1).has_value());
    CHECK_THROWS_AS(s_sum(7, -1), std::domain_error);

    const auto s898 = s_sum(89, 8);
    CHECK(s898.exact + s898.exact.conjugate() == CycloElt::from_integer(89, -2));
    CHECK(std::abs(s898.value.real() + 1.0) < 1e-9);
}

TEST_CASE("S equals minus the cover multiplicity when the cosets cover") {
    int covered = 0;
    for (Int q = 3; q <= 301; q += 2) {
        const Int m = order_of_two(q);
        for (Int t = 1; t <= m - 1; ++t) {
            const auto c = s_sum_cover_multiplicity(q, t);
            if (!c) continue;
            ++covered;
            CHECK(s_sum(q, t).exact == CycloElt::from_integer(q, -*c));
        }
    }
    CHECK(covered > 0);
}

TEST_CASE("ratio sums") {
    CHECK(std::abs(sine_ratio_sum(7, 2) + 2.0) < 1e-9);
    CHECK(std::abs(sine_ratio_sum(89, 8) + 2.0) < 1e-9);
    // the 11-term form with 2^{k+4} pi / 89 over 2^k pi / 89 is the same sum
    double alt = 0.0;
    for (int k = 1; k <= 11; ++k)
        alt += std::sin(std::ldexp(std::numbers::pi, k + 4) / 89) / std::sin(std::ldexp(std::numbers::pi, k) / 89);
    CHECK(std::abs(alt + 2.0) < 1e-6);
    // an even order of 2 alone is not enough: -1 is not a power of 2 mod 15
    CHECK(order_of_two(15) == 4);
    CHECK(std::abs(cosine_ratio_sum(15, 1) + std::sqrt(15.0)) < 1e-9);
    CHECK(std::abs(cosine_ratio_sum(5, 1)) < 1e-12);
    CHECK_THROWS_AS(sine_ratio_sum(7, 3), std::domain_error);
    CHECK_THROWS_AS(cosine_ratio_sum(7, 0), std::domain_error);
}

TEST_CASE("ratio sums are twice the real part and minus twice the imaginary part of S") {
    for (Int q = 3; q <= 301; q += 2) {
        const Int m = order_of_two(q);
        for (Int t = 1; t <= m - 1; ++t) {
            const auto s = s_sum(q, t);
            CHECK(std::abs(sine_ratio_sum(q, t) - 2.0 * s.value.real()) < 1e-9);
            CHECK(std::abs(cosine_ratio_sum(q, t) + 2.0 * s.value.imag()) < 1e-9);
            const auto c1 = coset(q, 1).elements;
            if (std::find(c1.begin(), c1.end(), q - 1) != c1.end()) CHECK(std::abs(cosine_ratio_sum(q, t)) < 1e-9);
        }
    }
}

TEST_CASE("identity records") {
    const auto c = csc_identity_record(7);
    CHECK(c.verified);
    CHECK(c.kind == "csc");
    CHECK(c.latex == "\\frac{1}{\\sin(\\pi/7)} - \\frac{1}{\\sin(2\\pi/7)} - \\frac{1}{\\sin(3\\pi/7)} = 0");
    const nlohmann::json j = c;
    CHECK(j.at("lhs_terms") == nlohmann::json::parse("[[1,1],[-1,2],[-1,3]]"));
    CHECK(j.at("rhs") == 0.0);
    CHECK(j.at("t").is_null());

    const auto s = sine_ratio_record(89, 8);
    CHECK(s.verified);
    CHECK(s.rhs == -2.0);
    CHECK(s.lhs_terms.size() == 11);
    CHECK(s.lhs_terms[0] == std::vector<Int>{32, 2});
    const auto cr = cosine_ratio_record(5, 1);  // ord_5(2) = 4 is even
    CHECK(cr.verified);
    CHECK(cr.rhs == 0.0);
}
