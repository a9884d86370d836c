#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "beatty/cyclotomic.hpp"

using namespace beatty;

namespace {

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
    return c;
}

std::complex<double> direct_root(Int q, Int e) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(mod(e, q)) / static_cast<double>(q);
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_poly(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_poly(7) == std::vector<Int>(7, 1));
    CHECK(cyclotomic_degree(15) == 8);
    CHECK_THROWS_AS(cyclotomic_poly(0), std::domain_error);
}

TEST_CASE("product of Phi_d over d | q is x^q - 1") {
    for (Int q = 1; q <= 500; ++q) {
        std::vector<Int> prod{1};
        for (Int d = 1; d <= q; ++d)
            if (q % d == 0) prod = poly_mul(prod, cyclotomic_poly(d));
        std::vector<Int> expect(static_cast<std::size_t>(q + 1), 0);
        expect[0] = -1;
        expect[q] = 1;
        REQUIRE(prod == expect);
        const auto& phi = cyclotomic_poly(q);
        CHECK(phi.back() == 1);
    }
}

TEST_CASE("cyclotomic cache is safe under concurrent readers") {
    std::vector<std::vector<Int>> results(8);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 8; ++t)
            pool.emplace_back([&, t] { results[t] = cyclotomic_poly(2310 + 2 * t); });
    }
    for (int t = 0; t < 8; ++t) CHECK(results[t] == cyclotomic_poly(2310 + 2 * t));
}

TEST_CASE("root_power") {
    for (Int q = 1; q < 12; ++q) CHECK(root_power(q, 0) == CycloElt::from_integer(q, 1));
    CHECK(root_power(7, 7) == CycloElt::from_integer(7, 1));
    CHECK(root_power(6, 3) == CycloElt::from_integer(6, -1));
    CHECK(root_power(5, -1) == root_power(5, 4));
}

TEST_CASE("ring operations") {
    const Int q = 12;
    const CycloElt a = root_power(q, 1) * 3 + root_power(q, 5) - CycloElt::from_integer(q, 2);
    CHECK((a + neg(a)).is_zero());
    CHECK(is_zero(add(a, neg(a))));
    for (Int x = 0; x < q; ++x)
        for (Int y = 0; y < q; ++y) CHECK(mul(root_power(q, x), root_power(q, y)) == root_power(q, x + y));
    CHECK(scale(a, 0).is_zero());
    CHECK(a * 2 == a + a);
    CHECK(2 * a == a * 2);
    CycloElt b = a;
    b *= a;
    CHECK(b == a * a);
    CHECK_THROWS_AS(root_power(5, 1) + root_power(7, 1), std::domain_error);
}

TEST_CASE("full geometric sum vanishes and powers do not") {
    for (Int q = 2; q <= 120; ++q) {
        CycloElt s(q);
        for (Int e = 0; e < q; ++e) {
            CHECK_FALSE(root_power(q, e).is_zero());
            s += root_power(q, e);
        }
        CHECK(s.is_zero());
    }
}

TEST_CASE("from_exponent_counts") {
    CHECK(CycloElt::from_exponent_counts(7, {1, 1, 1, 1, 1, 1, 1}).is_zero());
    CHECK(CycloElt::from_exponent_counts(7, {0, 2}) == root_power(7, 1) * 2);
    CHECK_THROWS_AS(CycloElt::from_exponent_counts(3, {1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("embed_complex") {
    CHECK(std::abs(CycloElt(9).embed_complex()) == 0.0);
    CHECK(std::abs(root_power(4, 1).embed_complex() - std::complex<double>(0, 1)) < 1e-12);
    const double c = 2 * std::cos(2 * std::numbers::pi / 7);
    CHECK(std::abs((root_power(7, 1) + root_power(7, 6)).embed_complex() - c) < 1e-9);
    for (Int q = 1; q <= 200; ++q)
        for (Int e = 0; e < q; e += 1 + q / 17) CHECK(std::abs(root_power(q, e).embed_complex() - direct_root(q, e)) < 1e-9);
}

TEST_CASE("conjugate and lift_to") {
    const Int q = 15;
    for (Int e = 0; e < q; ++e) {
        CHECK(root_power(q, e).conjugate() == root_power(q, -e));
        CHECK(root_power(q, e).lift_to(45) == root_power(45, 3 * e));
    }
    const CycloElt x = root_power(q, 2) * 5 - root_power(q, 7);
    CHECK(std::abs(x.conjugate().embed_complex() - std::conj(x.embed_complex())) < 1e-9);
    CHECK(std::abs(x.lift_to(60).embed_complex() - x.embed_complex()) < 1e-9);
    CHECK_THROWS_AS(x.lift_to(20), std::domain_error);
}

TEST_CASE("reduce_mod_cyclotomic works for big integers") {
    std::vector<BigInt> c(7, BigInt(1) << 200);
    reduce_mod_cyclotomic(c, 7);
    CHECK(c.size() == 6);
    for (const auto& v : c) CHECK(v == 0);
}

TEST_CASE("checked overflow in CycloElt arithmetic") {
    CycloElt big = CycloElt::from_integer(5, std::numeric_limits<Int>::max() / 2);
    CHECK_THROWS_AS(big * 4, std::overflow_error);
}
