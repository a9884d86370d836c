#include "beatty/modarith.hpp"

#include <stdexcept>
#include <string>

namespace beatty {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
    return r;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

ExtGcd ext_gcd(Int a, Int b) {
    if (a == 0 && b == 0) throw std::domain_error("ext_gcd: both arguments are zero");
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int quot = old_r / r;
        Int t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_x - quot * x;
        old_x = x;
        x = t;
        t = old_y - quot * y;
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

Int inverse_mod(Int a, Int m) {
    if (m < 1) throw std::domain_error("inverse_mod: modulus must be positive");
    if (m == 1) return 0;
    auto [g, x, y] = ext_gcd(mod(a, m), m);
    (void)y;
    if (g != 1) {
        throw std::domain_error("inverse_mod: " + std::to_string(a) + " is not invertible mod " +
                                std::to_string(m));
    }
    return mod(x, m);
}

GeneralizedInverse generalized_inverse(Int p, Int q) {
    if (p < 1 || q < 2) throw std::domain_error("generalized_inverse: need p >= 1 and q >= 2");
    Int g = gcd(p, q);
    Int b = q / g;
    Int pbar = b == 1 ? 1 : inverse_mod(p / g, b);
    return {p, q, g, pbar};
}

Int order_of_two(Int q) {
    if (q < 3 || q % 2 == 0) throw std::domain_error("order_of_two: q must be odd and >= 3");
    Int m = 1;
    Int x = 2 % q;
    while (x != 1) {
        x = (x * 2) % q;
        ++m;
    }
    return m;
}

BigInt pow2(unsigned e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

int popcount(const BigInt& n) {
    if (n < 0) throw std::domain_error("popcount: negative argument");
    int c = 0;
    BigInt x = n;
    while (x != 0) {
        if (boost::multiprecision::bit_test(x, 0)) ++c;
        x >>= 1;
    }
    return c;
}

Rational NicfExpansion::value() const {
    if (terms.empty()) throw std::logic_error("empty NICF expansion");
    Rational v(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) v = Rational(*it) + 1 / v;
    return v;
}

bool NicfExpansion::satisfies_constraints() const {
    const std::size_t n = terms.size();
    if (n == 0) return false;
    for (std::size_t i = 1; i < n; ++i) {
        if (terms[i] > -2 && terms[i] < 2) return false;
        if (i + 1 < n && (terms[i] == 2 || terms[i] == -2) && terms[i] * terms[i + 1] <= 0)
            return false;
    }
    return n == 1 || terms.back() != -2;
}

NicfExpansion nicf(Int p, Int q) {
    if (q < 1) throw std::domain_error("nicf: denominator must be positive");
    if (gcd(p, q) != 1) throw std::domain_error("nicf: p and q must be coprime");

    NicfExpansion e{p, q, {}};
    Int num = p, den = q;
    for (;;) {
        // nearest integer, halves rounded down
        Int a = ceil_div(checked_sub(checked_mul(2, num), den), checked_mul(2, den));
        e.terms.push_back(a);
        Int rem = num - a * den;  // rem/den in (-1/2, 1/2]
        if (rem == 0) break;
        num = rem > 0 ? den : -den;
        den = rem > 0 ? rem : -rem;
    }
    if (!e.satisfies_constraints() || e.value() != Rational(p, q)) {
        throw std::logic_error("nicf: expansion violates NICF constraints");
    }
    return e;
}

BigInt nicf_product(const NicfExpansion& e) {
    BigInt prod = 1;
    for (std::size_t i = 1; i < e.terms.size(); ++i) prod *= (e.terms[i] < 0 ? -e.terms[i] : e.terms[i]);
    return prod;
}

}  // namespace beatty
