#ifndef BEATTY_MODARITH_HPP
#define BEATTY_MODARITH_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace beatty {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

// Overflow-checked int64 arithmetic. Throws std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Non-negative residue of a modulo m (m > 0).
inline Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);
Int gcd(Int a, Int b);

struct ExtGcd {
    Int g;
    Int x;
    Int y;
};

/// g = gcd(a, b) > 0 with a*x + b*y = g. Throws std::domain_error for (0, 0).
ExtGcd ext_gcd(Int a, Int b);

/// Inverse of a modulo m in [0, m); m = 1 gives 0. Throws std::domain_error
/// when gcd(a, m) != 1.
Int inverse_mod(Int a, Int m);

/// pbar with p*pbar = g (mod q), g = gcd(p, q), smallest positive choice.
/// Any other valid pbar differs from it by a multiple of q/g.
struct GeneralizedInverse {
    Int p;
    Int q;
    Int g;
    Int pbar;
};

GeneralizedInverse generalized_inverse(Int p, Int q);

/// Multiplicative order of 2 modulo odd q >= 3.
Int order_of_two(Int q);

BigInt pow2(unsigned e);
int popcount(const BigInt& n);

/// Nearest-integer continued fraction [a_0; a_1, ..., a_n] of p/q.
struct NicfExpansion {
    Int numerator = 0;
    Int denominator = 1;
    std::vector<Int> terms;

    Rational value() const;
    /// |a_i| >= 2 for i > 0; a_i = +-2 (0 < i < n) forces a_i*a_{i+1} > 0;
    /// a_n != -2.
    bool satisfies_constraints() const;
};

/// Partial quotients are taken as the nearest integer with halves rounded
/// down, which is the only rounding that never ends on -2.
NicfExpansion nicf(Int p, Int q);

/// prod_{i=1}^n |a_i| (1 for an integer).
BigInt nicf_product(const NicfExpansion& e);

}  // namespace beatty

#endif  // BEATTY_MODARITH_HPP
