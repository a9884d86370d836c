#ifndef BEATTY_CYCLOTOMIC_HPP
#define BEATTY_CYCLOTOMIC_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "beatty/modarith.hpp"

namespace beatty {

/// Coefficients of the q-th cyclotomic polynomial, constant term first.
/// Memoized; the returned reference stays valid for the life of the program
/// and the cache is safe to read from several threads.
const std::vector<Int>& cyclotomic_poly(Int q);

/// phi(q), the degree of the q-th cyclotomic polynomial.
std::size_t cyclotomic_degree(Int q);

/// Reduces a polynomial (constant term first, any length) modulo Phi_q in
/// place. On return c.size() == phi(q).
template <class T>
void reduce_mod_cyclotomic(std::vector<T>& c, Int q) {
    const auto& phi = cyclotomic_poly(q);
    const std::size_t deg = phi.size() - 1;
    std::vector<std::pair<std::size_t, Int>> tail;  // nonzero low terms of Phi_q
    for (std::size_t t = 0; t < deg; ++t)
        if (phi[t] != 0) tail.emplace_back(t, phi[t]);
    for (std::size_t i = c.size(); i-- > deg;) {
        if (c[i] == 0) continue;
        const T lead = c[i];
        for (const auto& [t, coef] : tail) c[i - deg + t] -= lead * coef;
        c[i] = 0;
    }
    c.resize(deg);
}

template <>
void reduce_mod_cyclotomic<Int>(std::vector<Int>& c, Int q);

/// An element of Z[w], w = exp(2 pi i / q), kept as its canonical remainder
/// modulo Phi_q. Two values are equal iff moduli and coefficient vectors match.
class CycloElt {
public:
    explicit CycloElt(Int q);

    static CycloElt from_integer(Int q, Int v);
    /// sum_e counts[e] w^e, exponents indexed modulo q (counts.size() <= q).
    static CycloElt from_exponent_counts(Int q, std::vector<Int> counts);

    Int modulus() const { return q_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;
    std::complex<double> embed_complex() const;

    /// Complex conjugate, w -> w^{-1}.
    CycloElt conjugate() const;
    /// Image under Z[w_q] -> Z[w_n], w_q -> w_n^{n/q}; n must be a multiple of q.
    CycloElt lift_to(Int n) const;

    CycloElt operator-() const;
    CycloElt& operator+=(const CycloElt& o);
    CycloElt& operator-=(const CycloElt& o);
    CycloElt& operator*=(const CycloElt& o);
    CycloElt& operator*=(Int k);

    friend CycloElt operator+(CycloElt a, const CycloElt& b) { return a += b; }
    friend CycloElt operator-(CycloElt a, const CycloElt& b) { return a -= b; }
    friend CycloElt operator*(CycloElt a, const CycloElt& b) { return a *= b; }
    friend CycloElt operator*(CycloElt a, Int k) { return a *= k; }
    friend CycloElt operator*(Int k, CycloElt a) { return a *= k; }
    friend bool operator==(const CycloElt& a, const CycloElt& b) = default;

private:
    void require_same_modulus(const CycloElt& o) const;

    Int q_;
    std::vector<Int> c_;
};

/// w^e for w = exp(2 pi i / q).
CycloElt root_power(Int q, Int e);

inline CycloElt add(const CycloElt& a, const CycloElt& b) { return a + b; }
inline CycloElt neg(const CycloElt& a) { return -a; }
inline CycloElt mul(const CycloElt& a, const CycloElt& b) { return a * b; }
inline CycloElt scale(const CycloElt& a, Int k) { return a * k; }
inline bool is_zero(const CycloElt& a) { return a.is_zero(); }
inline std::complex<double> embed_complex(const CycloElt& a) { return a.embed_complex(); }

}  // namespace beatty

#endif  // BEATTY_CYCLOTOMIC_HPP
