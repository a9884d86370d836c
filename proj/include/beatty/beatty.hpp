#ifndef BEATTY_BEATTY_HPP
#define BEATTY_BEATTY_HPP

#include <vector>

#include "beatty/cyclotomic.hpp"
#include "beatty/modarith.hpp"

namespace beatty {

/// The Beatty set {floor(n q / p + r) : n in Z}, viewed as a multiset on Z_q.
/// Construction normalizes p < 0 to -p (the set is unchanged under
/// (p, n) -> (-p, -n)) and reduces r modulo q.
class BeattyParams {
public:
    BeattyParams(Int p, Int q, Int r = 0);

    Int p() const { return p_; }
    Int q() const { return q_; }
    Int r() const { return r_; }
    Int g() const { return inv_.g; }
    Int pbar() const { return inv_.pbar; }

    /// floor(n q / p + r) for any integer n.
    Int element(Int n) const;

    friend bool operator==(const BeattyParams& a, const BeattyParams& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_;
    }

private:
    Int p_;
    Int q_;
    Int r_;
    GeneralizedInverse inv_;
};

/// Multiplicity of x (mod q) in the set; sums to p over one period.
Int indicator(const BeattyParams& b, Int x);

/// All q multiplicities at once.
std::vector<Int> indicator_profile(const BeattyParams& b);

/// x in B^q_p (gcd(p,q) = 1, 1 <= p < q, r = 0) iff frac(xp/q) is 0 or
/// exceeds 1 - p/q.
bool membership_by_duality(Int p, Int q, Int x);

/// |B^q_p intersect [x, y)| for x < y: ceil(yp/q) - ceil(xp/q) after rounding
/// x and y up to integers.
Int interval_count(Int p, Int q, const Rational& x, const Rational& y);

/// sum_{n=0}^{p-1} w^{-j floor(nq/p + r)}, computed term by term.
CycloElt dft_direct(const BeattyParams& b, Int j);

/// The closed-form transform as an undivided fraction numerator/denominator.
struct ClosedForm {
    CycloElt numerator;
    CycloElt denominator;
};

/// For j != 0 (mod q): g (1 - w^j) w^{-jr} / (1 - w^{j pbar}) when g | j,
/// and 0/1 otherwise.
ClosedForm ft_closed_form(const BeattyParams& b, Int j);

/// Same closed form with a caller-chosen pbar (any solution of p*pbar = g mod q).
ClosedForm ft_closed_form_with(const BeattyParams& b, Int j, Int pbar);

/// dft_direct(b, j) * denominator == numerator, decided exactly in Z[w].
bool closed_form_matches(const BeattyParams& b, Int j);

/// g |sin(pi j / q) / sin(pi j pbar / q)| when g | j, else 0.
double ft_magnitude(const BeattyParams& b, Int j);

/// (q qbar - 1)/p = -pbar (mod q), with qbar = q^{-1} mod p (1 when p = 1).
bool variation_identity_check(Int p, Int q);

}  // namespace beatty

#endif  // BEATTY_BEATTY_HPP
