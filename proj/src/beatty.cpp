#include "beatty/beatty.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace beatty {

namespace {

Int normalized_p(Int p) {
    if (p == 0) throw std::domain_error("BeattyParams: p must be nonzero");
    return p < 0 ? -p : p;
}

void require_coprime_below(Int p, Int q, const char* who) {
    if (q < 2 || p < 1 || p >= q || gcd(p, q) != 1)
        throw std::domain_error(std::string(who) + ": need gcd(p,q) = 1 and 1 <= p < q");
}

}  // namespace

BeattyParams::BeattyParams(Int p, Int q, Int r)
    : p_(normalized_p(p)), q_(q), r_(q >= 2 ? mod(r, q) : 0), inv_{} {
    if (q < 2) throw std::domain_error("BeattyParams: q must be >= 2");
    inv_ = generalized_inverse(p_, q_);
}

Int BeattyParams::element(Int n) const { return floor_div(checked_mul(n, q_), p_) + r_; }

std::vector<Int> indicator_profile(const BeattyParams& b) {
    std::vector<Int> prof(static_cast<std::size_t>(b.q()), 0);
    for (Int n = 0; n < b.p(); ++n) ++prof[mod(b.element(n), b.q())];
    return prof;
}

Int indicator(const BeattyParams& b, Int x) {
    const Int target = mod(x, b.q());
    Int count = 0;
    for (Int n = 0; n < b.p(); ++n)
        if (mod(b.element(n), b.q()) == target) ++count;
    return count;
}

bool membership_by_duality(Int p, Int q, Int x) {
    require_coprime_below(p, q, "membership_by_duality");
    const Int frac_num = mod(checked_mul(mod(x, q), p), q);  // frac(xp/q) = frac_num / q
    return frac_num == 0 || frac_num > q - p;
}

namespace {

// ceil(v * p / q) for rational v.
Int ceil_scaled(const Rational& v, Int p, Int q) {
    return ceil_div(checked_mul(v.numerator(), p), checked_mul(v.denominator(), q));
}

}  // namespace

Int interval_count(Int p, Int q, const Rational& x, const Rational& y) {
    require_coprime_below(p, q, "interval_count");
    if (!(x < y)) throw std::domain_error("interval_count: need x < y");
    // members are integers, so [x, y) and [ceil x, ceil y) hold the same ones
    const Rational cx(ceil_div(x.numerator(), x.denominator())), cy(ceil_div(y.numerator(), y.denominator()));
    return ceil_scaled(cy, p, q) - ceil_scaled(cx, p, q);
}

CycloElt dft_direct(const BeattyParams& b, Int j) {
    const Int q = b.q();
    const Int jr = mod(j, q);
    std::vector<Int> counts(static_cast<std::size_t>(q), 0);
    for (Int n = 0; n < b.p(); ++n) ++counts[mod(-jr * mod(b.element(n), q), q)];
    return CycloElt::from_exponent_counts(q, std::move(counts));
}

ClosedForm ft_closed_form_with(const BeattyParams& b, Int j, Int pbar) {
    const Int q = b.q();
    const Int jr = mod(j, q);
    if (jr == 0) throw std::domain_error("ft_closed_form: j = 0 (mod q); use dft_direct");
    if (mod(checked_mul(b.p(), pbar), q) != b.g() % q)
        throw std::domain_error("ft_closed_form: pbar does not satisfy p*pbar = g (mod q)");
    if (jr % b.g() != 0) return {CycloElt(q), CycloElt::from_integer(q, 1)};

    const CycloElt one = CycloElt::from_integer(q, 1);
    CycloElt num = (one - root_power(q, jr)) * root_power(q, -jr * b.r()) * b.g();
    CycloElt den = one - root_power(q, checked_mul(jr, mod(pbar, q)));
    return {std::move(num), std::move(den)};
}

ClosedForm ft_closed_form(const BeattyParams& b, Int j) { return ft_closed_form_with(b, j, b.pbar()); }

bool closed_form_matches(const BeattyParams& b, Int j) {
    const auto [num, den] = ft_closed_form(b, j);
    return (dft_direct(b, j) * den - num).is_zero();
}

double ft_magnitude(const BeattyParams& b, Int j) {
    const Int q = b.q();
    const Int jr = mod(j, q);
    if (jr == 0) throw std::domain_error("ft_magnitude: j = 0 (mod q)");
    if (jr % b.g() != 0) return 0.0;
    const double pi = std::numbers::pi;
    const double qd = static_cast<double>(q);
    const double top = std::sin(pi * static_cast<double>(jr) / qd);
    const double bottom = std::sin(pi * static_cast<double>(mod(jr * b.pbar(), 2 * q)) / qd);
    return static_cast<double>(b.g()) * std::abs(top / bottom);
}

bool variation_identity_check(Int p, Int q) {
    require_coprime_below(p, q, "variation_identity_check");
    const Int qbar = p == 1 ? 1 : inverse_mod(q, p);
    const Int pbar = inverse_mod(p, q);
    // (q qbar - 1)/p is floor(q qbar / p) for p > 1 and stays right at p = 1
    return mod((checked_mul(q, qbar) - 1) / p, q) == mod(-pbar, q);
}

}  // namespace beatty
