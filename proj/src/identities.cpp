#include "beatty/identities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace beatty {

namespace {

void require_odd_modulus(Int q, const char* who) {
    if (q < 3 || q % 2 == 0) throw std::domain_error(std::string(who) + ": q must be odd and >= 3");
}

void require_t_range(Int q, Int t, const char* who) {
    require_odd_modulus(q, who);
    const Int m = order_of_two(q);
    if (t < 1 || t > m - 1) throw std::domain_error(std::string(who) + ": need 1 <= t <= ord_q(2) - 1");
}

// sin(a pi / q) with a reduced mod 2q first, so large a lose no precision.
double sin_pi_over(Int a, Int q) {
    return std::sin(std::numbers::pi * static_cast<double>(mod(a, 2 * q)) / static_cast<double>(q));
}

double cos_pi_over(Int a, Int q) {
    return std::cos(std::numbers::pi * static_cast<double>(mod(a, 2 * q)) / static_cast<double>(q));
}

// 2^k mod n for k = 0..count-1.
std::vector<Int> powers_of_two(Int count, Int n) {
    std::vector<Int> out(static_cast<std::size_t>(count));
    Int v = 1 % n;
    for (auto& e : out) {
        e = v;
        v = v * 2 % n;
    }
    return out;
}

std::optional<Int> as_integer(const CycloElt& e) {
    const auto& c = e.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c.empty() ? 0 : c[0];
}

}  // namespace

CyclotomicCoset coset(Int q, Int x) {
    require_odd_modulus(q, "coset");
    CyclotomicCoset c{q, x, {}};
    const Int m = order_of_two(q);
    Int v = mod(x, q);
    for (Int j = 0; j < m; ++j) {
        c.elements.push_back(v);
        v = v * 2 % q;
    }
    return c;
}

std::vector<std::vector<Int>> coset_partition(Int q) {
    require_odd_modulus(q, "coset_partition");
    std::vector<bool> seen(static_cast<std::size_t>(q), false);
    std::vector<std::vector<Int>> parts;
    for (Int x = 0; x < q; ++x) {
        if (seen[x]) continue;
        const auto c = coset(q, x);
        std::set<Int> distinct(c.elements.begin(), c.elements.end());
        for (Int e : distinct) seen[e] = true;
        parts.emplace_back(distinct.begin(), distinct.end());
    }
    return parts;
}

CscCheck csc_identity_check(Int q) {
    require_odd_modulus(q, "csc_identity_check");
    const Int m = order_of_two(q);
    const auto pw = powers_of_two(m + 1, q);
    const std::size_t qs = static_cast<std::size_t>(q);

    // Suffix products P_k = prod_{s=k}^{m-1} (1 + x^{2^s}) mod x^q - 1, built
    // from P_m = 1 downwards; their coefficients reach 2^{m-k}.
    std::vector<BigInt> prod(qs, 0), total(qs, 0);
    prod[0] = 1;
    for (Int k = m; k >= 1; --k) {
        const Int shift = pw[k - 1];
        for (std::size_t i = 0; i < qs; ++i) total[(i + shift) % qs] += prod[i];
        if (k > 1) {
            std::vector<BigInt> next = prod;
            for (std::size_t i = 0; i < qs; ++i) next[(i + shift) % qs] += prod[i];
            prod = std::move(next);
        }
    }
    reduce_mod_cyclotomic(total, q);

    CscCheck out{q, m, std::all_of(total.begin(), total.end(), [](const BigInt& c) { return c == 0; }), 0.0};
    const auto angles = powers_of_two(m + 1, 2 * q);
    for (Int k = 1; k <= m; ++k) out.residual += 1.0 / sin_pi_over(angles[k], q);
    return out;
}

std::vector<CscTerm> csc_identity_terms(Int q) {
    require_odd_modulus(q, "csc_identity_terms");
    const Int m = order_of_two(q);
    const auto angles = powers_of_two(m + 1, 2 * q);
    std::map<Int, Int> coef;
    for (Int k = 1; k <= m; ++k) {
        Int a = angles[k];
        Int sign = 1;
        if (a > q) {  // sin(x + pi) = -sin(x)
            a -= q;
            sign = -1;
        }
        coef[std::min(a, q - a)] += sign;  // sin(pi - x) = sin(x)
    }
    std::vector<CscTerm> terms;
    for (const auto& [a, c] : coef)
        if (c != 0) terms.push_back({c, a});
    if (!terms.empty() && terms.front().coefficient < 0)
        for (auto& t : terms) t.coefficient = -t.coefficient;
    return terms;
}

SSum s_sum(Int q, Int t) {
    require_odd_modulus(q, "s_sum");
    if (t < 0) throw std::domain_error("s_sum: t must be >= 0");
    std::vector<Int> counts(static_cast<std::size_t>(q), 0);
    for (Int u = 1; u <= t; ++u)
        for (Int a : coset(q, 2 * u - 1).elements) ++counts[a];
    SSum s{CycloElt::from_exponent_counts(q, std::move(counts)), {}};
    s.value = s.exact.embed_complex();
    return s;
}

std::optional<Int> s_sum_cover_multiplicity(Int q, Int t) {
    require_odd_modulus(q, "s_sum_cover_multiplicity");
    if (t < 1) return std::nullopt;
    std::vector<Int> counts(static_cast<std::size_t>(q), 0);
    for (Int u = 1; u <= t; ++u)
        for (Int a : coset(q, 2 * u - 1).elements) ++counts[a];
    if (counts[0] != 0) return std::nullopt;
    if (!std::all_of(counts.begin() + 1, counts.end(), [&](Int c) { return c == counts[1]; })) return std::nullopt;
    return counts[1];
}

double sine_ratio_sum(Int q, Int t) {
    require_t_range(q, t, "sine_ratio_sum");
    const Int m = order_of_two(q);
    double s = 0.0;
    for (Int p : powers_of_two(m, 2 * q)) s += sin_pi_over(4 * t * p, q) / sin_pi_over(2 * p, q);
    return s;
}

double cosine_ratio_sum(Int q, Int t) {
    require_t_range(q, t, "cosine_ratio_sum");
    const Int m = order_of_two(q);
    double s = 0.0;
    for (Int p : powers_of_two(m, 2 * q)) s += cos_pi_over(4 * t * p, q) / sin_pi_over(2 * p, q);
    return s;
}

void to_json(nlohmann::json& j, const IdentityRecord& r) {
    j = nlohmann::json{{"q", r.q},
                       {"t", r.t ? nlohmann::json(*r.t) : nlohmann::json()},
                       {"kind", r.kind},
                       {"lhs_terms", r.lhs_terms},
                       {"rhs", r.rhs},
                       {"verified", r.verified},
                       {"latex", r.latex}};
}

IdentityRecord csc_identity_record(Int q) {
    IdentityRecord r;
    r.q = q;
    r.kind = "csc";
    const auto check = csc_identity_check(q);
    r.verified = check.exact && std::abs(check.residual) < 1e-9;
    std::ostringstream tex;
    bool first = true;
    for (const auto& term : csc_identity_terms(q)) {
        r.lhs_terms.push_back({term.coefficient, term.a});
        const Int mag = term.coefficient < 0 ? -term.coefficient : term.coefficient;
        if (!first || term.coefficient < 0) tex << (term.coefficient < 0 ? " - " : " + ");
        if (mag != 1) tex << mag;
        tex << "\\frac{1}{\\sin(" << (term.a == 1 ? "" : std::to_string(term.a)) << "\\pi/" << q << ")}";
        first = false;
    }
    if (first) tex << "0";
    tex << " = 0";
    r.latex = tex.str();
    return r;
}

namespace {

IdentityRecord ratio_record(Int q, Int t, bool sine) {
    require_t_range(q, t, sine ? "sine_ratio_record" : "cosine_ratio_record");
    IdentityRecord r;
    r.q = q;
    r.t = t;
    r.kind = sine ? "sine_ratio" : "cosine_ratio";
    const Int m = order_of_two(q);
    for (Int p : powers_of_two(m, 2 * q)) r.lhs_terms.push_back({mod(4 * t * p, 2 * q), mod(2 * p, 2 * q)});

    // 2 Re S = S + conj(S); Im S vanishes exactly when S = conj(S)
    const SSum s = s_sum(q, t);
    if (sine) {
        const auto exact = as_integer(s.exact + s.exact.conjugate());
        r.rhs = exact ? static_cast<double>(*exact) : 2.0 * s.value.real();
    } else {
        r.rhs = s.exact == s.exact.conjugate() ? 0.0 : -2.0 * s.value.imag();
    }
    const double lhs = sine ? sine_ratio_sum(q, t) : cosine_ratio_sum(q, t);
    r.verified = std::abs(lhs - r.rhs) < 1e-9;

    std::ostringstream tex;
    tex << "\\sum_{k=0}^{" << m - 1 << "} \\frac{\\" << (sine ? "sin" : "cos") << "(" << 4 * t
        << " \\pi \\cdot 2^k/" << q << ")}{\\sin(2 \\pi \\cdot 2^k/" << q << ")} = ";
    std::ostringstream rhs;
    rhs.precision(12);
    rhs << r.rhs;
    tex << rhs.str();
    r.latex = tex.str();
    return r;
}

}  // namespace

IdentityRecord sine_ratio_record(Int q, Int t) { return ratio_record(q, t, true); }
IdentityRecord cosine_ratio_record(Int q, Int t) { return ratio_record(q, t, false); }

}  // namespace beatty
