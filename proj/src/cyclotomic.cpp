#include "beatty/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace beatty {

namespace {

std::mutex cache_mutex;
std::map<Int, std::vector<Int>> cache;  // node-based: references stay valid

// Exact division of num by the monic polynomial den (both constant term first).
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<Int> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Int lead = num[i];
        quot[i - dn] = lead;
        if (lead == 0) continue;
        for (std::size_t t = 0; t <= dn; ++t)
            num[i - dn + t] = checked_sub(num[i - dn + t], checked_mul(lead, den[t]));
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

const std::vector<Int>& compute_locked(Int q) {
    if (auto it = cache.find(q); it != cache.end()) return it->second;
    std::vector<Int> poly(static_cast<std::size_t>(q) + 1, 0);
    poly[0] = -1;
    poly[q] = 1;
    for (Int d = 1; d < q; ++d)
        if (q % d == 0) poly = divide_exact(std::move(poly), compute_locked(d));
    return cache.emplace(q, std::move(poly)).first->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(Int q) {
    if (q < 1) throw std::domain_error("cyclotomic_poly: q must be >= 1");
    std::lock_guard lock(cache_mutex);
    return compute_locked(q);
}

std::size_t cyclotomic_degree(Int q) { return cyclotomic_poly(q).size() - 1; }

template <>
void reduce_mod_cyclotomic<Int>(std::vector<Int>& c, Int q) {
    const auto& phi = cyclotomic_poly(q);
    const std::size_t deg = phi.size() - 1;
    std::vector<std::pair<std::size_t, Int>> tail;
    for (std::size_t t = 0; t < deg; ++t)
        if (phi[t] != 0) tail.emplace_back(t, phi[t]);
    for (std::size_t i = c.size(); i-- > deg;) {
        const Int lead = c[i];
        if (lead == 0) continue;
        for (const auto& [t, coef] : tail)
            c[i - deg + t] = checked_sub(c[i - deg + t], checked_mul(lead, coef));
        c[i] = 0;
    }
    c.resize(deg);
}

CycloElt::CycloElt(Int q) : q_(q) {
    if (q < 1) throw std::domain_error("CycloElt: modulus must be >= 1");
    c_.assign(cyclotomic_degree(q), 0);
}

CycloElt CycloElt::from_integer(Int q, Int v) {
    CycloElt e(q);
    e.c_[0] = v;
    return e;
}

CycloElt CycloElt::from_exponent_counts(Int q, std::vector<Int> counts) {
    if (counts.size() > static_cast<std::size_t>(q))
        throw std::invalid_argument("from_exponent_counts: more than q exponents");
    CycloElt e(q);
    reduce_mod_cyclotomic(counts, q);
    e.c_ = std::move(counts);
    return e;
}

CycloElt root_power(Int q, Int e) {
    std::vector<Int> counts(static_cast<std::size_t>(q), 0);
    counts[mod(e, q)] = 1;
    return CycloElt::from_exponent_counts(q, std::move(counts));
}

bool CycloElt::is_zero() const {
    for (Int v : c_)
        if (v != 0) return false;
    return true;
}

std::complex<double> CycloElt::embed_complex() const {
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(q_);
        z += static_cast<double>(c_[i]) * std::polar(1.0, angle);
    }
    return z;
}

CycloElt CycloElt::conjugate() const {
    std::vector<Int> counts(static_cast<std::size_t>(q_), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) counts[mod(-static_cast<Int>(i), q_)] = c_[i];
    return from_exponent_counts(q_, std::move(counts));
}

CycloElt CycloElt::lift_to(Int n) const {
    if (n < 1 || n % q_ != 0)
        throw std::domain_error("lift_to: " + std::to_string(n) + " is not a multiple of " + std::to_string(q_));
    const Int step = n / q_;
    std::vector<Int> counts(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) counts[static_cast<Int>(i) * step] = c_[i];
    return from_exponent_counts(n, std::move(counts));
}

void CycloElt::require_same_modulus(const CycloElt& o) const {
    if (q_ != o.q_) throw std::domain_error("CycloElt: moduli differ");
}

CycloElt CycloElt::operator-() const {
    CycloElt r(*this);
    for (Int& v : r.c_) v = checked_sub(0, v);
    return r;
}

CycloElt& CycloElt::operator+=(const CycloElt& o) {
    require_same_modulus(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

CycloElt& CycloElt::operator-=(const CycloElt& o) {
    require_same_modulus(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
    return *this;
}

CycloElt& CycloElt::operator*=(const CycloElt& o) {
    require_same_modulus(o);
    std::vector<Int> prod(c_.size() * 2 - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            if (o.c_[k] == 0) continue;
            prod[i + k] = checked_add(prod[i + k], checked_mul(c_[i], o.c_[k]));
        }
    }
    reduce_mod_cyclotomic(prod, q_);
    c_ = std::move(prod);
    return *this;
}

CycloElt& CycloElt::operator*=(Int k) {
    for (Int& v : c_) v = checked_mul(v, k);
    return *this;
}

}  // namespace beatty
