#include "beatty/covering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace beatty {

CoveringInstance::CoveringInstance(Int q, const std::vector<std::pair<Int, Int>>& members) : q_(q) {
    if (q < 2) throw std::domain_error("CoveringInstance: q must be >= 2");
    if (members.empty()) throw std::domain_error("CoveringInstance: need at least one member");
    members_.reserve(members.size());
    for (const auto& [p, r] : members) members_.emplace_back(p, q, r);
}

Int CoveringInstance::density_sum() const {
    Int s = 0;
    for (const auto& b : members_) s = checked_add(s, b.p());
    return s;
}

std::vector<std::pair<Int, Int>> CoveringInstance::canonical() const {
    std::vector<std::pair<Int, Int>> out;
    out.reserve(members_.size());
    for (const auto& b : members_) out.emplace_back(b.p(), b.r());
    std::sort(out.begin(), out.end());
    return out;
}

void to_json(nlohmann::json& j, const CoveringInstance& inst) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& b : inst.members()) members.push_back({b.p(), b.r()});
    j = nlohmann::json{{"q", inst.q()}, {"members", std::move(members)}};
}

CoveringInstance instance_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("members"))
        throw std::invalid_argument("instance JSON needs \"q\" and \"members\"");
    std::vector<std::pair<Int, Int>> members;
    for (const auto& m : j.at("members")) {
        if (!m.is_array() || m.size() != 2) throw std::invalid_argument("each member must be [p, r]");
        members.emplace_back(m.at(0).get<Int>(), m.at(1).get<Int>());
    }
    return CoveringInstance(j.at("q").get<Int>(), members);
}

void to_json(nlohmann::json& j, const CoverVerdict& v) {
    j = nlohmann::json{{"is_perfect", v.is_perfect},
                       {"multiplicity", v.multiplicity ? nlohmann::json(*v.multiplicity) : nlohmann::json()},
                       {"profile", v.profile},
                       {"criterion_failures", v.criterion_failures}};
}

std::vector<Int> coverage_profile(const CoveringInstance& inst) {
    std::vector<Int> prof(static_cast<std::size_t>(inst.q()), 0);
    for (const auto& b : inst.members()) {
        const auto one = indicator_profile(b);
        for (std::size_t x = 0; x < prof.size(); ++x) prof[x] += one[x];
    }
    return prof;
}

CoverVerdict is_perfect_cover(const CoveringInstance& inst) {
    CoverVerdict v;
    v.profile = coverage_profile(inst);
    const bool constant = std::all_of(v.profile.begin(), v.profile.end(),
                                      [&](Int c) { return c == v.profile.front(); });
    v.is_perfect = constant;
    if (constant) {
        v.multiplicity = v.profile.front();
        return v;
    }
    const Int q = inst.q();
    for (Int j = 1; j < q && v.criterion_failures.size() < CoverVerdict::kMaxFailures; ++j) {
        std::vector<Int> counts(static_cast<std::size_t>(q), 0);
        for (Int x = 0; x < q; ++x) counts[mod(-j * x, q)] += v.profile[x];
        if (!CycloElt::from_exponent_counts(q, std::move(counts)).is_zero()) v.criterion_failures.push_back(j);
    }
    return v;
}

namespace {

// q times the j-th criterion sum, as a length-q exponent-count vector.
std::vector<Int> criterion_counts(const CoveringInstance& inst, Int j) {
    const Int q = inst.q();
    const Int jr = mod(j, q);
    // |entry| <= sum_k g_k q d_k / 2 <= (sum_k p_k) q^2
    const double qd = static_cast<double>(q);
    if (static_cast<double>(inst.density_sum()) * qd * qd > 9.0e18)
        throw std::overflow_error("covering criterion: instance too large for int64 accumulation");
    std::vector<Int> acc(static_cast<std::size_t>(q), 0);
    for (const auto& b : inst.members()) {
        if (jr % b.g() != 0) continue;
        const Int a = mod(jr * b.pbar(), q);
        const Int d = q / gcd(a, q);
        const Int weight = checked_mul(b.g(), q / d);
        Int idx = mod(-jr * b.r(), q);
        for (Int s = 1; s < d; ++s) {
            idx += a;
            if (idx >= q) idx -= q;
            acc[idx] -= weight * s;
        }
    }
    return acc;
}

}  // namespace

bool criterion_holds_at(const CoveringInstance& inst, Int j) {
    if (mod(j, inst.q()) == 0) throw std::domain_error("criterion_holds_at: j = 0 (mod q)");
    return CycloElt::from_exponent_counts(inst.q(), criterion_counts(inst, j)).is_zero();
}

CoverVerdict covering_criterion(const CoveringInstance& inst) {
    const Int q = inst.q();
    CoverVerdict v;
    v.profile = coverage_profile(inst);
    const Int total = inst.density_sum();
    bool ok = total % q == 0;
    for (Int j = 1; j < q; ++j) {
        if (criterion_holds_at(inst, j)) continue;
        ok = false;
        if (v.criterion_failures.size() < CoverVerdict::kMaxFailures) v.criterion_failures.push_back(j);
        else break;
    }
    v.is_perfect = ok;
    if (ok) v.multiplicity = total / q;
    return v;
}

bool fraenkel_two_set(Int q, Int p1, Int r1, Int p2, Int r2) {
    if (q < 2 || p1 < 1 || p1 >= q || p2 < 1 || p2 >= q)
        throw std::domain_error("fraenkel_two_set: need 1 <= p_k < q");
    if (p1 + p2 != q) return false;
    const Int lhs = mod(checked_add(checked_mul(p1, mod(r1, q)), checked_mul(p2, mod(r2, q))), q);
    return lhs == mod(-gcd(p1, q), q);
}

namespace {

void require_cfc_modulus(Int q, Int delta, const char* who) {
    if (q < 3 || q % 2 == 0) throw std::domain_error(std::string(who) + ": q must be odd and >= 3");
    if (gcd(delta, q) != 1) throw std::domain_error(std::string(who) + ": delta must be coprime to q");
}

}  // namespace

CoveringInstance construct_cfc(Int q, Int delta, Int gamma) {
    require_cfc_modulus(q, delta, "construct_cfc");
    const Int m = order_of_two(q);
    const Int d = mod(delta, q);
    const Int dbar = inverse_mod(d, q);
    std::vector<Int> pow(static_cast<std::size_t>(m), 1);  // pow[i] = 2^i mod q
    for (Int i = 1; i < m; ++i) pow[i] = pow[i - 1] * 2 % q;
    std::vector<std::pair<Int, Int>> members;
    for (Int k = 1; k <= m; ++k) {
        const Int p = d * pow[m - k] % q;
        const Int r = mod(gamma - dbar * pow[k - 1], q);
        members.emplace_back(p, r);
    }
    return CoveringInstance(q, members);
}

std::optional<std::pair<Int, Int>> find_cfc_parameters(const CoveringInstance& inst) {
    const Int q = inst.q();
    if (q < 3 || q % 2 == 0 || static_cast<Int>(inst.size()) != order_of_two(q)) return std::nullopt;
    const auto target = inst.canonical();
    for (Int delta = 1; delta < q; ++delta) {
        if (gcd(delta, q) != 1) continue;
        for (Int gamma = 0; gamma < q; ++gamma)
            if (construct_cfc(q, delta, gamma).canonical() == target) return std::pair{delta, gamma};
    }
    return std::nullopt;
}

Int predicted_multiplicity(Int q, Int delta) {
    require_cfc_modulus(q, delta, "predicted_multiplicity");
    const Int m = order_of_two(q);
    const BigInt numer = BigInt(mod(delta, q)) * (pow2(static_cast<unsigned>(m)) - 1);
    if (numer % q != 0) throw std::logic_error("predicted_multiplicity: q does not divide 2^m - 1");
    return popcount(numer / q);
}

bool is_mersenne(const BigInt& q) {
    if (q < 1) return false;
    const BigInt next = q + 1;
    return (next & (next - 1)) == 0;
}

std::vector<BigInt> two_cover_moduli(const BigInt& limit) {
    if (limit < 3) throw std::domain_error("two_cover_moduli: limit must be >= 3");
    std::set<BigInt> found;
    // ord_q(2) >= 3 fails only for q dividing 2^2 - 1
    auto admit = [&](const BigInt& q) {
        if (q <= limit && q != 1 && q != 3) found.insert(q);
    };
    for (unsigned m = 3; pow2(m) - 1 <= limit; ++m) admit(pow2(m) - 1);
    // (2^{2uv}-1)/(2^u+1) is increasing in v and equals 2^u - 1 at v = 1.
    for (unsigned u = 1; pow2(u) - 1 <= limit; ++u) {
        const BigInt denom = pow2(u) + 1;
        for (unsigned v = 1;; ++v) {
            const BigInt q = (pow2(2 * u * v) - 1) / denom;
            if (q > limit) break;
            admit(q);
        }
    }
    return {found.begin(), found.end()};
}

bool has_zero_sum_proper_subset(Int q, const std::vector<Int>& ps) {
    if (ps.size() < 2) return false;
    // ways[r] = number of subsets (empty included) with sum r, capped at 3
    std::vector<int> ways(static_cast<std::size_t>(q), 0);
    ways[0] = 1;
    Int full = 0;
    for (Int p : ps) {
        const Int a = mod(p, q);
        full = (full + a) % q;
        std::vector<int> next = ways;
        for (Int r = 0; r < q; ++r)
            if (ways[r] != 0) next[(r + a) % q] = std::min(3, next[(r + a) % q] + ways[r]);
        ways = std::move(next);
    }
    return ways[0] >= 2 + (full == 0 ? 1 : 0);
}

std::optional<bool> few_gi_property(const CoveringInstance& inst, Int j) {
    const Int q = inst.q();
    std::vector<Int> ps;
    Int all_g = 0;
    for (const auto& b : inst.members()) {
        if (b.p() >= q) return std::nullopt;
        ps.push_back(b.p());
        all_g = gcd(all_g, b.g());
    }
    std::vector<Int> sorted = ps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    if (all_g != 1) return std::nullopt;
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b)
            if (ps[a] + ps[b] == q) return std::nullopt;
    if (!is_perfect_cover(inst).is_perfect) return std::nullopt;

    const Int jr = mod(j, q);
    if (jr == 0) return true;
    int divisors = 0;
    for (const auto& b : inst.members())
        if (jr % b.g() == 0) ++divisors;
    return divisors == 0 || divisors >= 3;
}

}  // namespace beatty
