#ifndef BEATTY_COVERING_HPP
#define BEATTY_COVERING_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "beatty/beatty.hpp"

namespace beatty {

/// A family of Beatty sets B^q_{p_k, r_k} sharing the modulus q.
class CoveringInstance {
public:
    CoveringInstance(Int q, const std::vector<std::pair<Int, Int>>& members);

    Int q() const { return q_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<BeattyParams>& members() const { return members_; }
    Int density_sum() const;

    /// Members as (p, r) pairs sorted ascending; the order-free identity of
    /// the family.
    std::vector<std::pair<Int, Int>> canonical() const;

    friend bool operator==(const CoveringInstance& a, const CoveringInstance& b) {
        return a.q_ == b.q_ && a.members_ == b.members_;
    }

private:
    Int q_;
    std::vector<BeattyParams> members_;
};

void to_json(nlohmann::json& j, const CoveringInstance& inst);
CoveringInstance instance_from_json(const nlohmann::json& j);

struct CoverVerdict {
    bool is_perfect = false;
    std::optional<Int> multiplicity;
    std::vector<Int> profile;
    std::vector<Int> criterion_failures;  // ascending, at most kMaxFailures
    static constexpr std::size_t kMaxFailures = 16;
};

void to_json(nlohmann::json& j, const CoverVerdict& v);

/// x -> sum_k B_k(x) over one period.
std::vector<Int> coverage_profile(const CoveringInstance& inst);

/// Decides perfection from the profile. When it is not constant, the failing
/// j are the nonzero Fourier coefficients of the profile, evaluated exactly.
CoverVerdict is_perfect_cover(const CoveringInstance& inst);

/// Spectral decision: sum p_k = c q, and for each 1 <= j < q
///   sum_{k : g_k | j} g_k w^{-j r_k} / (1 - w^{j pbar_k}) = 0
/// exactly in Z[w]. Each denominator 1 - zeta (zeta of order d) is cleared
/// with the cofactor -sum_{s<d} s zeta^s, whose product with it is d, so the
/// check is a divisibility test of an integer polynomial by Phi_q.
CoverVerdict covering_criterion(const CoveringInstance& inst);

/// Whether the j-th equation of the criterion holds.
bool criterion_holds_at(const CoveringInstance& inst, Int j);

/// B^q_{p1,r1} and B^q_{p2,r2} partition Z iff p1 + p2 = q and
/// p1 r1 + p2 r2 = -gcd(p1, q) (mod q). Requires 1 <= p_k < q.
bool fraenkel_two_set(Int q, Int p1, Int r1, Int p2, Int r2);

/// p_k = delta 2^{m-k}, r_k = gamma - delta^{-1} 2^{k-1} (mod q), k = 1..m,
/// m = ord_q(2). Always a perfect cover.
CoveringInstance construct_cfc(Int q, Int delta, Int gamma);

/// Some (delta, gamma) with construct_cfc(q, delta, gamma) equal to inst up to
/// member order, delta in (0, q) and gamma in [0, q); nullopt if none or q is
/// even.
std::optional<std::pair<Int, Int>> find_cfc_parameters(const CoveringInstance& inst);

/// popcount(delta (2^m - 1) / q) with delta reduced into (0, q).
Int predicted_multiplicity(Int q, Int delta);

/// Moduli q <= limit of the form 2^m - 1 (m >= 3) or (2^{2uv} - 1)/(2^u + 1)
/// (u, v >= 1) that admit a cover by at least three sets (ord_q(2) >= 3).
std::vector<BigInt> two_cover_moduli(const BigInt& limit);

bool is_mersenne(const BigInt& q);

/// Some nonempty proper subset of ps sums to 0 mod q.
bool has_zero_sum_proper_subset(Int q, const std::vector<Int>& ps);

/// If j != 0 (mod q) is a multiple of some g_k it is a multiple of at least
/// three of them. Returns nullopt when inst does not meet the hypotheses
/// (perfect cover, distinct p_k in (0, q), gcd of the g_k is 1, no
/// p_i + p_j = q).
std::optional<bool> few_gi_property(const CoveringInstance& inst, Int j);

}  // namespace beatty

#endif  // BEATTY_COVERING_HPP
