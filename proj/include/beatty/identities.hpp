#ifndef BEATTY_IDENTITIES_HPP
#define BEATTY_IDENTITIES_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "beatty/cyclotomic.hpp"

namespace beatty {

/// C_q(x) = {x 2^j mod q : 0 <= j < m}, m = ord_q(2), kept as a multiset in
/// generation order.
struct CyclotomicCoset {
    Int q = 0;
    Int seed = 0;
    std::vector<Int> elements;
};

CyclotomicCoset coset(Int q, Int x);

/// The distinct cosets, as sorted element sets, ordered by smallest element.
std::vector<std::vector<Int>> coset_partition(Int q);

struct CscCheck {
    Int q = 0;
    Int m = 0;
    bool exact = false;     // sum_k w^{2^{k-1}} prod_{s=k}^{m-1} (1 + w^{2^s}) == 0 in Z[w]
    double residual = 0.0;  // sum_{k=1}^m csc(2^k pi / q)
};

/// Requires q odd, q >= 3.
CscCheck csc_identity_check(Int q);

/// coefficient * csc(a pi / q) with 1 <= a <= q/2.
struct CscTerm {
    Int coefficient = 0;
    Int a = 0;
    friend bool operator==(const CscTerm&, const CscTerm&) = default;
};

/// sum_{k=1}^m csc(2^k pi / q) = 0 folded onto angles in (0, pi/2]: like terms
/// are merged, zero terms dropped, and the sign fixed so the smallest angle is
/// positive. Sorted by a.
std::vector<CscTerm> csc_identity_terms(Int q);

struct SSum {
    CycloElt exact;
    std::complex<double> value;
};

/// S(q, t) = sum_{u=1}^t sum_{a in C_q(2u-1)} w^a. Requires q odd >= 3, t >= 0.
SSum s_sum(Int q, Int t);

/// c when the cosets of 1, 3, ..., 2t-1 cover every nonzero residue exactly c
/// times and miss 0; nullopt otherwise.
std::optional<Int> s_sum_cover_multiplicity(Int q, Int t);

/// sum_{k=0}^{m-1} sin(2 pi 2t 2^k / q) / sin(2 pi 2^k / q). Requires
/// 1 <= t <= m - 1.
double sine_ratio_sum(Int q, Int t);

/// sum_{k=0}^{m-1} cos(2 pi 2t 2^k / q) / sin(2 pi 2^k / q). Requires
/// 1 <= t <= m - 1.
double cosine_ratio_sum(Int q, Int t);

/// One emitted identity, angles in units of pi/q. For "csc" each lhs term is
/// [c, a] meaning c / sin(a pi/q); for the ratio kinds it is [a, b] meaning
/// sin(a pi/q) / sin(b pi/q) (or cos in the numerator). rhs is an exact
/// integer whenever the underlying element of Z[w] is one.
struct IdentityRecord {
    Int q = 0;
    std::optional<Int> t;
    std::string kind;  // "csc", "sine_ratio", "cosine_ratio"
    std::vector<std::vector<Int>> lhs_terms;
    double rhs = 0.0;
    bool verified = false;
    std::string latex;
};

void to_json(nlohmann::json& j, const IdentityRecord& r);

IdentityRecord csc_identity_record(Int q);
IdentityRecord sine_ratio_record(Int q, Int t);
IdentityRecord cosine_ratio_record(Int q, Int t);

}  // namespace beatty

#endif  // BEATTY_IDENTITIES_HPP
