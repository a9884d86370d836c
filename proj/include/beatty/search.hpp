#ifndef BEATTY_SEARCH_HPP
#define BEATTY_SEARCH_HPP

#include <compare>
#include <map>
#include <vector>

#include <json.hpp>

#include "beatty/covering.hpp"

namespace beatty {

/// Upper bound on q for a perfect cover whose smallest g_k occurs n times:
/// 7g, 17g, 33g, 730g for n = 3..6, otherwise ceil(((n/(e-1) + 1)^n + 1) g).
Int q_bound(Int n, Int g);

/// Densities 1 = p_1 < p_2 < ... < p_m < q of a candidate cover.
struct CandidateTuple {
    Int q = 0;
    std::vector<Int> p;

    std::size_t m() const { return p.size(); }
    friend auto operator<=>(const CandidateTuple&, const CandidateTuple&) = default;
};

void to_json(nlohmann::json& j, const CandidateTuple& t);

/// Widening applied to the stage-1 inequality; borderline tuples are kept.
inline constexpr double kInequalityMargin = 1e-9;

/// sum_{k >= 2, gcd(p_k, q) = 1} sin(pi/q) / |sin(pi pbar_k / q)|. Members
/// with gcd(p_k, q) > 1 drop out of the j = 1 criterion and contribute 0.
double inequality_sum(Int q, const std::vector<Int>& p);

/// All tuples with 3 <= m <= m_max, 1 = p_1 < ... < p_m < q <= q_max,
/// sum p_k = 0 (mod q), no p_i + p_j = q, and inequality_sum >= 1 (widened).
/// Ordered by (m, q, p).
std::vector<CandidateTuple> enumerate_candidates(Int m_max = 5, Int q_max = 33, unsigned threads = 1);

/// Candidates whose inequality_sum lies within kInequalityMargin of 1.
std::vector<CandidateTuple> boundary_ties(const std::vector<CandidateTuple>& cands);

/// Keeps a tuple iff every rotation by pbar_k (gcd(p_k, q) = 1), reduced into
/// (0, q) and sorted, is itself in cands.
std::vector<CandidateTuple> refine_by_rotation(const std::vector<CandidateTuple>& cands);

/// Every r = (0, r_2, ..., r_m) in [0, q)^m for which the sets B^q_{p_k, r_k}
/// form a perfect cover, in lexicographic order. Requires m >= 3.
std::vector<std::vector<Int>> exhaustive_r_search(const CandidateTuple& t, unsigned threads = 1);

struct SearchReport {
    Int m_max = 5;
    Int q_max = 33;
    std::size_t stage1_count = 0;
    std::map<Int, std::size_t> stage1_by_m;
    std::vector<CandidateTuple> boundary_ties;
    std::vector<CandidateTuple> stage2_survivors;
    std::map<Int, std::size_t> stage2_by_m;
    std::vector<CoveringInstance> perfect_covers;
    std::vector<CandidateTuple> eliminated;
};

void to_json(nlohmann::json& j, const SearchReport& r);

SearchReport run_full_search(Int m_max = 5, Int q_max = 33, unsigned threads = 1);

}  // namespace beatty

#endif  // BEATTY_SEARCH_HPP
