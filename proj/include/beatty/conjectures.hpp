#ifndef BEATTY_CONJECTURES_HPP
#define BEATTY_CONJECTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "beatty/covering.hpp"

namespace beatty {

/// f(x) = sum_k x^{v_k} / (1 - x^{u_k}) with 1 <= u_1 < ... < u_n < q, every
/// u_k a unit mod q, n >= 1, and v_k arbitrary integers.
struct RationalFunctionSpec {
    Int q = 0;
    std::vector<Int> u;
    std::vector<Int> v;

    RationalFunctionSpec() = default;
    RationalFunctionSpec(Int q, std::vector<Int> u, std::vector<Int> v);

    std::size_t n() const { return u.size(); }
    friend auto operator<=>(const RationalFunctionSpec&, const RationalFunctionSpec&) = default;
};

void to_json(nlohmann::json& j, const RationalFunctionSpec& s);

/// q = 15, u = (1, 2, 4, 11, 13, 14), v = (0, 5, 10, 10, 5, 0).
RationalFunctionSpec buhler_spec();

/// Whether f(x) = 0 at x = exp(2 pi i e / q), decided in Z[zeta_d],
/// d = q / gcd(e, q), from sum_k x^{v_k} prod_{i != k} (1 - x^{u_i}).
/// Throws std::domain_error if some 1 - x^{u_k} vanishes there.
bool vanishes_at_root(const RationalFunctionSpec& spec, Int e);

/// |f(exp(2 pi i e / q))| in double precision.
double numeric_magnitude(const RationalFunctionSpec& spec, Int e);

/// Specs with n <= n_max, sum u_k < q, v_1 = 0, 0 <= v_k <= min(v_bound, q-1)
/// that vanish at exp(2 pi i / q). v_1 = 0 loses nothing since f x^{-v_1}
/// vanishes wherever f does.
std::vector<RationalFunctionSpec> scan_rational_function(Int q, Int n_max, Int v_bound, unsigned threads = 1,
                                                         std::size_t* scanned = nullptr);

/// Specs with n <= n_max (v as above) and no nonempty subset of the u_k summing
/// to 0 mod q that vanish at exp(2 pi i / q) but not at every q-th root other
/// than 1.
std::vector<RationalFunctionSpec> strengthened_scan(Int q, Int n_max, Int v_bound, unsigned threads = 1,
                                                    std::size_t* scanned = nullptr);

/// Whether spec passes the strengthened scan's subset filter.
bool passes_subset_filter(const RationalFunctionSpec& spec);

struct MartinTuple {
    Int q = 0;
    std::vector<Int> p;
    friend auto operator<=>(const MartinTuple&, const MartinTuple&) = default;
};

/// 2/sin(pi/q) <= sum_i 1/|sin(pi p_k pbar_i / q)| for every k, with a 1e-9
/// relative widening (q = 7, p = (1, 2, 4) is an exact tie).
bool martin_inequalities_hold(Int q, const std::vector<Int>& p);

/// The expected solution for n: q = 2^n - 1 and p = (1, 2, ..., 2^{n-1}).
bool is_martin_expected(const MartinTuple& t);

/// As above with each p_k only fixed up to sign mod q. The inequalities are
/// unchanged by p_k -> -p_k, so (7, {1, 2, 3}) passes them like (7, {1, 2, 4}).
bool is_martin_expected_up_to_sign(const MartinTuple& t);

/// Every n-tuple of distinct units p_1 < ... < p_n with sum p_k <= q and
/// q 4^n > 7^n, for q in [q_min, q_max], satisfying all n inequalities.
std::vector<MartinTuple> strong_martin_scan(Int n, Int q_min, Int q_max, std::size_t* scanned = nullptr);

struct ScanReport {
    std::string kind;  // "rf", "rf-strong", "strong-martin"
    Int q_min = 0;
    Int q_max = 0;
    Int n_max = 0;
    std::optional<Int> v_bound;
    std::vector<RationalFunctionSpec> rf_hits;
    std::vector<MartinTuple> martin_hits;
    std::size_t scanned = 0;
    std::size_t violation_count = 0;
};

void to_json(nlohmann::json& j, const ScanReport& r);

ScanReport run_rf_scan(Int q_min, Int q_max, Int n_max, bool strengthened, unsigned threads = 1);
ScanReport run_strong_martin_scan(Int n, Int q_min, Int q_max);

/// The j = 1 criterion data of a cover: u = pbar_k and v = -r_k over the
/// members with gcd(p_k, q) = 1, sorted by u. nullopt if there are none.
std::optional<RationalFunctionSpec> rational_function_of_cover(const CoveringInstance& inst);

}  // namespace beatty

#endif  // BEATTY_CONJECTURES_HPP
