#include "beatty/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "beatty/parallel.hpp"

namespace beatty {

RationalFunctionSpec::RationalFunctionSpec(Int q_, std::vector<Int> u_, std::vector<Int> v_)
    : q(q_), u(std::move(u_)), v(std::move(v_)) {
    if (q < 2) throw std::domain_error("RationalFunctionSpec: q must be >= 2");
    if (u.empty()) throw std::domain_error("RationalFunctionSpec: need n >= 1");
    if (u.size() != v.size()) throw std::domain_error("RationalFunctionSpec: u and v lengths differ");
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] < 1 || u[k] >= q) throw std::domain_error("RationalFunctionSpec: u_k must lie in [1, q)");
        if (k > 0 && u[k] <= u[k - 1]) throw std::domain_error("RationalFunctionSpec: u must be strictly increasing");
        if (gcd(u[k], q) != 1) throw std::domain_error("RationalFunctionSpec: u_k must be coprime to q");
    }
}

void to_json(nlohmann::json& j, const RationalFunctionSpec& s) {
    j = nlohmann::json{{"q", s.q}, {"u", s.u}, {"v", s.v}};
}

RationalFunctionSpec buhler_spec() { return {15, {1, 2, 4, 11, 13, 14}, {0, 5, 10, 10, 5, 0}}; }

bool vanishes_at_root(const RationalFunctionSpec& spec, Int e) {
    const Int q = spec.q;
    const Int g = gcd(mod(e, q), q);
    const Int d = q / g;
    const Int ep = mod(e, q) / g;
    for (Int uk : spec.u)
        if (d == 1 || uk % d == 0) throw std::domain_error("vanishes_at_root: 1 - x^u_k = 0 at this root");

    const std::size_t n = spec.n();
    std::vector<CycloElt> denom;
    for (Int uk : spec.u) denom.push_back(CycloElt::from_integer(d, 1) - root_power(d, mod(ep * uk, d)));
    // prefix[k] = prod_{i<k} denom[i], suffix[k] = prod_{i>=k} denom[i]
    std::vector<CycloElt> prefix(n + 1, CycloElt::from_integer(d, 1)), suffix(n + 1, CycloElt::from_integer(d, 1));
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * denom[k];
    for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * denom[k];
    CycloElt sum(d);
    for (std::size_t k = 0; k < n; ++k) sum += root_power(d, mod(ep * mod(spec.v[k], d), d)) * prefix[k] * suffix[k + 1];
    return sum.is_zero();
}

double numeric_magnitude(const RationalFunctionSpec& spec, Int e) {
    const double tau = 2.0 * std::numbers::pi / static_cast<double>(spec.q);
    auto w = [&](Int a) { return std::polar(1.0, tau * static_cast<double>(mod(checked_mul(e, a), spec.q))); };
    std::complex<double> f = 0.0;
    for (std::size_t k = 0; k < spec.n(); ++k) f += w(spec.v[k]) / (1.0 - w(spec.u[k]));
    return std::abs(f);
}

namespace {

constexpr double kNumericScreen = 1e-6;

// Strictly increasing tuples of units mod q with 1 <= n <= n_max; when
// sum_below_q, restricted to sum < q.
std::vector<std::vector<Int>> unit_tuples(Int q, Int n_max, bool sum_below_q) {
    std::vector<Int> units;
    for (Int x = 1; x < q; ++x)
        if (gcd(x, q) == 1) units.push_back(x);
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    auto rec = [&](auto&& self, std::size_t from, Int sum) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<Int>(cur.size()) == n_max) return;
        for (std::size_t i = from; i < units.size(); ++i) {
            if (sum_below_q && sum + units[i] >= q) break;
            cur.push_back(units[i]);
            self(self, i + 1, sum + units[i]);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool has_zero_sum_subset(Int q, const std::vector<Int>& xs) {
    // ways[r]: subsets (empty included) with sum r mod q, capped at 2
    std::vector<int> ways(static_cast<std::size_t>(q), 0);
    ways[0] = 1;
    for (Int x : xs) {
        std::vector<int> next = ways;
        for (Int r = 0; r < q; ++r)
            if (ways[r] != 0) next[(r + x) % q] = std::min(2, next[(r + x) % q] + ways[r]);
        ways = std::move(next);
    }
    return ways[0] >= 2;
}

// Every spec over the given u-tuples with v_1 = 0 and v_k in [0, vmax] that
// vanishes at exp(2 pi i / q) and satisfies keep().
template <class Keep>
std::vector<RationalFunctionSpec> scan_specs(Int q, const std::vector<std::vector<Int>>& us, Int v_bound,
                                             unsigned threads, std::size_t* scanned, Keep keep) {
    const Int vmax = std::min(v_bound, q - 1);
    if (vmax < 0) throw std::domain_error("rational function scan: v_bound must be >= 0");
    const double tau = 2.0 * std::numbers::pi / static_cast<double>(q);
    std::vector<std::complex<double>> w(static_cast<std::size_t>(q));
    for (Int a = 0; a < q; ++a) w[a] = std::polar(1.0, tau * static_cast<double>(a));

    struct Chunk {
        std::vector<RationalFunctionSpec> hits;
        std::size_t count = 0;
    };
    auto chunks = parallel_map(us.size(), threads, [&](std::size_t idx) {
        Chunk c;
        const auto& u = us[idx];
        const std::size_t n = u.size();
        std::vector<std::complex<double>> inv(n);
        for (std::size_t k = 0; k < n; ++k) inv[k] = 1.0 / (1.0 - w[u[k]]);
        std::vector<Int> v(n, 0);
        auto rec = [&](auto&& self, std::size_t pos, std::complex<double> partial) -> void {
            if (pos == n) {
                ++c.count;
                if (std::abs(partial) >= kNumericScreen) return;
                RationalFunctionSpec spec(q, u, v);
                if (vanishes_at_root(spec, 1) && keep(spec)) c.hits.push_back(std::move(spec));
                return;
            }
            for (Int vk = 0; vk <= vmax; ++vk) {
                v[pos] = vk;
                self(self, pos + 1, partial + w[vk] * inv[pos]);
            }
        };
        rec(rec, 1, inv[0]);
        return c;
    });
    std::vector<RationalFunctionSpec> hits;
    std::size_t total = 0;
    for (auto& c : chunks) {
        total += c.count;
        hits.insert(hits.end(), std::make_move_iterator(c.hits.begin()), std::make_move_iterator(c.hits.end()));
    }
    if (scanned) *scanned += total;
    return hits;
}

}  // namespace

std::vector<RationalFunctionSpec> scan_rational_function(Int q, Int n_max, Int v_bound, unsigned threads,
                                                         std::size_t* scanned) {
    if (q < 2) throw std::domain_error("scan_rational_function: q must be >= 2");
    if (n_max < 1) return {};
    return scan_specs(q, unit_tuples(q, n_max, true), v_bound, threads, scanned,
                      [](const RationalFunctionSpec&) { return true; });
}

bool passes_subset_filter(const RationalFunctionSpec& spec) { return !has_zero_sum_subset(spec.q, spec.u); }

std::vector<RationalFunctionSpec> strengthened_scan(Int q, Int n_max, Int v_bound, unsigned threads,
                                                    std::size_t* scanned) {
    if (q < 2) throw std::domain_error("strengthened_scan: q must be >= 2");
    if (n_max < 1) return {};
    std::vector<std::vector<Int>> us;
    for (auto& u : unit_tuples(q, n_max, false))
        if (!has_zero_sum_subset(q, u)) us.push_back(std::move(u));
    return scan_specs(q, us, v_bound, threads, scanned, [q](const RationalFunctionSpec& spec) {
        for (Int e = 2; e < q; ++e)
            if (!vanishes_at_root(spec, e)) return true;
        return false;
    });
}

bool martin_inequalities_hold(Int q, const std::vector<Int>& p) {
    const double pi = std::numbers::pi;
    const double qd = static_cast<double>(q);
    const double lhs = 2.0 / std::sin(pi / qd);
    std::vector<Int> pbar;
    for (Int x : p) pbar.push_back(inverse_mod(x, q));
    for (Int pk : p) {
        double rhs = 0.0;
        for (Int pb : pbar) rhs += 1.0 / std::abs(std::sin(pi * static_cast<double>(pk * pb % q) / qd));
        if (lhs > rhs * (1.0 + 1e-9)) return false;
    }
    return true;
}

bool is_martin_expected(const MartinTuple& t) {
    const Int n = static_cast<Int>(t.p.size());
    if (n < 1 || n > 62 || t.q != (Int{1} << n) - 1) return false;
    std::vector<Int> sorted = t.p;
    std::sort(sorted.begin(), sorted.end());
    for (Int k = 0; k < n; ++k)
        if (sorted[k] != (Int{1} << k)) return false;
    return true;
}

bool is_martin_expected_up_to_sign(const MartinTuple& t) {
    const Int n = static_cast<Int>(t.p.size());
    if (n < 1 || n > 62 || t.q != (Int{1} << n) - 1) return false;
    std::vector<Int> folded;
    for (Int x : t.p) {
        const Int r = mod(x, t.q);
        folded.push_back(std::min(r, t.q - r));
    }
    std::vector<Int> expect;
    for (Int k = 0; k < n; ++k) {
        const Int r = (Int{1} << k) % t.q;
        expect.push_back(std::min(r, t.q - r));
    }
    std::sort(folded.begin(), folded.end());
    std::sort(expect.begin(), expect.end());
    return folded == expect;
}

std::vector<MartinTuple> strong_martin_scan(Int n, Int q_min, Int q_max, std::size_t* scanned) {
    if (n < 1) throw std::domain_error("strong_martin_scan: n must be >= 1");
    const BigInt seven_n = boost::multiprecision::pow(BigInt(7), static_cast<unsigned>(n));
    const BigInt four_n = boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(n));
    std::vector<MartinTuple> hits;
    for (Int q = std::max<Int>(q_min, 2); q <= q_max; ++q) {
        if (BigInt(q) * four_n <= seven_n) continue;
        std::vector<Int> units;
        for (Int x = 1; x < q; ++x)
            if (gcd(x, q) == 1) units.push_back(x);
        std::vector<Int> cur;
        auto rec = [&](auto&& self, std::size_t from, Int sum) -> void {
            if (static_cast<Int>(cur.size()) == n) {
                if (scanned) ++*scanned;
                if (martin_inequalities_hold(q, cur)) hits.push_back({q, cur});
                return;
            }
            for (std::size_t i = from; i < units.size() && sum + units[i] <= q; ++i) {
                cur.push_back(units[i]);
                self(self, i + 1, sum + units[i]);
                cur.pop_back();
            }
        };
        rec(rec, 0, 0);
    }
    return hits;
}

void to_json(nlohmann::json& j, const ScanReport& r) {
    j = nlohmann::json{{"kind", r.kind},
                       {"q_min", r.q_min},
                       {"q_max", r.q_max},
                       {"n_max", r.n_max},
                       {"v_bound", r.v_bound ? nlohmann::json(*r.v_bound) : nlohmann::json("q-1")},
                       {"scanned", r.scanned},
                       {"violation_count", r.violation_count}};
    if (r.kind == "strong-martin") {
        nlohmann::json hits = nlohmann::json::array();
        for (const auto& t : r.martin_hits)
            hits.push_back({{"q", t.q},
                            {"p", t.p},
                            {"expected", is_martin_expected(t)},
                            {"expected_up_to_sign", is_martin_expected_up_to_sign(t)}});
        j["hits"] = std::move(hits);
    } else {
        j["hits"] = r.rf_hits;
    }
}

ScanReport run_rf_scan(Int q_min, Int q_max, Int n_max, bool strengthened, unsigned threads) {
    ScanReport rep;
    rep.kind = strengthened ? "rf-strong" : "rf";
    rep.q_min = q_min;
    rep.q_max = q_max;
    rep.n_max = n_max;
    for (Int q = std::max<Int>(q_min, 2); q <= q_max; ++q) {
        auto hits = strengthened ? strengthened_scan(q, n_max, q - 1, threads, &rep.scanned)
                                 : scan_rational_function(q, n_max, q - 1, threads, &rep.scanned);
        rep.rf_hits.insert(rep.rf_hits.end(), hits.begin(), hits.end());
    }
    rep.violation_count = rep.rf_hits.size();
    return rep;
}

ScanReport run_strong_martin_scan(Int n, Int q_min, Int q_max) {
    ScanReport rep;
    rep.kind = "strong-martin";
    rep.q_min = q_min;
    rep.q_max = q_max;
    rep.n_max = n;
    rep.martin_hits = strong_martin_scan(n, q_min, q_max, &rep.scanned);
    rep.violation_count = static_cast<std::size_t>(
        std::count_if(rep.martin_hits.begin(), rep.martin_hits.end(), [](const auto& t) { return !is_martin_expected(t); }));
    return rep;
}

std::optional<RationalFunctionSpec> rational_function_of_cover(const CoveringInstance& inst) {
    std::vector<std::pair<Int, Int>> uv;
    for (const auto& b : inst.members())
        if (b.g() == 1) uv.emplace_back(b.pbar(), mod(-b.r(), inst.q()));
    if (uv.empty()) return std::nullopt;
    std::sort(uv.begin(), uv.end());
    std::vector<Int> u, v;
    for (const auto& [a, b] : uv) {
        u.push_back(a);
        v.push_back(b);
    }
    return RationalFunctionSpec(inst.q(), std::move(u), std::move(v));
}

}  // namespace beatty
