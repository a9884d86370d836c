#include "beatty/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "beatty/parallel.hpp"

namespace beatty {

Int q_bound(Int n, Int g) {
    if (n < 3) throw std::domain_error("q_bound: n must be >= 3");
    if (g < 1) throw std::domain_error("q_bound: g must be >= 1");
    switch (n) {
        case 3: return checked_mul(7, g);
        case 4: return checked_mul(17, g);
        case 5: return checked_mul(33, g);
        case 6: return checked_mul(730, g);
        default: break;
    }
    const long double base = static_cast<long double>(n) / (std::numbers::e_v<long double> - 1.0L) + 1.0L;
    const long double bound = std::ceil((std::pow(base, static_cast<long double>(n)) + 1.0L) * g);
    if (!(bound < 9.0e18L)) throw std::overflow_error("q_bound: bound exceeds int64");
    return static_cast<Int>(bound);
}

void to_json(nlohmann::json& j, const CandidateTuple& t) { j = nlohmann::json{{"q", t.q}, {"p", t.p}}; }

double inequality_sum(Int q, const std::vector<Int>& p) {
    const double pi = std::numbers::pi;
    const double qd = static_cast<double>(q);
    double s = 0.0;
    for (std::size_t k = 1; k < p.size(); ++k) {
        if (gcd(p[k], q) != 1) continue;
        const Int pbar = inverse_mod(p[k], q);
        s += std::sin(pi / qd) / std::abs(std::sin(pi * static_cast<double>(pbar) / qd));
    }
    return s;
}

namespace {

bool has_complementary_pair(Int q, const std::vector<Int>& p) {
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] + p[b] == q) return true;
    return false;
}

// Calls visit(p) for each 1 = p_1 < p_2 < ... < p_m < q.
template <class Visit>
void for_each_tuple(Int q, Int m, Visit&& visit) {
    std::vector<Int> p(static_cast<std::size_t>(m));
    p[0] = 1;
    auto rec = [&](auto&& self, std::size_t pos, Int lo) -> void {
        if (pos == p.size()) {
            visit(p);
            return;
        }
        const Int remaining = static_cast<Int>(p.size() - pos);
        for (Int v = lo; v + remaining - 1 < q; ++v) {
            p[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 1, 2);
}

}  // namespace

std::vector<CandidateTuple> enumerate_candidates(Int m_max, Int q_max, unsigned threads) {
    std::vector<std::pair<Int, Int>> cells;  // (m, q) in output order
    for (Int m = 3; m <= m_max; ++m)
        for (Int q = m + 1; q <= q_max; ++q) cells.emplace_back(m, q);
    auto parts = parallel_map(cells.size(), threads, [&](std::size_t i) {
        const auto [m, q] = cells[i];
        std::vector<CandidateTuple> found;
        for_each_tuple(q, m, [&](const std::vector<Int>& p) {
            Int sum = 0;
            for (Int v : p) sum += v;
            if (sum % q != 0 || has_complementary_pair(q, p)) return;
            if (inequality_sum(q, p) >= 1.0 - kInequalityMargin) found.push_back({q, p});
        });
        return found;
    });
    std::vector<CandidateTuple> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::vector<CandidateTuple> boundary_ties(const std::vector<CandidateTuple>& cands) {
    std::vector<CandidateTuple> ties;
    for (const auto& t : cands)
        if (std::abs(inequality_sum(t.q, t.p) - 1.0) < kInequalityMargin) ties.push_back(t);
    return ties;
}

std::vector<CandidateTuple> refine_by_rotation(const std::vector<CandidateTuple>& cands) {
    const std::set<CandidateTuple> known(cands.begin(), cands.end());
    std::vector<CandidateTuple> kept;
    for (const auto& t : cands) {
        bool closed = true;
        for (Int pk : t.p) {
            if (gcd(pk, t.q) != 1) continue;
            const Int pbar = inverse_mod(pk, t.q);
            CandidateTuple rotated{t.q, {}};
            for (Int v : t.p) rotated.p.push_back(pbar * v % t.q);
            std::sort(rotated.p.begin(), rotated.p.end());
            if (!known.contains(rotated)) {
                closed = false;
                break;
            }
        }
        if (closed) kept.push_back(t);
    }
    return kept;
}

std::vector<std::vector<Int>> exhaustive_r_search(const CandidateTuple& t, unsigned threads) {
    const std::size_t m = t.m();
    if (m < 3) throw std::domain_error("exhaustive_r_search: need m >= 3");
    const Int q = t.q;
    const std::size_t qs = static_cast<std::size_t>(q);

    std::vector<std::vector<Int>> base;
    for (Int p : t.p) base.push_back(indicator_profile(BeattyParams(p, q, 0)));

    // B^q_{p,r}(x) = B^q_{p,0}(x - r)
    auto search_from = [&](Int r2) {
        std::vector<std::vector<Int>> found;
        std::vector<std::vector<Int>> partial(m, std::vector<Int>(qs, 0));
        std::vector<Int> r(m, 0);
        partial[0] = base[0];
        r[1] = r2;
        for (std::size_t x = 0; x < qs; ++x) partial[1][x] = partial[0][x] + base[1][mod(Int(x) - r2, q)];
        auto rec = [&](auto&& self, std::size_t depth) -> void {
            if (depth == m) {
                const auto& prof = partial[m - 1];
                if (std::all_of(prof.begin(), prof.end(), [&](Int c) { return c == prof.front(); }))
                    found.push_back(r);
                return;
            }
            for (Int rv = 0; rv < q; ++rv) {
                r[depth] = rv;
                for (std::size_t x = 0; x < qs; ++x)
                    partial[depth][x] = partial[depth - 1][x] + base[depth][mod(Int(x) - rv, q)];
                self(self, depth + 1);
            }
        };
        rec(rec, 2);
        return found;
    };

    auto chunks = parallel_map(qs, threads, [&](std::size_t r2) { return search_from(static_cast<Int>(r2)); });
    std::vector<std::vector<Int>> all;
    for (auto& c : chunks) all.insert(all.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
    return all;
}

void to_json(nlohmann::json& j, const SearchReport& r) {
    auto counts = [](const std::map<Int, std::size_t>& m) {
        nlohmann::json o = nlohmann::json::object();
        for (const auto& [k, v] : m) o[std::to_string(k)] = v;
        return o;
    };
    j = nlohmann::json{{"m_max", r.m_max},
                       {"q_max", r.q_max},
                       {"stage1_count", r.stage1_count},
                       {"stage1_by_m", counts(r.stage1_by_m)},
                       {"boundary_ties", r.boundary_ties},
                       {"stage2_survivors", r.stage2_survivors},
                       {"stage2_by_m", counts(r.stage2_by_m)},
                       {"perfect_covers", r.perfect_covers},
                       {"eliminated", r.eliminated}};
}

SearchReport run_full_search(Int m_max, Int q_max, unsigned threads) {
    SearchReport rep;
    rep.m_max = m_max;
    rep.q_max = q_max;
    const auto stage1 = enumerate_candidates(m_max, q_max, threads);
    rep.stage1_count = stage1.size();
    for (const auto& t : stage1) ++rep.stage1_by_m[static_cast<Int>(t.m())];
    rep.boundary_ties = boundary_ties(stage1);
    rep.stage2_survivors = refine_by_rotation(stage1);
    for (const auto& t : rep.stage2_survivors) {
        ++rep.stage2_by_m[static_cast<Int>(t.m())];
        const auto rs = exhaustive_r_search(t, threads);
        if (rs.empty()) {
            rep.eliminated.push_back(t);
            continue;
        }
        for (const auto& r : rs) {
            std::vector<std::pair<Int, Int>> members;
            for (std::size_t k = 0; k < t.m(); ++k) members.emplace_back(t.p[k], r[k]);
            rep.perfect_covers.emplace_back(t.q, members);
        }
    }
    return rep;
}

}  // namespace beatty
