#include "beatty/figures.hpp"

#include <cstdio>
#include <stdexcept>

#include "beatty/beatty.hpp"

namespace beatty {

namespace {

FigureTable magnitude_table(int figure, Int j, Int q_min, Int q_max, Int p_periods) {
    FigureTable t{figure, {"p", "q", "p_over_q", "magnitude"}, {}};
    for (Int q = q_min; q <= q_max; ++q)
        for (Int p = 1; p < p_periods * q; ++p) {
            if (gcd(p, q) != 1) continue;
            const double mag = ft_magnitude(BeattyParams(p, q, 0), j);
            t.rows.push_back({double(p), double(q), double(p) / double(q), mag});
        }
    return t;
}

}  // namespace

FigureTable figure_data(int figure) {
    switch (figure) {
        case 1: {
            FigureTable t{1, {"j", "re", "im"}, {}};
            const BeattyParams b(24, 121, 0);
            for (Int j = 1; j <= 120; ++j) {
                const auto z = dft_direct(b, j).embed_complex();
                t.rows.push_back({double(j), z.real(), z.imag()});
            }
            return t;
        }
        case 2: return magnitude_table(2, 1, 2, 75, 3);
        case 3: return magnitude_table(3, 1, 2, 100, 1);
        case 4: return magnitude_table(4, 2, 3, 100, 1);
        case 5: {
            FigureTable t{5, {"p", "q", "p_over_q", "nicf_product"}, {}};
            for (Int q = 2; q <= 100; ++q)
                for (Int p = 1; p < q; ++p) {
                    if (gcd(p, q) != 1) continue;
                    const double prod = nicf_product(nicf(p, q)).convert_to<double>();
                    t.rows.push_back({double(p), double(q), double(p) / double(q), prod});
                }
            return t;
        }
        default: throw std::domain_error("figure id must be 1..5");
    }
}

void write_csv(std::ostream& out, const FigureTable& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    char buf[32];
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.12g", row[c]);
            out << (c ? "," : "") << buf;
        }
        out << '\n';
    }
}

void to_json(nlohmann::json& j, const FigureTable& table) {
    j = nlohmann::json{{"figure", table.figure}, {"columns", table.columns}, {"rows", table.rows}};
}

}  // namespace beatty
