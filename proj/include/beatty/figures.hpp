#ifndef BEATTY_FIGURES_HPP
#define BEATTY_FIGURES_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "beatty/modarith.hpp"

namespace beatty {

/// Plot data for one figure; rows are sorted by j or by (q, p).
struct FigureTable {
    int figure = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// 1: (j, re, im) of the transform of B(24, 121, 0), 1 <= j <= 120.
/// 2: (p, q, p/q, |B^(1)|), gcd(p, q) = 1, 0 < p < 3q, 2 <= q <= 75.
/// 3: (p, q, p/q, |B^(1)|), gcd(p, q) = 1, 0 < p < q, 2 <= q <= 100.
/// 4: (p, q, p/q, |B^(2)|), gcd(p, q) = 1, 0 < p < q, 3 <= q <= 100.
/// 5: (p, q, p/q, product of |a_i| over the NICF of p/q), same range as 3.
FigureTable figure_data(int figure);

/// Header line, then one line per row, values at 12 significant digits.
void write_csv(std::ostream& out, const FigureTable& table);

void to_json(nlohmann::json& j, const FigureTable& table);

}  // namespace beatty

#endif  // BEATTY_FIGURES_HPP
