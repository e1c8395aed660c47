#pragma once

#include <cstddef>
#include <vector>

#include "unihopf/rational.hpp"

namespace unihopf {

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t rank_fraction_free(std::vector<std::vector<Integer>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    Integer prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

// Clears the denominators of each column (column scaling preserves rank).
inline std::vector<std::vector<Integer>> integerize_columns(
    const std::vector<std::vector<Rational>>& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::vector<Integer>> out(rows, std::vector<Integer>(cols, Integer(0)));
    for (std::size_t c = 0; c < cols; ++c) {
        Integer l(1);
        for (std::size_t r = 0; r < rows; ++r) {
            Integer g;
            mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), a[r][c].den().get_mpz_t());
            l = g;
        }
        for (std::size_t r = 0; r < rows; ++r) out[r][c] = a[r][c].num() * (l / a[r][c].den());
    }
    return out;
}

inline std::size_t rank_rational(const std::vector<std::vector<Rational>>& a) {
    return rank_fraction_free(integerize_columns(a));
}

}  // namespace unihopf
