#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace jacring {

// Row echelon form over Z with a caller-chosen column elimination order.
// u tracks the row operations: u * input = h (u unimodular up to row
// permutation).  Zero rows sink to the bottom; pivots[r] names the pivot
// column of row r and pivots are normalized positive with the entries
// above them reduced into [0, pivot).
struct Hnf {
    std::vector<std::vector<mpz_class>> h;
    std::vector<std::vector<mpz_class>> u;
    std::vector<int> pivots;
    int rank() const { return static_cast<int>(pivots.size()); }
};

Hnf hnf_rows(std::vector<std::vector<mpz_class>> a, const std::vector<int>& col_order);

// Back-substitute b against echelon rows (one pivot column per row, zeros
// at all earlier-eliminated columns).  On success returns one coefficient
// per row with b = sum coeff[r] * rows[r]; otherwise nullopt, leaving the
// unexplained residual in *residual if given.
std::optional<std::vector<mpz_class>> solve_echelon(
    const std::vector<std::vector<mpz_class>>& rows, const std::vector<int>& pivots,
    std::vector<mpz_class> b, std::vector<mpz_class>* residual = nullptr);

} // namespace jacring
