#include "jacring/zlinalg.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace jacring {

namespace {

void sub_scaled(std::vector<mpz_class>& x, const mpz_class& q, const std::vector<mpz_class>& y) {
    for (size_t i = 0; i < x.size(); ++i)
        x[i] -= q * y[i];
}

} // namespace

Hnf hnf_rows(std::vector<std::vector<mpz_class>> a, const std::vector<int>& col_order) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != cols)
            throw std::invalid_argument("hnf_rows: ragged matrix");

    Hnf out;
    out.u.assign(rows, std::vector<mpz_class>(rows, 0));
    for (size_t i = 0; i < rows; ++i)
        out.u[i][i] = 1;

    size_t r = 0;
    for (int col : col_order) {
        if (col < 0 || static_cast<size_t>(col) >= cols)
            throw std::invalid_argument("hnf_rows: column out of range");
        // gcd out the column below r by repeated reduction
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i) {
                if (a[i][col] == 0)
                    continue;
                if (best == rows || cmp(abs(a[i][col]), abs(a[best][col])) < 0)
                    best = i;
            }
            if (best == rows)
                break; // column already clear
            std::swap(a[r], a[best]);
            std::swap(out.u[r], out.u[best]);
            bool clear = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (a[i][col] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
                sub_scaled(a[i], q, a[r]);
                sub_scaled(out.u[i], q, out.u[r]);
                if (a[i][col] != 0)
                    clear = false;
            }
            if (clear)
                break;
        }
        if (r >= rows || a[r][col] == 0)
            continue; // no pivot in this column
        if (a[r][col] < 0) {
            for (auto& v : a[r])
                v = -v;
            for (auto& v : out.u[r])
                v = -v;
        }
        for (size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
            if (q != 0) {
                sub_scaled(a[i], q, a[r]);
                sub_scaled(out.u[i], q, out.u[r]);
            }
        }
        out.pivots.push_back(col);
        ++r;
    }
    out.h = std::move(a);
    return out;
}

std::optional<std::vector<mpz_class>> solve_echelon(
    const std::vector<std::vector<mpz_class>>& rows, const std::vector<int>& pivots,
    std::vector<mpz_class> b, std::vector<mpz_class>* residual) {
    if (pivots.size() > rows.size())
        throw std::invalid_argument("solve_echelon: more pivots than rows");
    std::vector<mpz_class> coeff(rows.size(), 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        const int col = pivots[r];
        if (static_cast<size_t>(col) >= b.size())
            throw std::invalid_argument("solve_echelon: pivot out of range");
        if (b[col] == 0)
            continue;
        const mpz_class& p = rows[r][col];
        if (!mpz_divisible_p(b[col].get_mpz_t(), p.get_mpz_t())) {
            if (residual)
                *residual = b;
            return std::nullopt;
        }
        mpz_class q = b[col] / p;
        sub_scaled(b, q, rows[r]);
        coeff[r] = q;
    }
    for (const auto& v : b) {
        if (v != 0) {
            if (residual)
                *residual = b;
            return std::nullopt;
        }
    }
    return coeff;
}

} // namespace jacring
