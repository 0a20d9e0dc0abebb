#include "opforge/exact_linalg.hpp"

#include <algorithm>

namespace opforge {

namespace {

std::vector<mpz_class> integral_row(const Row& r) {
    mpz_class l = 1;
    for (const auto& q : r)
        if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        mpz_class t = l / r[i].get_den();
        out[i] = r[i].get_num() * t;
    }
    return out;
}

}  // namespace

std::size_t exact_rank(const Matrix& rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows.front().size();
    std::vector<std::vector<mpz_class>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != ncols) throw IncompatibleSpaces("ragged matrix");
        a.push_back(integral_row(r));
    }
    std::size_t m = a.size(), rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < ncols && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                mpz_class v = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

Matrix exact_kernel(const Matrix& m, std::size_t ncols) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        Scalar inv = 1 / a[r][col];
        for (std::size_t j = col; j < ncols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][col] == 0) continue;
            Scalar f = a[i][col];
            for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Row v(ncols, Scalar(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const Matrix& rows, const Row& target) {
    Matrix ext = rows;
    ext.push_back(target);
    return exact_rank(ext) == exact_rank(rows);
}

}  // namespace opforge
