#pragma once

#include <cstddef>
#include <vector>

#include "thomaf/budget.hpp"
#include "thomaf/errors.hpp"
#include "thomaf/polynomial.hpp"

namespace thomaf {

// Dense matrix of polynomials in a common ring.
class poly_matrix {
  public:
    poly_matrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), data_(rows * cols, polynomial::zero(nvars)), nvars_(nvars) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    polynomial& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const polynomial& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // Rows of `below` are appended under this matrix; column counts must agree.
    poly_matrix stacked(const poly_matrix& below) const {
        if (below.cols_ != cols_ || below.nvars_ != nvars_)
            throw input_error("stacking matrices of different shape");
        poly_matrix out(rows_ + below.rows_, cols_, nvars_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        for (std::size_t r = 0; r < below.rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(rows_ + r, c) = below.at(r, c);
        return out;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<polynomial> data_;
    std::size_t nvars_;
};

namespace detail {

inline polynomial det_rec(const poly_matrix& M, const std::vector<std::size_t>& rows,
                          std::vector<std::size_t>& cols) {
    budget_tick();
    std::size_t k = rows.size();
    if (k == 0) return polynomial::constant(M.nvars(), 1);
    if (k == 1) return M.at(rows[0], cols[0]);
    polynomial acc(M.nvars());
    std::vector<std::size_t> sub(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < k; ++j) {
        const polynomial& pivot = M.at(rows[0], cols[j]);
        if (pivot.is_zero()) continue;
        std::size_t removed = cols[j];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
        polynomial minor = det_rec(M, sub, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), removed);
        polynomial t = pivot * minor;
        if (j % 2)
            acc -= t;
        else
            acc += t;
    }
    return acc;
}

inline void choose_rec(std::size_t n, std::size_t k, std::size_t start,
                       std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        choose_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    detail::choose_rec(n, k, 0, cur, out);
    return out;
}

inline polynomial determinant(const poly_matrix& M, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw input_error("determinant of a non-square selection");
    std::vector<std::size_t> c = cols;
    return detail::det_rec(M, rows, c);
}

// All k x k minors. k = 0 yields the single empty minor 1, so "rank < k"
// conditions degenerate correctly; k larger than either dimension yields none.
inline std::vector<polynomial> minors(const poly_matrix& M, std::size_t k) {
    if (k == 0) return {polynomial::constant(M.nvars(), 1)};
    if (k > M.rows() || k > M.cols()) return {};
    std::vector<polynomial> out;
    for (const auto& rs : subsets(M.rows(), k))
        for (const auto& cs : subsets(M.cols(), k)) {
            polynomial d = determinant(M, rs, cs);
            if (!d.is_zero()) out.push_back(std::move(d));
        }
    return out;
}

}  // namespace thomaf
