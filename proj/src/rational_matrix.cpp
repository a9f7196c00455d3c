#include "ellipt/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ellipt {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
    std::vector<Rat> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<std::size_t> RatMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
        Rat inv = 1 / at(r, c);
        for (std::size_t j = 0; j < cols_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            Rat f = at(i, c);
            for (std::size_t j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t RatMatrix::rank() const {
    RatMatrix copy = *this;
    return copy.rref().size();
}

Rat RatMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix m = *this;
    Rat det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t sel = c;
        while (sel < rows_ && m.at(sel, c) == 0) ++sel;
        if (sel == rows_) return Rat(0);
        if (sel != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rat inv = 1 / m.at(c, c);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

std::vector<std::vector<Rat>> RatMatrix::nullspace() const {
    RatMatrix m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> RatMatrix::solve(const std::vector<Rat>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: size mismatch");
    RatMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Rat> x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

RatMatrix::Inertia RatMatrix::symmetric_inertia() const {
    if (rows_ != cols_) throw std::invalid_argument("inertia of non-square matrix");
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) throw std::invalid_argument("inertia of non-symmetric matrix");

    RatMatrix m = *this;
    std::size_t n = rows_;
    Inertia inertia;
    auto add_rowcol = [&](std::size_t dst, std::size_t src) {
        for (std::size_t j = 0; j < n; ++j) m.at(dst, j) += m.at(src, j);
        for (std::size_t i = 0; i < n; ++i) m.at(i, dst) += m.at(i, src);
    };
    auto swap_rowcol = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
    };

    for (std::size_t k = 0; k < n; ++k) {
        // Prefer a nonzero diagonal pivot; failing that, symmetrize one in
        // with a congruence row+column addition.
        std::size_t sel = k;
        while (sel < n && m.at(sel, sel) == 0) ++sel;
        if (sel == n) {
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (m.at(i, j) != 0) {
                        add_rowcol(i, j);  // makes m(i,i) = 2*m(i,j) != 0
                        sel = i;
                        found = true;
                    }
            if (!found) {
                inertia.zero += n - k;
                return inertia;
            }
        }
        if (sel != k) swap_rowcol(sel, k);
        Rat d = m.at(k, k);
        if (d > 0)
            ++inertia.positive;
        else
            ++inertia.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) / d;
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            for (std::size_t j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
        }
    }
    return inertia;
}

std::vector<std::vector<Rat>> row_space_basis(const std::vector<std::vector<Rat>>& vectors,
                                              std::size_t dim) {
    if (vectors.empty()) return {};
    RatMatrix m(vectors.size(), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != dim) throw std::invalid_argument("row_space_basis: bad dim");
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = vectors[i][j];
    }
    std::size_t rank = m.rref().size();
    std::vector<std::vector<Rat>> basis;
    basis.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) basis.push_back(m.row(i));
    return basis;
}

std::vector<std::vector<Rat>> complement_in_span(const std::vector<std::vector<Rat>>& sub,
                                                 const std::vector<std::vector<Rat>>& whole,
                                                 std::size_t dim) {
    RatMatrix sub_m(sub.size(), dim);
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) sub_m.at(i, j) = sub[i][j];
    std::vector<std::size_t> sub_pivots = sub_m.rref();
    std::vector<bool> in_sub(dim, false);
    for (std::size_t c : sub_pivots) in_sub[c] = true;

    RatMatrix whole_m(whole.size(), dim);
    for (std::size_t i = 0; i < whole.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) whole_m.at(i, j) = whole[i][j];
    std::vector<std::size_t> whole_pivots = whole_m.rref();

    // For nested subspaces the RREF pivot set of the subspace is contained in
    // that of the whole; the extra pivot rows form a canonical complement.
    std::vector<std::vector<Rat>> comp;
    for (std::size_t r = 0; r < whole_pivots.size(); ++r)
        if (!in_sub[whole_pivots[r]]) comp.push_back(whole_m.row(r));
    return comp;
}

bool in_row_space(const std::vector<std::vector<Rat>>& span, const std::vector<Rat>& v) {
    std::size_t dim = v.size();
    RatMatrix m(span.size() + 1, dim);
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = span[i][j];
    for (std::size_t j = 0; j < dim; ++j) m.at(span.size(), j) = v[j];
    RatMatrix without(span.size(), dim);
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) without.at(i, j) = span[i][j];
    return m.rank() == without.rank();
}

}  // namespace ellipt
