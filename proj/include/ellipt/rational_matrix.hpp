// Dense exact-rational matrices: row reduction, solving, nullspaces and the
// inertia of symmetric forms. Small sizes only; everything is O(n^3) Gauss.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ellipt/rational.hpp"

namespace ellipt {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    // One row per entry of `rows`.
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::vector<Rat> row(std::size_t i) const;

    bool operator==(const RatMatrix& other) const = default;

    // Reduced row echelon form (in place); returns the pivot column indices.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    Rat determinant() const;  // requires square

    // Canonical nullspace basis: one vector per free column, with 1 in the
    // free position. Derived from the RREF, so deterministic.
    std::vector<std::vector<Rat>> nullspace() const;

    // Solves A x = b; nullopt when inconsistent. Underdetermined systems get
    // the particular solution with all free variables zero.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    // Inertia (p, q, z) of a symmetric matrix: the numbers of positive,
    // negative and zero eigenvalues, computed exactly by symmetric Gaussian
    // congruence reduction. Requires a symmetric square input.
    struct Inertia {
        std::size_t positive = 0, negative = 0, zero = 0;
        bool operator==(const Inertia&) const = default;
    };
    Inertia symmetric_inertia() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Row space helpers used by the Sullivan builder. All bases are canonical
// (RREF rows), so repeated runs produce identical output.

// RREF basis of the span of `vectors` (zero rows dropped).
std::vector<std::vector<Rat>> row_space_basis(const std::vector<std::vector<Rat>>& vectors,
                                              std::size_t dim);

// Canonical basis of a complement of span(sub) inside span(whole): the RREF
// rows of the combined span that are not in the RREF row space of `sub`.
// Requires span(sub) to be contained in span(whole).
std::vector<std::vector<Rat>> complement_in_span(const std::vector<std::vector<Rat>>& sub,
                                                 const std::vector<std::vector<Rat>>& whole,
                                                 std::size_t dim);

// True when v lies in the row space spanned by `basis` (given any spanning
// set, not necessarily reduced).
bool in_row_space(const std::vector<std::vector<Rat>>& span, const std::vector<Rat>& v);

}  // namespace ellipt
