#ifndef FLAGCOH_LINALG_HPP
#define FLAGCOH_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "flagcoh/polynomial.hpp"

namespace flagcoh::linalg {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Scale every row by the lcm of its denominators, then divide by the gcd of
/// its entries (rows become primitive integer vectors).
IntegerMatrix clear_denominators(const RationalMatrix& m);

struct Echelon {
    IntegerMatrix rows;              ///< integer row echelon form, rank rows
    std::vector<std::size_t> pivots; ///< pivot column of each row
};

/// Bareiss fraction-free elimination. Pivot column: the lowest-index column
/// with a non-zero entry among the remaining rows; pivot row: the largest
/// magnitude in that column, ties to the lowest row index.
Echelon fraction_free_echelon(IntegerMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Reduced row echelon form (rank rows, pivots equal to one).
RationalMatrix reduced_row_echelon(const RationalMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of { y : y·M = 0 }, i.e. linear dependencies among the rows.
RationalMatrix left_kernel(const RationalMatrix& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Row vector times matrix.
std::vector<Rational> multiply(const std::vector<Rational>& row, const RationalMatrix& m);

/// Row space grown one vector at a time. Stored rows are primitive integer
/// vectors in echelon form whose pivot is their first non-zero column, so the
/// final reduced form depends only on the span.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t columns) : columns_(columns) {}

    /// Returns true if the vector was independent of the current span.
    bool insert(const std::vector<Rational>& row);
    bool insert_integer(std::vector<Integer> row);
    /// True iff the vector lies in the span.
    bool contains(const std::vector<Rational>& row) const;

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t columns() const noexcept { return columns_; }
    /// Pivot columns, increasing.
    std::vector<std::size_t> pivots() const;
    /// Reduced row echelon rows (pivot entry 1, zero in other pivot columns),
    /// ordered by pivot.
    RationalMatrix reduced() const;

private:
    void reduce(std::vector<Integer>& row) const;

    std::size_t columns_;
    // pivot -> row; kept sorted by pivot.
    std::vector<std::pair<std::size_t, std::vector<Integer>>> rows_;
};

}  // namespace flagcoh::linalg

#endif  // FLAGCOH_LINALG_HPP
