#ifndef FLAGCOH_TABLEAU_HPP
#define FLAGCOH_TABLEAU_HPP

#include <string>
#include <vector>

#include "flagcoh/partition.hpp"

namespace flagcoh {

/// Filling of a Young diagram (English convention) by positive integers.
/// Immutable after construction.
class Tableau {
public:
    Tableau() = default;

    /// Rows must have weakly decreasing, non-zero lengths.
    static Tableau from_rows(std::vector<std::vector<int>> rows);
    /// Columns must have weakly decreasing, non-zero heights.
    static Tableau from_columns(const std::vector<std::vector<int>>& columns);
    /// "2,1,2,2;3,2,4;4,4,6;6,5" (rows separated by ';'). Empty text is the
    /// empty tableau.
    static Tableau parse(const std::string& text);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    std::vector<std::vector<int>> columns() const;
    bool empty() const noexcept { return rows_.empty(); }

    /// Columns read top to bottom, left to right.
    std::vector<int> reading_word() const;
    /// Multiplicities of 1..n.
    std::vector<int> content(std::size_t n) const;
    bool is_column_strict() const;
    bool is_semistandard() const;

    std::string to_string() const;

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
    /// Shape first, then the column reading word lexicographically.
    friend bool operator<(const Tableau& a, const Tableau& b);

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Column-strict λ-tableaux with content μ, ordered lexicographically by
/// column reading word. Empty iff μ⁺ is not dominated by λ.
std::vector<Tableau> column_strict_tableaux(const Partition& lambda, const Composition& mu);
/// Semi-standard subset of the above, same order.
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Composition& mu);

/// One step of the recursion that strips the largest label n = len(μ).
struct Reduction {
    std::vector<int> columns;   ///< 1-based columns holding entry n, increasing
    Partition gamma;            ///< partition with that column sequence
    Tableau reduced;            ///< boxes labelled n removed, columns re-sorted by height
    Partition reduced_shape;
    Composition reduced_content;
};

/// Throws InvalidArgument unless T is column-strict with content μ and
/// len(μ) >= 1.
Reduction reduce_tableau(const Tableau& t, const Composition& mu);

/// deg(T) = |γ| + deg(T̄), zero on the empty tableau.
int tableau_degree(const Tableau& t, const Composition& mu);

/// T ↦ T⁺ in the semi-standard tableaux of the same shape and content.
Tableau straighten(const Tableau& t, const Composition& mu);

enum class CellOrder { less, equal, greater, incomparable };

/// The paving order ⪯: compare γ by strict containment at the top level,
/// recurse on T̄ when the γ agree.
CellOrder cell_order(const Tableau& a, const Tableau& b, const Composition& mu);

/// The sequence of γ produced by repeatedly reducing T (top level first).
/// Comparing signatures is equivalent to cell_order and much cheaper when
/// many pairs are compared.
std::vector<Partition> cell_signature(const Tableau& t, const Composition& mu);
CellOrder compare_signatures(const std::vector<Partition>& a, const std::vector<Partition>& b);

const char* to_string(CellOrder o) noexcept;

}  // namespace flagcoh

#endif  // FLAGCOH_TABLEAU_HPP
