#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "whit/coeff.hpp"

namespace whit {

/// Sparse row: (column, value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Row echelon form over Q maintained with fraction-free integer rows.
///
/// Each inserted row is scaled to a primitive integer row, then its leading
/// entry is eliminated against existing pivots by cross-multiplication
/// (row ← p·row − a·pivot) followed by content removal. Rows that survive
/// become new pivots, so pivot rows have pairwise distinct leading columns.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t columns) : columns_(columns) {}

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return pivots_.size(); }

    /// Inserts a row; returns true when it was independent of the current rows.
    bool insert(const SparseRow& row);

    /// Pivot rows ordered by leading column, as primitive integer rows.
    std::vector<SparseRow> rows() const;

    /// Basis of {x : A x = 0}, one vector per non-pivot column j, with x_j = 1
    /// and zero in every other non-pivot column. Ordered by j ascending.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    using IntRow = std::vector<std::pair<std::size_t, Integer>>;

    static void make_primitive(IntRow& row);
    static IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y);

    std::size_t columns_;
    std::map<std::size_t, IntRow> pivots_;
};

}  // namespace whit
