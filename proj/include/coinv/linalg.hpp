#pragma once
#include <map>
#include <vector>

#include "coinv/rational.hpp"

namespace coinv {

// Sparse row: (column, coefficient) pairs sorted by column, nonzero coeffs.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Incremental Gaussian elimination over the rationals.  Rows may be added in
// any order; the eliminator keeps one pivot row per leading column.
class SparseEliminator {
public:
    // Reduces the row against the current pivots; if something survives, a
    // new pivot is recorded and the rank grows.  Returns true in that case.
    bool add_row(SparseRow row);

    // Reduction without insertion; empty result means the row lies in the
    // span of the added rows.
    SparseRow reduce(SparseRow row) const;

    bool in_span(SparseRow row) const { return reduce(std::move(row)).empty(); }

    long rank() const { return rank_; }

private:
    std::map<int, SparseRow> pivots_; // leading column -> row scaled to lead 1
    long rank_ = 0;
};

SparseRow normalize_row(SparseRow row);

} // namespace coinv
