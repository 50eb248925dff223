#include "coinv/linalg.hpp"

#include <algorithm>

namespace coinv {

SparseRow normalize_row(SparseRow row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& [col, val] : row) {
        if (!out.empty() && out.back().first == col)
            out.back().second += val;
        else
            out.push_back({col, std::move(val)});
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    return out;
}

namespace {

// row -= factor * pivot (both sorted by column)
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.push_back({pivot[j].first, -factor * pivot[j].second});
            ++j;
        } else {
            Rational v = row[i].second - factor * pivot[j].second;
            if (v != 0) out.push_back({row[i].first, std::move(v)});
            ++i, ++j;
        }
    }
    return out;
}

} // namespace

SparseRow SparseEliminator::reduce(SparseRow row) const {
    row = normalize_row(std::move(row));
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) break;
        row = axpy(row, row.front().second, it->second);
    }
    return row;
}

bool SparseEliminator::add_row(SparseRow row) {
    // Pivot rows have distinct leading columns and no entries before their
    // lead, so reducing the leading entry until it has no pivot is a
    // complete membership test.
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Rational lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    pivots_.emplace(row.front().first, std::move(row));
    ++rank_;
    return true;
}

} // namespace coinv
