#pragma once
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinv {

// Weakly decreasing positive parts.  The empty vector is the empty partition.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline void check_partition(const Partition& p) {
    if (!is_partition(p)) throw std::invalid_argument("malformed partition");
}

inline long weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0L); }

inline Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    out.resize(p[0]);
    for (int j = 0; j < p[0]; ++j) {
        int c = 0;
        for (int part : p)
            if (part >= j + 1) ++c;
        out[j] = c;
    }
    return out;
}

enum class DomRel { less, equal, greater, incomparable };

// Dominance order; defined only on partitions of the same weight.
inline DomRel dominance_compare(const Partition& a, const Partition& b) {
    check_partition(a);
    check_partition(b);
    if (weight(a) != weight(b))
        throw std::domain_error("dominance order compares partitions of equal size only");
    bool a_ge = true, b_ge = true;
    long sa = 0, sb = 0;
    size_t len = std::max(a.size(), b.size());
    for (size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) a_ge = false;
        if (sb < sa) b_ge = false;
    }
    if (a_ge && b_ge) return DomRel::equal;
    if (a_ge) return DomRel::greater;
    if (b_ge) return DomRel::less;
    return DomRel::incomparable;
}

inline bool dominates_strictly(const Partition& a, const Partition& b) {
    return dominance_compare(a, b) == DomRel::greater;
}

// n(p) = sum (i-1) p_i; strictly decreases along upward steps in dominance,
// which bounds the length of any dominance chain at fixed weight.
inline long dominance_potential(const Partition& p) {
    long s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += long(i) * p[i];
    return s;
}

inline std::vector<Partition> partitions_of(int n, int max_part) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int cap) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rem, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

// Partitions fitting in a box with `rows` rows and parts at most `cols`
// (includes the empty partition).
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining_rows, int cap) -> void {
        out.push_back(cur);
        if (remaining_rows == 0) return;
        for (int part = cap; part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining_rows - 1, part);
            cur.pop_back();
        }
    };
    rec(rec, rows, cols);
    return out;
}

inline std::string partition_to_string(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    s += ")";
    return s;
}

} // namespace coinv
