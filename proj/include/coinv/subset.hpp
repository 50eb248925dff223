#pragma once
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinv {

// Ground sets never exceed 16 elements; subsets are bitmasks.
inline constexpr int kMaxGround = 16;

inline void check_ground(int n) {
    if (n < 1 || n > kMaxGround)
        throw std::invalid_argument("ground set size must be in [1," + std::to_string(kMaxGround) +
                                    "], got " + std::to_string(n));
}

// Subset of {1,...,n} stored as a bitmask (bit i-1 <-> element i).
struct Subset {
    std::uint32_t bits = 0;

    Subset() = default;
    explicit Subset(std::uint32_t b) : bits(b) {}
    static Subset of(std::initializer_list<int> elems) {
        Subset s;
        for (int e : elems) s.add(e);
        return s;
    }
    // {1,...,m}
    static Subset prefix(int m) { return Subset(m <= 0 ? 0u : ((1u << m) - 1u)); }

    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
    void add(int i) {
        if (i < 1 || i > kMaxGround) throw std::invalid_argument("subset element out of range");
        bits |= (1u << (i - 1));
    }
    bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
    bool proper_subset_of(Subset o) const { return subset_of(o) && bits != o.bits; }
    bool comparable(Subset o) const { return subset_of(o) || o.subset_of(*this); }
    Subset unite(Subset o) const { return Subset(bits | o.bits); }
    Subset intersect(Subset o) const { return Subset(bits & o.bits); }
    Subset minus(Subset o) const { return Subset(bits & ~o.bits); }
    // smallest / largest element (1-based); subset must be nonempty
    int min() const {
        if (!bits) throw std::domain_error("min of empty subset");
        return std::countr_zero(bits) + 1;
    }
    int max() const {
        if (!bits) throw std::domain_error("max of empty subset");
        return 32 - std::countl_zero(bits);
    }
    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t b = bits; b;) {
            int i = std::countr_zero(b);
            out.push_back(i + 1);
            b &= b - 1;
        }
        return out;
    }
    friend bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
    friend bool operator!=(Subset a, Subset b) { return a.bits != b.bits; }
};

// Variable order on the y_S: y_S > y_T iff |S| > |T|, or the sizes agree and
// min(S \ T) < min(T \ S).  Returns +1 if y_S > y_T, 0 if S == T, -1 otherwise.
inline int compare_yvars(Subset S, Subset T) {
    if (S == T) return 0;
    int ds = S.size(), dt = T.size();
    if (ds != dt) return ds > dt ? 1 : -1;
    // smallest element where they differ; if it lies in S then min(S\T) < min(T\S)
    std::uint32_t diff = S.bits ^ T.bits;
    return (S.bits >> std::countr_zero(diff)) & 1u ? 1 : -1;
}

// strict "greater" usable as a map comparator (largest variable first)
struct YVarGreater {
    bool operator()(Subset a, Subset b) const { return compare_yvars(a, b) > 0; }
};

// All subsets of {1..n} of given size, in decreasing variable order.
std::vector<Subset> subsets_of_size(int n, int m);

} // namespace coinv
