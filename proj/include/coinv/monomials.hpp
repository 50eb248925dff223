#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "coinv/partition.hpp"
#include "coinv/subset.hpp"

namespace coinv {

// Monomial in the variables y_S, S a nonempty subset of [1..n].  Factors are
// kept sorted with the largest variable first and all exponents positive.
struct YMonomial {
    std::vector<std::pair<Subset, int>> factors;

    static YMonomial one() { return {}; }
    static YMonomial var(Subset S, int e = 1);
    // sorts, merges and drops zero exponents
    static YMonomial from_factors(std::vector<std::pair<Subset, int>> fs);

    bool is_one() const { return factors.empty(); }
    int degree() const; // number of variables with multiplicity
    long tilde_degree() const; // sum |S| * exponent
    int exponent(Subset S) const;
    YMonomial times(const YMonomial& o) const;
    YMonomial times_var(Subset S, int e = 1) const;
    // divide by y_S^e; throws std::domain_error if not divisible
    YMonomial divide_var(Subset S, int e) const;
    bool divisible_by(const YMonomial& o) const;
    friend bool operator==(const YMonomial&, const YMonomial&) = default;
};

// Graded lexicographic order induced by the variable order: compare total
// degree first, then exponent sequences read from the largest variable down.
int compare_ymonomials(const YMonomial& a, const YMonomial& b);

struct YMonoGreater {
    bool operator()(const YMonomial& a, const YMonomial& b) const {
        return compare_ymonomials(a, b) > 0;
    }
};

// Monomial in x_1..x_n, dense exponent vector.
struct XMonomial {
    std::vector<int> exps; // exps[i] is the exponent of x_{i+1}

    static XMonomial one(int n) { return {std::vector<int>(n, 0)}; }
    int n() const { return int(exps.size()); }
    int degree() const;
    XMonomial times(const XMonomial& o) const;
    // divide by prod_{i in S} x_i^e; throws std::domain_error if not divisible
    XMonomial divide_set_power(Subset S, int e) const;
    XMonomial times_set_power(Subset S, int e) const;
    friend bool operator==(const XMonomial&, const XMonomial&) = default;
};

// Internal deterministic order for x-polynomials: degree, then lexicographic
// on the exponent vector.
int compare_xmonomials(const XMonomial& a, const XMonomial& b);

struct XMonoGreater {
    bool operator()(const XMonomial& a, const XMonomial& b) const {
        return compare_xmonomials(a, b) > 0;
    }
};

// A monomial is a multichain when its variable supports are nested.
bool is_multichain(const YMonomial& y);
void check_multichain(const YMonomial& y);

// Transfer y_S -> prod_{i in S} x_i.
XMonomial transfer_phi(const YMonomial& y, int n);

// The unique multichain monomial mapping to m under the transfer:
// S_j = { i : exponent of x_i in m is >= j }.
YMonomial multichain_preimage(const XMonomial& m);

// One straightening step: y_A y_B with A, B incomparable becomes
// y_{A u B} y_{A n B} (the intersection factor drops when empty).  Returns
// nothing when A and B are comparable.
std::optional<YMonomial> straighten(Subset A, Subset B);

// Repeated straightening of an arbitrary monomial to a multichain; equals
// multichain_preimage(transfer_phi(.)).
YMonomial straighten_to_multichain(const YMonomial& y, int n);

// Multiset of support sizes, with multiplicity, as a partition.
Partition mu_of_y(const YMonomial& y);
Partition mu_of_x(const XMonomial& m);

// Longest multichain divisor of y, counted with multiplicity.
int max_multichain_divisor_length(const YMonomial& y);

enum class Variant { R, S };

// Degree bound appearing in the ideal of the given variant: kr for S
// (set-partition case), kr + 1 for R (face case).
inline int chain_bound(int k, int r, Variant v) { return k * r + (v == Variant::R ? 1 : 0); }

enum class Admissibility { admissible, semi_admissible, non_admissible };

// Classification of a size-multiset mu driving the rewriting algorithm:
//   non-admissible:  at least chain_bound parts, or at least r parts equal n
//   semi-admissible: not non-admissible, but some size in [n-k+1, n-1]
//                    occurs more than r times
//   admissible:      everything else
Admissibility classify_mu(const Partition& mu, int n, int k, int r, Variant v);

} // namespace coinv
