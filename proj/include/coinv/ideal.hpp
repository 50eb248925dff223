#pragma once
#include <functional>

#include "coinv/poly.hpp"

namespace coinv {

// theta_m = sum over |S| = m of y_S^r
YPoly theta(int n, int r, int m);

// e_d(x_1^r, ..., x_n^r): elementary symmetric polynomial in the r-th powers
XPoly elementary_e(int n, int r, int d);

// Generators of the x-side ideal: x_i^{kr+1} (variant R) or x_i^{kr}
// (variant S) for all i, together with e_d(x^r) for d = n-k+1, ..., n.
struct XIdealGens {
    int power_exponent = 0; // kr + 1 for R, kr for S; exponent 0 means 1 is a generator
    std::vector<XPoly> elementary;
};
XIdealGens x_ideal_generators(int n, int k, int r, Variant v);

// Generators of the y-side ideal:
//   * y_S y_T for incomparable S, T
//   * theta_m for m = n-k+1, ..., n
//   * all multichain monomials of degree chain_bound(k, r, v)
// The multichain family is huge, so it is exposed as an enumerator rather
// than a materialized list.
struct YIdealGens {
    int n = 0, k = 0, r = 1;
    Variant variant = Variant::S;
    std::vector<std::pair<Subset, Subset>> incomparable_pairs;
    std::vector<YPoly> thetas;
    int multichain_degree = 0; // degree of the multichain generators
    void for_each_multichain_generator(const std::function<void(const YMonomial&)>& fn) const;
};
YIdealGens y_ideal_generators(int n, int k, int r, Variant v);

// All multichain monomials with the given ordinary degree.
void for_each_multichain_of_degree(int n, int degree,
                                   const std::function<void(const YMonomial&)>& fn);
// All multichain monomials with the given tilde degree (sum |S| * exponent).
void for_each_multichain_of_tilde_degree(int n, long tdeg,
                                         const std::function<void(const YMonomial&)>& fn);

} // namespace coinv
