#pragma once
#include "coinv/poly.hpp"
#include "coinv/words.hpp"

namespace coinv {

// y-side descent monomial of a word g (full or partial support):
// prod y_{T_i}^{m_i} over prefixes T_i = {g_1,...,g_i}, with
//   m_i = c_i - c_{i+1} + r * [i is a descent]   (i < length)
//   m_last = c_last.
YMonomial tilde_b(const Word& g);

// x-side descent monomial: prod x_{g_i}^{r d_i + c_i} where d_i counts the
// descents at positions >= i.
XMonomial b_word(const Word& g);

// A pair (g, d) with d a coordinate vector of theta-free prefix powers:
// tilde_b_gd(g, d) = tilde_b(g) * prod y_{T_i}^{r d_i}.
struct GD {
    Word g;
    std::vector<int> d; // length = g.length()
    friend bool operator==(const GD&, const GD&) = default;
};

YMonomial tilde_b_gd(const Word& g, const std::vector<int>& d);

// Inverse of tilde_b_gd on multichain monomials over the full ground set:
// every multichain monomial arises from exactly one (g, d).
GD gd_from_multichain(const YMonomial& y, int n, int r);

// Descent monomials attached to a k-block ordered set partition (g, lambda):
// the lambda part lambda_i contributes y_{prefix of length lambda_i}^r.
YMonomial tilde_b_osp(const Osp& p, int k);
XMonomial b_osp(const Osp& p, int k);

// Face version: compute the set-partition monomial on the partial word, then
// join the zero block Z into every factor and pad with y_Z up to degree kr.
YMonomial tilde_b_face(const Face& f, int k);
XMonomial b_face(const Face& f, int k);

// The seven-way divisor test for standard monomials of the quotient by the
// y-side ideal.  A monomial is standard iff it is divisible by none of:
//  (1) y_S y_T, S and T incomparable
//  (2) y_{[m]}^r, m >= n-k+1
//  (3) y_S^{r+1}, |S| >= n-k+1
//  (4) y_S^r y_T, S < T, |S| >= n-k+1, min(T\S) > max(S)
//  (5) y_S y_T^r, S < T, |T| >= n-k+1, T = S u [l] for some l
//  (6) y_{S1} y_{S2}^r y_{S3}, S1 < S2 < S3, |S2| >= n-k+1,
//      max(S2\S1) < min(S3\S2)
//  (7) any multichain of chain_bound(k, r, v) variables, with multiplicity
bool is_standard_monomial(const YMonomial& y, int n, int k, int r, Variant v);

// Matches y against the divisor list; returns the lowest matching item
// number, or 0 when y is standard.
int first_forbidden_condition(const YMonomial& y, int n, int k, int r, Variant v);

// Standard monomial basis of the quotient, certified at construction by
// three independent routes (set-partition/face monomials, (g,d) monomials of
// bounded degree, divisor test) that must coincide; throws
// certification_error otherwise.  Sorted largest monomial first.
std::vector<YMonomial> enumerate_basis(int n, int k, int r, Variant v);

// theta-padded monomial: theta_{n-k+1}^{d_{n-k+1}} ... theta_n^{d_n} *
// tilde_b_gd(g, (d_1..d_{n-k}, 0..0)), multiplied out with non-multichain
// terms dropped.  Expands unitriangularly in the tilde_b_gd basis.
YPoly tilde_b_prime(const GD& gd, int n, int k, int r);

} // namespace coinv
