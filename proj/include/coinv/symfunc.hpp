#pragma once
#include <map>
#include <vector>

#include "coinv/partition.hpp"

namespace coinv {

// Compositions of n: ordered positive parts.
using Composition = std::vector<int>;

void check_composition(const Composition& a);
int comp_weight(const Composition& a);
// D(alpha): the proper partial sums, a subset of [1, n-1]
std::vector<int> comp_descents(const Composition& a);
long maj_comp(const Composition& a);
// beta refines alpha when beta splits alpha's parts further, i.e. D(beta)
// contains D(alpha)
bool refines(const Composition& beta, const Composition& alpha);
std::vector<Composition> compositions_of(int n);

// Dense polynomial in q with integer coefficients; index = power of q.
using QPoly = std::vector<long long>;
QPoly qp_trim(QPoly p);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_shift(const QPoly& a, int s); // multiply by q^s
long long qp_eval_at_one(const QPoly& a);

// Gaussian binomial [a choose b]_q; equals the generating function of
// partitions inside a b x (a-b) box.
QPoly q_binomial(int a, int b);
QPoly q_factorial(int m); // [m]_q!

// Integer vectors in the Schur basis.
using SchurVector = std::map<Partition, long long>;
// Schur vectors with q-polynomial coefficients.
using QSchur = std::map<Partition, QPoly>;

// Complete homogeneous h_alpha expanded in Schur functions via iterated
// Pieri row insertion; the coefficient of s_lambda is the Kostka number.
SchurVector h_to_schur(const Composition& alpha);
long long kostka(const Partition& lambda, const Composition& content);

// Ribbon Schur function of a composition, expanded in Schur functions:
// inclusion-exclusion over coarsenings followed by the h expansion.
SchurVector ribbon_to_schur(const Composition& alpha);

// Number of standard Young tableaux of the shape.
long long schur_dim(const Partition& lambda);

// Irreducible symmetric-group character chi^lambda on cycle type mu
// (Murnaghan-Nakayama).
long long mn_character(const Partition& lambda, const Partition& mu);

// Graded Frobenius data of the set-partition quotient at r = 1.
// The multigraded series tracks one t variable per possible support size;
// internally coefficients stay in the ribbon basis.
struct MultigradedFrobenius {
    int n = 0, k = 0;
    // exponent vector of t_1..t_n  ->  ribbon coefficients
    std::map<std::vector<int>, std::map<Composition, long long>> terms;
};
MultigradedFrobenius multigraded_frobenius_S(int n, int k);

// t_i -> q^i, ribbons converted to Schur.
QSchur specialize_t_to_q(const MultigradedFrobenius& f);

// sum over alpha with l(alpha) <= k of q^{maj(alpha)} [n - l(alpha) choose
// k - l(alpha)]_q s_alpha, in the Schur basis.
QSchur frobenius_q_formula_S(int n, int k);

// Recover Schur multiplicities per degree from graded traces of every cycle
// type; throws certification_error when a multiplicity is negative or
// non-integral.
QSchur frobenius_from_characters(const std::map<long, std::map<Partition, long long>>& traces,
                                 int n);

} // namespace coinv
