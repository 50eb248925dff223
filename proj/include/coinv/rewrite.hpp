#pragma once
#include <optional>

#include "coinv/gs.hpp"
#include "coinv/poly.hpp"

namespace coinv {

// One rewriting step: replace y_S^r inside y using y_S^r = y_S^r - theta_{|S|}
// modulo the ideal, then cancel the non-multichain products.  The result is
// -sum over T != S, |T| = |S|, of (y / y_S^r) y_T^r, keeping multichains.
YPoly y_move(const YMonomial& y, Subset S, int n, int r);

// x-side counterpart: m - (m / prod_{i in S} x_i^r) e_{|S|}(x^r); nothing
// cancels, so terms of larger size-multiset appear.
XPoly x_move(const XMonomial& m, Subset S, int n, int r);

// The move variable prescribed for a non-standard admissible multichain:
// scan the offending divisor patterns (initial-segment power, gap pattern,
// prefix-completion pattern, sandwich pattern) and move on the largest
// variable any offense designates.  Returns nothing when y is standard.
std::optional<Subset> designated_move(const YMonomial& y, int n, int k, int r, Variant v);

struct YTraceStep {
    YMonomial from;
    Rational coeff;   // coefficient carried by `from` when it was rewritten
    Subset moved;
    YPoly replacement; // y_move(from, moved)
};

struct YReduction {
    Admissibility cls = Admissibility::admissible;
    YPoly normal_form;
    std::vector<YTraceStep> steps;
};

// Expand a multichain monomial in the standard monomial basis of the
// quotient.  Semi- and non-admissible size-multisets collapse to zero; for
// admissible ones every intermediate term keeps the same size-multiset and
// strictly decreases in the monomial order (checked).
YReduction reduce_y(const YMonomial& y, int n, int k, int r, Variant v);

struct XTraceStep {
    XMonomial from;
    Rational coeff;
    Subset moved;
    XPoly replacement;
};

struct XStratumReduction {
    Admissibility cls = Admissibility::admissible;
    XPoly same_mu;   // expansion over descent-basis monomials of equal size-multiset
    XPoly higher_mu; // remainder, all terms strictly larger in dominance
    std::vector<XTraceStep> steps;
};

// Mirror of reduce_y in the x variables: the same-mu output matches the
// y-side expansion through the transfer map, everything else lands in
// higher_mu.
XStratumReduction reduce_x_stratum(const XMonomial& m, int n, int k, int r, Variant v);

// Full normal form: stratified reduction iterated through increasing
// dominance strata until no higher terms remain.
XPoly normal_form_x(const XMonomial& m, int n, int k, int r, Variant v);

} // namespace coinv
