#pragma once
#include <gmpxx.h>
#include <string>

namespace coinv {

// Exact rational scalar used for all polynomial coefficients and linear
// algebra.  Nothing in the library ever rounds.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Throws if q is not an integer that fits in long.
inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("expected integer, got " + to_string(q));
    if (!q.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + to_string(q));
    return q.get_num().get_si();
}

} // namespace coinv
