#pragma once
#include <string>

#include "coinv/gs.hpp"
#include "coinv/poly.hpp"
#include "coinv/words.hpp"

namespace coinv {

// Canonical text forms.
//   letter      4^3
//   word        4^3 2^2 3^2        (space separated)
//   partition   (3,2)              (() when empty)
//   osp         (4^3 2^2 3^2; (3,2))
//   face        ({1,4}; 5^2 2^1; (2))
//   blocks      {4^3,2^2,3^2}|{9^1}
//   y-monomial  y{1,3,4}^7*y{4}^5  (largest variable first, ^1 omitted)
//   x-monomial  x4^21*x3^20*x8     (by decreasing exponent, then index)
// Polynomials render as signed term lists in decreasing monomial order.

std::string to_string(const Letter& l);
std::string to_string(const Word& w);
std::string to_string(const Osp& p);
std::string to_string(const Face& f);
std::string blocks_to_string(const std::vector<std::vector<Letter>>& blocks);
std::string to_string(const Subset& s);
std::string to_string(const YMonomial& y);
std::string to_string(const XMonomial& m);
std::string to_string(const YPoly& p);
std::string to_string(const XPoly& p);

Letter parse_letter(const std::string& text);
Word parse_word(const std::string& text, int n, int r);
Partition parse_partition(const std::string& text);
Osp parse_osp(const std::string& text, int n, int r);
Face parse_face(const std::string& text, int n, int r);
Subset parse_subset(const std::string& text);
YMonomial parse_ymonomial(const std::string& text);
XMonomial parse_xmonomial(const std::string& text, int n);

} // namespace coinv
