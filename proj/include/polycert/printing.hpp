#ifndef POLYCERT_PRINTING_HPP
#define POLYCERT_PRINTING_HPP

#include "polycert/ratfun.hpp"

#include <string>

namespace polycert {

// Expanded form in descending powers, e.g. "8*z^2 - 24*z + 16".
std::string poly_to_string(const Poly& p);

// Canonical form: a single leading rational scalar times an integer-cleared
// primitive numerator over the primitive denominator, e.g.
// "48*(3*z^3 - 13*z^2 + 18*z - 8)/z^2". parse_ratfun maps it back exactly.
std::string ratfun_to_string(const RatFun& f);

}  // namespace polycert

#endif
