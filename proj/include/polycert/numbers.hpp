#ifndef POLYCERT_NUMBERS_HPP
#define POLYCERT_NUMBERS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace polycert {

// Exact arbitrary-precision integers and rationals. Rat values are kept in
// canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Int = mpz_class;
using Rat = mpq_class;

// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rat make_rat(const Int& num, const Int& den);

// Parses "p", "-p" or "p/q" with decimal digits only. Rejects anything else
// (whitespace, base prefixes, empty numerator or denominator, q == 0).
std::optional<Rat> rat_from_string(const std::string& text);

// Exact decimal string, "p" or "p/q".
std::string rat_to_string(const Rat& q);

inline int rat_sign(const Rat& q) { return sgn(q); }
inline Rat rat_abs(const Rat& q) { return abs(q); }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int floor_to_int(const Rat& q);
Int ceil_to_int(const Rat& q);

// base^e for integer e; e < 0 requires base != 0.
Rat rat_pow(const Rat& base, long e);

// n!, memoized per process; safe for concurrent callers.
Int factorial(unsigned long n);

Int binomial(unsigned long n, unsigned long k);

}  // namespace polycert

#endif
