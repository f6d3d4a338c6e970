#ifndef CONSLAW_RATIONAL_HPP
#define CONSLAW_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace conslaw {

// Exact rational scalar. GMP keeps values canonical (positive denominator,
// coprime numerator/denominator) after every operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "p/q" or "-p/q" with decimal integer parts.
Rational rational_from_string(const std::string& text);

// Renders canonical "p" or "p/q".
std::string rational_to_string(const Rational& q);

inline double rational_to_double(const Rational& q) { return q.get_d(); }

} // namespace conslaw

#endif
