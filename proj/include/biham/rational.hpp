#pragma once

#include <gmpxx.h>

#include <string>

namespace biham {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator), which operator== relies on throughout.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q".
inline Rational rat_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace biham
