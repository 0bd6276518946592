#pragma once

#include <string>
#include <utility>

#include <gmpxx.h>

#include "unitfrac/errors.hpp"

namespace unitfrac {

// Exact arbitrary-precision arithmetic throughout; no floating point ever
// touches a result. mpq_class keeps fractions canonical (gcd 1, positive
// denominator), which is exactly the representation invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw InvariantViolation("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Caller promises gcd(num, den) = 1 and den > 0. Skips the canonicalization
// gcd, which matters when den has millions of bits.
inline Rat rational_from_coprime(const Int& num, const Int& den) {
    Rat q;
    q.get_num() = num;
    q.get_den() = den;
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string dec(const Int& n) { return n.get_str(); }

// Strict decimal integer parse: optional '-', no leading zeros, no blanks.
inline Int parse_decimal(const std::string& s) {
    std::size_t i = 0;
    if (!s.empty() && s[0] == '-') i = 1;
    if (i >= s.size()) throw ParseError("empty integer literal");
    if (s[i] == '0' && s.size() > i + 1) throw ParseError("leading zero in '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw ParseError("bad integer literal '" + s + "'");
    return Int(s, 10);
}

}  // namespace unitfrac
