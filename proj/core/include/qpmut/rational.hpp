#pragma once

#include <gmpxx.h>

#include <string>

#include "qpmut/errors.hpp"

namespace qpmut {

// Exact rational scalar. mpq_class keeps the invariant gcd(|num|, den) = 1,
// den > 0 after canonicalization; every constructor used here canonicalizes.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw parse_error("invalid rational literal: '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw domain_error("rational with zero denominator: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

// Serializes as "p" for integers and "p/q" otherwise, denominator positive.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace qpmut
