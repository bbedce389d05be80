#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace golden {

// Arbitrary-precision integers and rationals, backed by GMP. Every
// BigRational handed out by this library is canonical: reduced to lowest
// terms, denominator positive, zero stored as 0/1. Equality on canonical
// values is structural.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    BigRational q;
    q.get_num() = std::move(num);
    q.get_den() = std::move(den);
    q.canonicalize();
    return q;
}

// Returns q in canonical form; rejects a zero denominator. Needed because
// mpq_class values built from raw parts are not canonicalized by GMP.
inline BigRational canonical(BigRational q) {
    if (q.get_den() == 0) {
        throw std::domain_error("canonical: zero denominator");
    }
    q.canonicalize();
    return q;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const BigRational& q) { return q.get_str(); }

// Accepts the same "p" / "p/q" forms that to_string emits.
inline BigRational parse_rational(const std::string& text) {
    BigRational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::domain_error("parse_rational: zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace golden
