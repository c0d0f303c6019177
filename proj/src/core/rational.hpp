#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lvmb {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the representation contract.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision integer parts.
// Anything else (notably decimal or exponent notation) is rejected.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto digits_ok = [](const std::string& s, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    size_t slash = text.find('/');
    auto check_int = [&](size_t from, size_t to) {
        size_t start = from;
        if (start < to && (text[start] == '-' || text[start] == '+')) ++start;
        if (!digits_ok(text, start, to))
            throw std::invalid_argument("bad rational literal: " + text);
    };
    if (slash == std::string::npos) {
        check_int(0, text.size());
    } else {
        check_int(0, slash);
        check_int(slash + 1, text.size());
    }
    Rational q(text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline double to_double(const Rational& q) {
    return q.get_d();
}

inline int sign(const Rational& q) {
    return sgn(q);
}

}  // namespace lvmb
