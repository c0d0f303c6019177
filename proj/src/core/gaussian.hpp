#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace lvmb {

// Element of Q[i]. All field operations are exact.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(long r, long i = 0) : re(r), im(i) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // Squared modulus; rational and exact.
    Rational norm() const { return re * re + im * im; }
};

inline GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}

inline GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}

inline GaussianRational operator-(const GaussianRational& a) {
    return {-a.re, -a.im};
}

inline GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline GaussianRational inverse(const GaussianRational& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    Rational n = a.norm();
    return {a.re / n, -a.im / n};
}

inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * inverse(b);
}

inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
}

inline bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
}

inline std::string to_string(const GaussianRational& z) {
    std::string s = z.re.get_str();
    if (sgn(z.im) >= 0) s += "+";
    s += z.im.get_str() + "i";
    return s;
}

using CVector = std::vector<GaussianRational>;

// (re1, im1, re2, im2, ...): C^m as R^{2m}.
inline std::vector<Rational> realify(const CVector& v) {
    std::vector<Rational> out;
    out.reserve(2 * v.size());
    for (const auto& z : v) {
        out.push_back(z.re);
        out.push_back(z.im);
    }
    return out;
}

inline CVector unrealify(const std::vector<Rational>& v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("odd realified length");
    CVector out;
    out.reserve(v.size() / 2);
    for (size_t i = 0; i < v.size(); i += 2) out.push_back({v[i], v[i + 1]});
    return out;
}

}  // namespace lvmb
