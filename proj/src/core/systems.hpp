#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussian.hpp"

namespace lvmb {

using IndexSet = std::vector<int>;  // 1-based, sorted ascending
using Part = IndexSet;

// Lambda = (Lambda_1, ..., Lambda_n), each a vector in Q[i]^m.
struct Configuration {
    size_t m = 0;
    size_t n = 0;
    std::vector<CVector> vectors;

    const CVector& at(int index1) const { return vectors.at(index1 - 1); }
};

inline bool operator==(const Configuration& a, const Configuration& b) {
    return a.m == b.m && a.n == b.n && a.vectors == b.vectors;
}

inline Configuration make_configuration(size_t m, std::vector<CVector> vecs) {
    if (m == 0) throw std::invalid_argument("configuration needs m >= 1");
    if (vecs.size() < 2 * m + 1)
        throw std::invalid_argument("configuration needs n >= 2m+1");
    for (const auto& v : vecs)
        if (v.size() != m)
            throw std::invalid_argument("configuration vector of wrong length");
    Configuration c;
    c.m = m;
    c.n = vecs.size();
    c.vectors = std::move(vecs);
    return c;
}

// Fundamental set: parts of cardinality 2m+1 over {1..n}, canonicalized
// (each part sorted, parts deduplicated and ordered lexicographically).
struct FundamentalSet {
    size_t m = 0;
    size_t n = 0;
    std::vector<Part> parts;
};

inline bool operator==(const FundamentalSet& a, const FundamentalSet& b) {
    return a.m == b.m && a.n == b.n && a.parts == b.parts;
}

inline FundamentalSet make_fundamental_set(size_t m, size_t n,
                                           std::vector<Part> parts) {
    if (m == 0) throw std::invalid_argument("fundamental set needs m >= 1");
    if (n < 2 * m + 1) throw std::invalid_argument("fundamental set needs n >= 2m+1");
    if (parts.empty()) throw std::invalid_argument("fundamental set is empty");
    for (auto& p : parts) {
        std::sort(p.begin(), p.end());
        if (std::adjacent_find(p.begin(), p.end()) != p.end())
            throw std::invalid_argument("part has a duplicate index");
        if (p.size() != 2 * m + 1)
            throw std::invalid_argument("part of cardinality != 2m+1");
        if (p.front() < 1 || p.back() > static_cast<int>(n))
            throw std::invalid_argument("part index out of range");
    }
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    FundamentalSet e;
    e.m = m;
    e.n = n;
    e.parts = std::move(parts);
    return e;
}

inline IndexSet indispensable_coordinates(const FundamentalSet& eps) {
    std::set<int> acc(eps.parts[0].begin(), eps.parts[0].end());
    for (size_t i = 1; i < eps.parts.size(); ++i) {
        std::set<int> cur(eps.parts[i].begin(), eps.parts[i].end());
        std::set<int> next;
        std::set_intersection(acc.begin(), acc.end(), cur.begin(), cur.end(),
                              std::inserter(next, next.begin()));
        acc = std::move(next);
    }
    return {acc.begin(), acc.end()};
}

struct ReplacerWitness {
    Part sigma;
    int k = 0;
    IndexSet replacers;  // all k' in sigma with (sigma \ {k'}) + {k} in eps
};

struct ReplacerResult {
    bool ok = false;
    std::optional<ReplacerWitness> witness;
};

namespace detail {

inline IndexSet replacers_of(const std::set<Part>& parts, const Part& sigma, int k) {
    IndexSet found;
    for (int kp : sigma) {
        Part swapped;
        swapped.reserve(sigma.size());
        for (int v : sigma)
            if (v != kp) swapped.push_back(v);
        if (std::find(swapped.begin(), swapped.end(), k) == swapped.end()) {
            swapped.push_back(k);
            std::sort(swapped.begin(), swapped.end());
        }
        if (swapped.size() == sigma.size() && parts.count(swapped)) found.push_back(kp);
    }
    return found;
}

}  // namespace detail

// Replacer existence: every sigma and every k in {1..n} admit some k' in
// sigma with (sigma \ {k'}) + {k} in eps.
inline ReplacerResult satisfies_per(const FundamentalSet& eps) {
    std::set<Part> parts(eps.parts.begin(), eps.parts.end());
    for (const auto& sigma : eps.parts)
        for (int k = 1; k <= static_cast<int>(eps.n); ++k) {
            IndexSet found = detail::replacers_of(parts, sigma, k);
            if (found.empty()) return {false, ReplacerWitness{sigma, k, {}}};
        }
    return {true, std::nullopt};
}

// Existence and uniqueness of the replacer, checked jointly.
inline ReplacerResult satisfies_peur(const FundamentalSet& eps) {
    std::set<Part> parts(eps.parts.begin(), eps.parts.end());
    for (const auto& sigma : eps.parts)
        for (int k = 1; k <= static_cast<int>(eps.n); ++k) {
            IndexSet found = detail::replacers_of(parts, sigma, k);
            if (found.size() != 1) return {false, ReplacerWitness{sigma, k, found}};
        }
    return {true, std::nullopt};
}

// eps' = {sigma \ {1..m+1} : sigma in eps}; requires 1..m+1 indispensable.
inline std::vector<Part> residual_set(const FundamentalSet& eps) {
    IndexSet ind = indispensable_coordinates(eps);
    for (int j = 1; j <= static_cast<int>(eps.m) + 1; ++j)
        if (!std::binary_search(ind.begin(), ind.end(), j))
            throw std::invalid_argument("residual_set: index " + std::to_string(j) +
                                        " is not indispensable");
    std::vector<Part> out;
    out.reserve(eps.parts.size());
    for (const auto& sigma : eps.parts) {
        Part r;
        for (int v : sigma)
            if (v > static_cast<int>(eps.m) + 1) r.push_back(v);
        out.push_back(std::move(r));
    }
    return out;
}

// C(n-m-1, m) - (m-1): the replacer-principle ceiling on |eps| when the
// first m+1 coordinates are indispensable.
inline long long cardinality_bound(size_t n, size_t m) {
    if (n < 2 * m + 1) throw std::invalid_argument("cardinality_bound needs n >= 2m+1");
    long long c = 1;
    for (size_t i = 1; i <= m; ++i)
        c = c * static_cast<long long>(n - m - 1 - m + i) / static_cast<long long>(i);
    return c - (static_cast<long long>(m) - 1);
}

struct HopfSetResult {
    FundamentalSet eps;
    // n = 2m+1 leaves a single part; replacer uniqueness holds vacuously.
    bool degenerate = false;
};

// eps = {(1, 2, j) : j = 3..n} with m = 1.
inline HopfSetResult hopf_fundamental_set(size_t n) {
    if (n < 3) throw std::invalid_argument("hopf fundamental set needs n >= 3");
    std::vector<Part> parts;
    for (int j = 3; j <= static_cast<int>(n); ++j) parts.push_back({1, 2, j});
    return {make_fundamental_set(1, n, std::move(parts)), n == 3};
}

struct SystemReport {
    bool studyable = false;
    std::optional<Part> studyable_witness;
    bool per = false;
    bool peur = false;
    std::optional<ReplacerWitness> peur_witness;
    bool imbrication = false;
    std::optional<std::pair<Part, Part>> imbrication_witness;
    IndexSet indispensables;
    size_t k = 0;
    bool good = false;
};

}  // namespace lvmb
