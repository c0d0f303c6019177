#pragma once

#include <array>
#include <random>
#include <vector>

#include "../src/core/rng.hpp"
#include "../src/core/systems.hpp"

namespace lvmb_test {

// All m-subsets of {m+2..n}, lexicographic.
inline std::vector<lvmb::Part> tail_subsets(size_t m, size_t n) {
    std::vector<lvmb::Part> out;
    std::vector<int> pool;
    for (int v = static_cast<int>(m) + 2; v <= static_cast<int>(n); ++v) pool.push_back(v);
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (pick.size() == m) {
            out.push_back(pick);
            return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
            pick.push_back(pool[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Candidate parts {1..m+1} + tail, for the replacer-bound enumeration.
inline std::vector<lvmb::Part> core_candidate_parts(size_t m, size_t n) {
    std::vector<lvmb::Part> out;
    for (const auto& tail : tail_subsets(m, n)) {
        lvmb::Part p;
        for (int v = 1; v <= static_cast<int>(m) + 1; ++v) p.push_back(v);
        p.insert(p.end(), tail.begin(), tail.end());
        out.push_back(p);
    }
    return out;
}

// Every nonempty subfamily of the candidates that satisfies replacer
// existence and uniqueness.
inline std::vector<lvmb::FundamentalSet> enumerate_core_peur_sets(size_t m, size_t n) {
    auto cands = core_candidate_parts(m, n);
    std::vector<lvmb::FundamentalSet> out;
    for (unsigned long mask = 1; mask < (1ul << cands.size()); ++mask) {
        std::vector<lvmb::Part> parts;
        for (size_t i = 0; i < cands.size(); ++i)
            if (mask & (1ul << i)) parts.push_back(cands[i]);
        lvmb::FundamentalSet eps = lvmb::make_fundamental_set(m, n, parts);
        if (lvmb::satisfies_peur(eps).ok) out.push_back(std::move(eps));
    }
    return out;
}

using TrianglePoint = std::array<lvmb::Rational, 2>;
using Triangle = std::array<TrianglePoint, 3>;

inline lvmb::Rational orient(const TrianglePoint& a, const TrianglePoint& b,
                             const TrianglePoint& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

inline bool triangle_degenerate(const Triangle& t) {
    return sgn(orient(t[0], t[1], t[2])) == 0;
}

// Separating-axis oracle for two nondegenerate triangles: their interiors
// are disjoint exactly when the supporting line of some edge of either has
// the whole other triangle on the closed outer side.
inline bool sat_interiors_disjoint(const Triangle& s, const Triangle& t) {
    auto separates = [](const Triangle& self, const Triangle& other) {
        for (int e = 0; e < 3; ++e) {
            const TrianglePoint& a = self[e];
            const TrianglePoint& b = self[(e + 1) % 3];
            int inner = sgn(orient(a, b, self[(e + 2) % 3]));
            bool all_out = true;
            for (const TrianglePoint& v : other)
                if (sgn(orient(a, b, v)) * inner > 0) {
                    all_out = false;
                    break;
                }
            if (all_out) return true;
        }
        return false;
    };
    return separates(s, t) || separates(t, s);
}

inline Triangle random_triangle(std::mt19937_64& rng, long lo, long hi) {
    for (;;) {
        Triangle t;
        for (auto& p : t)
            for (auto& c : p) c = lvmb::Rational(lvmb::draw_in_range(rng, lo, hi));
        if (!triangle_degenerate(t)) return t;
    }
}

// The same pair of triangles as an m = 1 configuration with parts
// {1,2,3} and {4,5,6}.
inline lvmb::Configuration triangle_pair_configuration(const Triangle& s,
                                                       const Triangle& t) {
    std::vector<lvmb::CVector> vecs;
    for (const auto& p : s) vecs.push_back({lvmb::GaussianRational(p[0], p[1])});
    for (const auto& p : t) vecs.push_back({lvmb::GaussianRational(p[0], p[1])});
    return lvmb::make_configuration(1, std::move(vecs));
}

}  // namespace lvmb_test
