#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "conditions.hpp"
#include "geometry.hpp"
#include "rng.hpp"
#include "systems.hpp"

namespace lvmb {

// Coordinate bounds are inclusive; the default {-2..1} mirrors an integer
// grid step over [-2, 2).
struct SearchParams {
    std::uint64_t seed = 0;
    std::size_t max_trials = 10000;
    long coord_lo = -2;
    long coord_hi = 1;
    BasisMode basis_mode = BasisMode::General;
};

namespace detail {

inline void validate_params(const SearchParams& params) {
    if (params.max_trials == 0)
        throw std::invalid_argument("max_trials must be positive");
    if (params.coord_lo > params.coord_hi)
        throw std::invalid_argument("empty coordinate range");
}

// One configuration from an ongoing stream: vectors in index order, each
// coordinate drawn re then im.
inline Configuration draw_configuration(std::mt19937_64& rng, const SearchParams& params,
                                        size_t m, size_t n) {
    std::vector<CVector> vecs;
    vecs.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        CVector v;
        v.reserve(m);
        for (size_t c = 0; c < m; ++c) {
            long re = draw_in_range(rng, params.coord_lo, params.coord_hi);
            long im = draw_in_range(rng, params.coord_lo, params.coord_hi);
            v.push_back(GaussianRational(re, im));
        }
        vecs.push_back(std::move(v));
    }
    return make_configuration(m, std::move(vecs));
}

inline std::vector<std::vector<long>> draw_basis_rows(std::mt19937_64& rng,
                                                      const SearchParams& params,
                                                      size_t m) {
    std::vector<std::vector<long>> rows(m, std::vector<long>(m));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i)
            rows[j][i] = draw_in_range(rng, params.coord_lo, params.coord_hi);
    return rows;
}

}  // namespace detail

inline Configuration random_configuration(const SearchParams& params, size_t m,
                                          size_t n) {
    detail::validate_params(params);
    std::mt19937_64 rng(params.seed);
    return detail::draw_configuration(rng, params, m, n);
}

struct MineResult {
    std::optional<Configuration> found;
    std::size_t trials = 0;
    bool exhausted = false;
};

// First seeded configuration making (eps, Lambda) good. Replacer uniqueness
// depends on eps alone, so it is checked once up front; each sampled Lambda
// then only needs studyability and imbrication.
inline MineResult mine_good_system(const FundamentalSet& eps, const SearchParams& params) {
    detail::validate_params(params);
    if (!satisfies_peur(eps).ok)
        throw std::invalid_argument("fundamental set fails replacer uniqueness");
    std::mt19937_64 rng(params.seed);
    for (std::size_t t = 1; t <= params.max_trials; ++t) {
        Configuration lam = detail::draw_configuration(rng, params, eps.m, eps.n);
        if (is_studyable(eps, lam).ok && imbrication(eps, lam).ok)
            return {std::move(lam), t, false};
    }
    return {std::nullopt, params.max_trials, true};
}

struct BasisMineResult {
    std::optional<IntegerBasis> found;
    std::optional<ConditionHReport> report;
    std::size_t trials = 0;
    bool exhausted = false;
};

// First seeded integer matrix that passes the mode's determinant gate and
// contracts for at least one row. Every sampled matrix counts as a trial,
// rejected determinants included, so the loop is bounded by max_trials.
inline BasisMineResult mine_condition_h_basis(const FundamentalSet& eps,
                                              const Configuration& lam,
                                              const SearchParams& params) {
    detail::validate_params(params);
    IndexSet ind = indispensable_coordinates(eps);
    for (int j = 1; j <= static_cast<int>(lam.m) + 1; ++j)
        if (!std::binary_search(ind.begin(), ind.end(), j))
            throw std::invalid_argument("condition (H) precondition: index " +
                                        std::to_string(j) + " is not indispensable");
    if (!check_system(eps, lam).good)
        throw std::invalid_argument("basis mining needs a good system");

    CMatrix a_inv = inverse(matrix_A(lam));
    std::mt19937_64 rng(params.seed);
    for (std::size_t t = 1; t <= params.max_trials; ++t) {
        auto rows = detail::draw_basis_rows(rng, params, lam.m);
        std::vector<std::vector<Rational>> qrows;
        for (const auto& r : rows) qrows.emplace_back(r.begin(), r.end());
        Integer det = det_rational(qrows).get_num();
        if (sgn(det) == 0) continue;
        if (params.basis_mode == BasisMode::Strict && abs(det) != 1) continue;
        bool any = false;
        for (size_t j = 0; j < lam.m && !any; ++j) {
            bool contracting = true;
            for (int r = static_cast<int>(lam.m) + 2;
                 contracting && r <= static_cast<int>(lam.n); ++r)
                contracting = sgn(detail::exponent_w(a_inv, rows[j], r, lam).im) > 0;
            any = contracting;
        }
        if (!any) continue;
        IntegerBasis basis = make_integer_basis(rows, params.basis_mode);
        ConditionHReport report = condition_h(basis, eps, lam);
        return {std::move(basis), std::move(report), t, false};
    }
    return {std::nullopt, std::nullopt, params.max_trials, true};
}

struct HomotopySample {
    Rational s;
    bool studyable = false;
    bool imbricated = false;
    bool good = false;
};

struct HomotopyScanResult {
    std::vector<HomotopySample> samples;
    bool all_good = false;
};

// Samples the straight segment H(s) = (1-s) Lambda_a + s Lambda_b at
// steps evenly spaced rational times. A clean scan supports, but does not
// prove, that the endpoints are homotopic good systems.
inline HomotopyScanResult homotopy_scan(const FundamentalSet& eps,
                                        const Configuration& lam_a,
                                        const Configuration& lam_b, size_t steps) {
    if (lam_a.m != lam_b.m || lam_a.n != lam_b.n)
        throw std::invalid_argument("endpoints disagree on (m, n)");
    if (steps < 2) throw std::invalid_argument("homotopy scan needs steps >= 2");
    if (!check_system(eps, lam_a).good || !check_system(eps, lam_b).good)
        throw std::invalid_argument("homotopy endpoint is not a good system");

    HomotopyScanResult res;
    res.all_good = true;
    for (size_t k = 0; k < steps; ++k) {
        Rational s = make_rational(static_cast<long>(k), static_cast<long>(steps - 1));
        Rational c = 1 - s;
        std::vector<CVector> vecs;
        for (size_t j = 0; j < lam_a.n; ++j) {
            CVector v;
            for (size_t t = 0; t < lam_a.m; ++t) {
                const GaussianRational& a = lam_a.vectors[j][t];
                const GaussianRational& b = lam_b.vectors[j][t];
                v.push_back({a.re * c + b.re * s, a.im * c + b.im * s});
            }
            vecs.push_back(std::move(v));
        }
        Configuration h = make_configuration(lam_a.m, std::move(vecs));
        HomotopySample sample;
        sample.s = s;
        sample.studyable = is_studyable(eps, h).ok;
        sample.imbricated = imbrication(eps, h).ok;
        sample.good = sample.studyable && sample.imbricated;
        res.all_good = res.all_good && sample.good;
        res.samples.push_back(std::move(sample));
    }
    return res;
}

}  // namespace lvmb
