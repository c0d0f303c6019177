#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "lp.hpp"
#include "rng.hpp"
#include "systems.hpp"

namespace lvmb {

enum class MembershipMode { Closed, Interior };

struct HullQuery {
    IndexSet subset;
    std::vector<Rational> point;
    MembershipMode mode = MembershipMode::Closed;
};

namespace detail {

inline void check_subset(const IndexSet& subset, const Configuration& lam) {
    if (subset.empty()) throw std::invalid_argument("empty index subset");
    for (int j : subset)
        if (j < 1 || j > static_cast<int>(lam.n))
            throw std::invalid_argument("subset index out of range");
}

// Barycentric system for a common positive-weight point of several hulls:
// one weight-sum row per part, then coordinate rows tying each part's
// weighted sum to the last part's.
inline LinearFeasibilityProblem mutual_hull_problem(const std::vector<IndexSet>& parts,
                                                    const Configuration& lam) {
    size_t dim = 2 * lam.m;
    std::vector<size_t> offs;
    size_t total = 0;
    for (const auto& p : parts) {
        check_subset(p, lam);
        offs.push_back(total);
        total += p.size();
    }
    LinearFeasibilityProblem lp;
    lp.num_vars = total;
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        std::vector<Rational> row(total, Rational(0));
        for (size_t j = 0; j < parts[pi].size(); ++j) row[offs[pi] + j] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rational(1));
    }
    size_t last = parts.size() - 1;
    std::vector<std::vector<Rational>> rl;
    for (int idx : parts[last]) rl.push_back(realify(lam.at(idx)));
    for (size_t pi = 0; pi + 1 < parts.size(); ++pi) {
        std::vector<std::vector<Rational>> rp;
        for (int idx : parts[pi]) rp.push_back(realify(lam.at(idx)));
        for (size_t d = 0; d < dim; ++d) {
            std::vector<Rational> row(total, Rational(0));
            for (size_t j = 0; j < parts[pi].size(); ++j) row[offs[pi] + j] = rp[j][d];
            for (size_t j = 0; j < parts[last].size(); ++j)
                row[offs[last] + j] -= rl[j][d];
            lp.rows.push_back(std::move(row));
            lp.rhs.push_back(Rational(0));
        }
    }
    return lp;
}

inline LinearFeasibilityProblem point_hull_problem(const IndexSet& subset,
                                                   const Configuration& lam,
                                                   const std::vector<Rational>& point) {
    check_subset(subset, lam);
    size_t dim = 2 * lam.m;
    if (point.size() != dim)
        throw std::invalid_argument("query point of wrong dimension");
    LinearFeasibilityProblem lp;
    lp.num_vars = subset.size();
    lp.rows.emplace_back(subset.size(), Rational(1));
    lp.rhs.push_back(Rational(1));
    std::vector<std::vector<Rational>> rp;
    for (int idx : subset) rp.push_back(realify(lam.at(idx)));
    for (size_t d = 0; d < dim; ++d) {
        std::vector<Rational> row;
        row.reserve(subset.size());
        for (size_t j = 0; j < subset.size(); ++j) row.push_back(rp[j][d]);
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(point[d]);
    }
    return lp;
}

// Visits k-subsets of {1..n} in lexicographic order until fn returns false.
template <typename Fn>
void for_each_subset(size_t n, size_t k, Fn&& fn) {
    if (k == 0 || k > n) return;
    IndexSet cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = static_cast<int>(i) + 1;
    for (;;) {
        if (!fn(const_cast<const IndexSet&>(cur))) return;
        size_t i = k;
        while (i > 0 && cur[i - 1] == static_cast<int>(n - k + i)) --i;
        if (i == 0) return;
        ++cur[i - 1];
        for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

}  // namespace detail

struct StudyableResult {
    bool ok = false;
    std::optional<Part> witness;
};

// Each part must span a real affine frame: the 2m difference vectors from
// the part's least index have nonzero determinant.
inline StudyableResult is_studyable(const FundamentalSet& eps, const Configuration& lam) {
    if (eps.m != lam.m || eps.n != lam.n)
        throw std::invalid_argument("fundamental set and configuration disagree on (m, n)");
    for (const auto& sigma : eps.parts) {
        int c = sigma.front();
        std::vector<std::vector<Rational>> rows;
        for (int j : sigma) {
            if (j == c) continue;
            CVector diff;
            for (size_t t = 0; t < lam.m; ++t)
                diff.push_back(lam.at(j)[t] - lam.at(c)[t]);
            rows.push_back(realify(diff));
        }
        if (sgn(det_rational(rows)) == 0) return {false, sigma};
    }
    return {true, std::nullopt};
}

inline bool hull_intersection_empty(const std::vector<IndexSet>& parts,
                                    const Configuration& lam) {
    if (parts.empty()) throw std::invalid_argument("no parts given");
    LPOutcome out = solve_max_slack(detail::mutual_hull_problem(parts, lam));
    return !(out.status == LPStatus::Optimal && sgn(out.optimal_t) > 0);
}

struct ImbricationResult {
    bool ok = false;
    std::optional<std::pair<Part, Part>> witness;
};

inline ImbricationResult imbrication(const FundamentalSet& eps, const Configuration& lam) {
    for (size_t i = 0; i < eps.parts.size(); ++i)
        for (size_t j = i + 1; j < eps.parts.size(); ++j)
            if (hull_intersection_empty({eps.parts[i], eps.parts[j]}, lam))
                return {false, std::make_pair(eps.parts[i], eps.parts[j])};
    return {true, std::nullopt};
}

inline bool point_membership(const HullQuery& q, const Configuration& lam) {
    LPOutcome out = solve_max_slack(detail::point_hull_problem(q.subset, lam, q.point));
    if (out.status != LPStatus::Optimal) return false;
    return q.mode == MembershipMode::Interior ? sgn(out.optimal_t) > 0
                                              : sgn(out.optimal_t) >= 0;
}

inline IndexSet full_index_set(const Configuration& lam) {
    IndexSet all(lam.n);
    for (size_t i = 0; i < lam.n; ++i) all[i] = static_cast<int>(i) + 1;
    return all;
}

// 0 in H(Lambda), closed.
inline bool siegel(const Configuration& lam) {
    std::vector<Rational> zero(2 * lam.m, Rational(0));
    return point_membership({full_index_set(lam), zero, MembershipMode::Closed}, lam);
}

struct WeakHyperbolicityResult {
    bool ok = false;
    std::optional<IndexSet> witness;
};

// 0 avoids the closed hull of every 2m-subset.
inline WeakHyperbolicityResult weak_hyperbolicity(const Configuration& lam) {
    std::vector<Rational> zero(2 * lam.m, Rational(0));
    WeakHyperbolicityResult res{true, std::nullopt};
    detail::for_each_subset(lam.n, 2 * lam.m, [&](const IndexSet& p) {
        if (point_membership({p, zero, MembershipMode::Closed}, lam)) {
            res = {false, p};
            return false;
        }
        return true;
    });
    return res;
}

inline bool is_admissible(const Configuration& lam) {
    return siegel(lam) && weak_hyperbolicity(lam).ok;
}

enum class SideKind { ConstantPositive, ConstantNegative, Mixed };

struct SameSideResult {
    SideKind kind = SideKind::Mixed;
    std::vector<int> signs;  // sign of s_j for j = 3..n
    IndexSet on_line;        // j with s_j = 0
};

// m = 1: signs of s_j = Im((Lambda_1 - Lambda_j) / (Lambda_2 - Lambda_1)),
// j = 3..n, relative to the line through Lambda_1 and Lambda_2.
inline SameSideResult same_side_test(const Configuration& lam) {
    if (lam.m != 1) throw std::invalid_argument("same_side_test needs m = 1");
    if (lam.n < 3) throw std::invalid_argument("same_side_test needs n >= 3");
    GaussianRational base = lam.at(2)[0] - lam.at(1)[0];
    if (base.is_zero())
        throw std::invalid_argument("degenerate line: first two points coincide");
    SameSideResult res;
    for (int j = 3; j <= static_cast<int>(lam.n); ++j) {
        GaussianRational q = (lam.at(1)[0] - lam.at(j)[0]) / base;
        int s = sgn(q.im);
        res.signs.push_back(s);
        if (s == 0) res.on_line.push_back(j);
    }
    bool all_pos = true, all_neg = true;
    for (int s : res.signs) {
        all_pos = all_pos && s > 0;
        all_neg = all_neg && s < 0;
    }
    res.kind = all_pos   ? SideKind::ConstantPositive
               : all_neg ? SideKind::ConstantNegative
                         : SideKind::Mixed;
    return res;
}

// Full combinatorial-plus-geometric report; good = studyable + replacer
// uniqueness + imbrication.
inline SystemReport check_system(const FundamentalSet& eps, const Configuration& lam) {
    SystemReport r;
    auto st = is_studyable(eps, lam);
    r.studyable = st.ok;
    r.studyable_witness = st.witness;
    r.per = satisfies_per(eps).ok;
    auto pu = satisfies_peur(eps);
    r.peur = pu.ok;
    r.peur_witness = pu.witness;
    auto im = imbrication(eps, lam);
    r.imbrication = im.ok;
    r.imbrication_witness = im.witness;
    r.indispensables = indispensable_coordinates(eps);
    r.k = r.indispensables.size();
    r.good = r.studyable && r.peur && r.imbrication;
    return r;
}

struct NecessaryScanResult {
    bool passed = false;
    std::optional<std::vector<Part>> witness;
};

// Subfamilies A of eps with |A| >= 3, size-ascending then lexicographic;
// an empty mutual interior certifies the system is not of LVM type. A pass
// is only the necessary condition, not a proof.
inline NecessaryScanResult lvm_necessary_scan(const FundamentalSet& eps,
                                              const Configuration& lam) {
    size_t e = eps.parts.size();
    NecessaryScanResult res{true, std::nullopt};
    for (size_t r = 3; r <= e && res.passed; ++r) {
        detail::for_each_subset(e, r, [&](const IndexSet& combo) {
            std::vector<IndexSet> parts;
            for (int ci : combo) parts.push_back(eps.parts[ci - 1]);
            if (hull_intersection_empty(parts, lam)) {
                res = {false, parts};
                return false;
            }
            return true;
        });
    }
    return res;
}

enum class LvmVerdictKind { IsLvmType, NotLvmType, Inconclusive };

struct LvmVerdict {
    LvmVerdictKind verdict = LvmVerdictKind::Inconclusive;
    std::optional<std::vector<Rational>> witness_point;
    std::optional<Part> mismatch;
    std::vector<Part> eps_prime;
    bool admissible = false;
    int attempts_used = 0;
    std::string detail;
};

struct LvmOptions {
    std::uint64_t seed = 0;
    int max_attempts = 64;
};

namespace detail {

inline bool point_clear_of_small_hulls(const std::vector<Rational>& p,
                                       const Configuration& lam) {
    bool clear = true;
    for_each_subset(lam.n, 2 * lam.m, [&](const IndexSet& sub) {
        if (point_membership({sub, p, MembershipMode::Closed}, lam)) {
            clear = false;
            return false;
        }
        return true;
    });
    return clear;
}

inline bool point_in_all_part_interiors(const std::vector<Rational>& p,
                                        const FundamentalSet& eps,
                                        const Configuration& lam) {
    for (const auto& sigma : eps.parts)
        if (!point_membership({sigma, p, MembershipMode::Interior}, lam)) return false;
    return true;
}

}  // namespace detail

// Decides LVM-type by locating a generic point of the common interior and
// comparing the family of (2m+1)-hulls around it with eps.
//
// Soundness: the boundary of any hull H(Lambda_sigma) lies inside the union
// of hulls of 2m-subsets, so a point avoiding every such hull sits in an
// open cell whose position relative to each hull is constant; eps is of LVM
// type iff that cell's hull family equals eps.
inline LvmVerdict lvm_recognize(const FundamentalSet& eps, const Configuration& lam,
                                const LvmOptions& opt = {}) {
    if (eps.m != lam.m || eps.n != lam.n)
        throw std::invalid_argument("fundamental set and configuration disagree on (m, n)");
    LvmVerdict v;
    v.admissible = is_admissible(lam);

    std::vector<IndexSet> all_parts(eps.parts.begin(), eps.parts.end());
    LPOutcome common = solve_max_slack(detail::mutual_hull_problem(all_parts, lam));
    if (common.status != LPStatus::Optimal || sgn(common.optimal_t) <= 0) {
        v.verdict = LvmVerdictKind::NotLvmType;
        v.detail = "the parts have no common interior point";
        return v;
    }

    size_t dim = 2 * lam.m;
    std::vector<Rational> p0(dim, Rational(0));
    {
        const Part& first = eps.parts[0];
        for (size_t j = 0; j < first.size(); ++j) {
            std::vector<Rational> rj = realify(lam.at(first[j]));
            for (size_t d = 0; d < dim; ++d) p0[d] += common.witness[j] * rj[d];
        }
    }

    std::mt19937_64 rng(opt.seed);
    std::optional<std::vector<Rational>> found;
    int attempt = 0;
    for (; attempt <= opt.max_attempts; ++attempt) {
        std::vector<Rational> p = p0;
        if (attempt > 0) {
            Integer denom = Integer(1) << (2 + attempt);
            Rational scale(Integer(1), denom);
            for (size_t d = 0; d < dim; ++d) {
                long c = draw_in_range(rng, -3, 3);
                p[d] += Rational(c) * scale;
            }
            if (!detail::point_in_all_part_interiors(p, eps, lam)) continue;
        }
        if (detail::point_clear_of_small_hulls(p, lam)) {
            found = p;
            break;
        }
    }
    v.attempts_used = attempt;
    if (!found) {
        v.verdict = LvmVerdictKind::Inconclusive;
        v.detail = "no generic interior point found within the attempt budget";
        return v;
    }

    std::vector<Part> eps_prime;
    detail::for_each_subset(lam.n, 2 * lam.m + 1, [&](const IndexSet& sigma) {
        if (point_membership({sigma, *found, MembershipMode::Interior}, lam))
            eps_prime.push_back(sigma);
        return true;
    });
    v.eps_prime = eps_prime;

    if (!detail::point_in_all_part_interiors(*found, eps, lam) ||
        !detail::point_clear_of_small_hulls(*found, lam))
        throw std::logic_error("recognition witness failed re-verification");

    if (eps_prime == eps.parts) {
        v.verdict = LvmVerdictKind::IsLvmType;
        v.witness_point = found;
        v.detail = v.admissible ? "hull family around the witness equals the input"
                                : "hull family around the witness equals the input "
                                  "(configuration is not admissible)";
        return v;
    }
    v.verdict = LvmVerdictKind::NotLvmType;
    for (const auto& s : eps_prime)
        if (std::find(eps.parts.begin(), eps.parts.end(), s) == eps.parts.end()) {
            v.mismatch = s;
            v.detail = "a hull family part around the witness is missing from the input";
            break;
        }
    if (!v.mismatch) {
        for (const auto& s : eps.parts)
            if (std::find(eps_prime.begin(), eps_prime.end(), s) == eps_prime.end()) {
                v.mismatch = s;
                v.detail = "an input part does not contain the witness in its interior";
                break;
            }
    }
    return v;
}

}  // namespace lvmb
