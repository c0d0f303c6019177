#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace lvmb {

// Exact feasibility LP in max-slack form:
//
//   maximize t  subject to  sum_j rows[i][j] * x_j = rhs[i],
//                           x_j >= t for all j,  t <= 1.
//
// The t <= 1 cap makes the problem bounded; the optimum t* answers strict
// and non-strict feasibility questions at once (t* > 0 vs t* >= 0).
struct LinearFeasibilityProblem {
    size_t num_vars = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
};

enum class LPStatus { Optimal, Infeasible };

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rational optimal_t;
    std::vector<Rational> witness;  // x achieving optimal_t (Optimal only)
    // Optimal: indices of the final basic columns in the solved standard form.
    std::vector<size_t> basis;
    // Infeasible: lambda with lambda^T rows = 0 and lambda^T rhs = 1.
    std::vector<Rational> farkas;
};

namespace detail {

// Gaussian elimination on [rows | rhs | I]. Returns a Farkas certificate if
// the equality system is inconsistent, std::nullopt otherwise.
inline std::optional<std::vector<Rational>> farkas_certificate(
    const LinearFeasibilityProblem& p) {
    size_t nr = p.rows.size(), nc = p.num_vars;
    std::vector<std::vector<Rational>> aug(nr);
    for (size_t i = 0; i < nr; ++i) {
        aug[i] = p.rows[i];
        aug[i].push_back(p.rhs[i]);
        for (size_t j = 0; j < nr; ++j) aug[i].push_back(Rational(i == j ? 1 : 0));
    }
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t piv = r;
        while (piv < nr && sgn(aug[piv][c]) == 0) ++piv;
        if (piv == nr) continue;
        std::swap(aug[r], aug[piv]);
        for (size_t i = 0; i < nr; ++i) {
            if (i == r || sgn(aug[i][c]) == 0) continue;
            Rational f = aug[i][c] / aug[r][c];
            for (size_t j = c; j < aug[i].size(); ++j) aug[i][j] -= f * aug[r][j];
        }
        ++r;
    }
    for (size_t i = r; i < nr; ++i) {
        if (sgn(aug[i][nc]) != 0) {
            Rational beta = aug[i][nc];
            std::vector<Rational> lambda(nr);
            for (size_t j = 0; j < nr; ++j) lambda[j] = aug[i][nc + 1 + j] / beta;
            return lambda;
        }
    }
    return std::nullopt;
}

// Dense tableau simplex, Bland's least-index rule throughout.
class Tableau {
  public:
    Tableau(std::vector<std::vector<Rational>> t, std::vector<size_t> basis)
        : t_(std::move(t)), basis_(std::move(basis)) {}

    // Minimizes cost over the allowed column range [0, allowed). The cost
    // vector spans all columns. Terminates by Bland's rule.
    void minimize(const std::vector<Rational>& cost, size_t allowed) {
        for (;;) {
            size_t enter = npos;
            for (size_t j = 0; j < allowed; ++j) {
                if (is_basic(j)) continue;
                Rational red = cost[j];
                for (size_t i = 0; i < t_.size(); ++i) {
                    if (sgn(t_[i][j]) != 0 && sgn(cost[basis_[i]]) != 0)
                        red -= cost[basis_[i]] * t_[i][j];
                }
                if (sgn(red) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == npos) return;
            size_t leave = npos;
            Rational best;
            for (size_t i = 0; i < t_.size(); ++i) {
                if (sgn(t_[i][enter]) <= 0) continue;
                Rational ratio = back(t_[i]) / t_[i][enter];
                if (leave == npos || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == npos)
                throw std::logic_error("unbounded LP in bounded formulation");
            pivot(leave, enter);
        }
    }

    void pivot(size_t row, size_t col) {
        Rational p = t_[row][col];
        for (auto& v : t_[row]) v /= p;
        for (size_t i = 0; i < t_.size(); ++i) {
            if (i == row || sgn(t_[i][col]) == 0) continue;
            Rational f = t_[i][col];
            for (size_t j = 0; j < t_[i].size(); ++j) t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    bool is_basic(size_t col) const {
        for (size_t b : basis_)
            if (b == col) return true;
        return false;
    }

    void drop_rows(const std::vector<bool>& keep) {
        std::vector<std::vector<Rational>> t2;
        std::vector<size_t> b2;
        for (size_t i = 0; i < t_.size(); ++i)
            if (keep[i]) {
                t2.push_back(std::move(t_[i]));
                b2.push_back(basis_[i]);
            }
        t_ = std::move(t2);
        basis_ = std::move(b2);
    }

    static const Rational& back(const std::vector<Rational>& row) {
        return row.back();
    }

    std::vector<std::vector<Rational>>& data() { return t_; }
    std::vector<size_t>& basis() { return basis_; }

    static constexpr size_t npos = static_cast<size_t>(-1);

  private:
    std::vector<std::vector<Rational>> t_;
    std::vector<size_t> basis_;
};

}  // namespace detail

// Exact solver. Substitution y_j = x_j - t >= 0, s = 1 - t >= 0 turns the
// problem into a standard-form minimization of s; two-phase simplex with
// Bland's rule solves it deterministically.
inline LPOutcome solve_max_slack(const LinearFeasibilityProblem& p) {
    if (p.num_vars == 0) throw std::invalid_argument("LP with no variables");
    if (p.rows.size() != p.rhs.size())
        throw std::invalid_argument("LP row/rhs count mismatch");
    for (const auto& row : p.rows)
        if (row.size() != p.num_vars)
            throw std::invalid_argument("LP row width mismatch");

    LPOutcome out;
    if (auto lam = detail::farkas_certificate(p)) {
        out.status = LPStatus::Infeasible;
        out.farkas = std::move(*lam);
        Rational dot_b(0);
        std::vector<Rational> dot_a(p.num_vars, Rational(0));
        for (size_t i = 0; i < p.rows.size(); ++i) {
            dot_b += out.farkas[i] * p.rhs[i];
            for (size_t j = 0; j < p.num_vars; ++j)
                dot_a[j] += out.farkas[i] * p.rows[i][j];
        }
        if (dot_b != 1)
            throw std::logic_error("farkas certificate failed rhs check");
        for (const auto& v : dot_a)
            if (sgn(v) != 0)
                throw std::logic_error("farkas certificate failed row check");
        return out;
    }

    size_t N = p.num_vars;
    size_t nrow = p.rows.size();
    size_t nv = N + 1;            // y_0..y_{N-1}, s
    size_t ncols = nv + nrow;     // plus artificials
    std::vector<std::vector<Rational>> t(nrow, std::vector<Rational>(ncols + 1, Rational(0)));
    for (size_t i = 0; i < nrow; ++i) {
        Rational rowsum(0);
        for (size_t j = 0; j < N; ++j) rowsum += p.rows[i][j];
        Rational r = p.rhs[i] - rowsum;
        int flip = sgn(r) < 0 ? -1 : 1;
        for (size_t j = 0; j < N; ++j) t[i][j] = flip * p.rows[i][j];
        t[i][N] = flip * -rowsum;
        t[i][nv + i] = 1;
        t[i][ncols] = flip * r;
    }
    std::vector<size_t> basis(nrow);
    for (size_t i = 0; i < nrow; ++i) basis[i] = nv + i;
    detail::Tableau tab(std::move(t), std::move(basis));

    std::vector<Rational> cost1(ncols, Rational(0));
    for (size_t i = 0; i < nrow; ++i) cost1[nv + i] = 1;
    tab.minimize(cost1, ncols);
    {
        Rational obj(0);
        for (size_t i = 0; i < tab.basis().size(); ++i)
            if (tab.basis()[i] >= nv) obj += tab.data()[i].back();
        if (sgn(obj) != 0)
            throw std::logic_error("phase-1 residual after consistency check");
    }
    // Drive leftover artificials out of the basis; drop redundant rows.
    {
        std::vector<bool> keep(tab.basis().size(), true);
        for (size_t i = 0; i < tab.basis().size(); ++i) {
            if (tab.basis()[i] < nv) continue;
            size_t c = detail::Tableau::npos;
            for (size_t j = 0; j < nv; ++j)
                if (sgn(tab.data()[i][j]) != 0) {
                    c = j;
                    break;
                }
            if (c == detail::Tableau::npos)
                keep[i] = false;
            else
                tab.pivot(i, c);
        }
        tab.drop_rows(keep);
    }

    std::vector<Rational> cost2(ncols, Rational(0));
    cost2[N] = 1;
    tab.minimize(cost2, nv);

    std::vector<Rational> vals(nv, Rational(0));
    for (size_t i = 0; i < tab.basis().size(); ++i)
        if (tab.basis()[i] < nv) vals[tab.basis()[i]] = tab.data()[i].back();
    Rational tstar = Rational(1) - vals[N];
    out.status = LPStatus::Optimal;
    out.optimal_t = tstar;
    out.witness.resize(N);
    for (size_t j = 0; j < N; ++j) out.witness[j] = vals[j] + tstar;
    out.basis = tab.basis();

    for (size_t i = 0; i < p.rows.size(); ++i) {
        Rational acc(0);
        for (size_t j = 0; j < N; ++j) acc += p.rows[i][j] * out.witness[j];
        if (acc != p.rhs[i]) throw std::logic_error("LP witness violates equality row");
    }
    for (const auto& x : out.witness)
        if (x < tstar) throw std::logic_error("LP witness violates slack bound");
    if (tstar > 1) throw std::logic_error("LP slack above cap");
    return out;
}

}  // namespace lvmb
