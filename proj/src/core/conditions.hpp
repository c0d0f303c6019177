#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "linalg.hpp"
#include "systems.hpp"

namespace lvmb {

enum class BasisMode { Strict, General };

// B = (f_1, ..., f_m): integer vectors spanning the lattice of deck
// transformations. Strict mode demands a true Z^m basis (|det| = 1);
// general mode only rejects singular families.
struct IntegerBasis {
    size_t m = 0;
    std::vector<std::vector<long>> vectors;
    Integer det;
    BasisMode mode = BasisMode::General;
};

inline IntegerBasis make_integer_basis(std::vector<std::vector<long>> fs,
                                       BasisMode mode = BasisMode::General) {
    if (fs.empty()) throw std::invalid_argument("empty basis");
    size_t m = fs.size();
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : fs) {
        if (f.size() != m) throw std::invalid_argument("basis vector of wrong length");
        rows.emplace_back(f.begin(), f.end());
    }
    Rational d = det_rational(rows);
    Integer det = d.get_num();
    if (sgn(det) == 0) throw std::invalid_argument("basis determinant is zero");
    if (mode == BasisMode::Strict && abs(det) != 1)
        throw std::invalid_argument("strict mode requires |det| = 1, got " + det.get_str());
    IntegerBasis b;
    b.m = m;
    b.vectors = std::move(fs);
    b.det = det;
    b.mode = mode;
    return b;
}

// A has rows Lambda_{j+1} - Lambda_1 for j = 1..m; invertible whenever
// 1..m+1 carry an affine frame.
inline CMatrix matrix_A(const Configuration& lam) {
    std::vector<CVector> rows;
    for (size_t j = 1; j <= lam.m; ++j) {
        CVector diff;
        for (size_t t = 0; t < lam.m; ++t)
            diff.push_back(lam.at(static_cast<int>(j) + 1)[t] - lam.at(1)[t]);
        rows.push_back(std::move(diff));
    }
    CMatrix a = CMatrix::from_rows(rows);
    if (det(a).is_zero())
        throw std::domain_error(
            "matrix A is singular: coordinates 1..m+1 are affinely dependent");
    return a;
}

// Gamma(f)_r = exp(2 i pi w) with w = <Lambda_r - Lambda_1, A^{-1} f>; the
// modulus question |Gamma| < 1 is exactly im(w) > 0.
struct ExponentWitness {
    int r = 0;
    GaussianRational w;
};

namespace detail {

inline GaussianRational exponent_w(const CMatrix& a_inv, const std::vector<long>& f,
                                   int r, const Configuration& lam) {
    CVector fv;
    for (long c : f) fv.push_back(GaussianRational(c, 0));
    CVector y = a_inv * fv;
    GaussianRational w;
    for (size_t j = 0; j < lam.m; ++j)
        w = w + (lam.at(r)[j] - lam.at(1)[j]) * y[j];
    return w;
}

}  // namespace detail

inline ExponentWitness exponent_witness(const std::vector<long>& f, int r,
                                        const Configuration& lam) {
    if (f.size() != lam.m) throw std::invalid_argument("vector of wrong length");
    if (r < static_cast<int>(lam.m) + 2 || r > static_cast<int>(lam.n))
        throw std::invalid_argument("r outside {m+2..n}");
    CMatrix a_inv = inverse(matrix_A(lam));
    return {r, detail::exponent_w(a_inv, f, r, lam)};
}

// Floating modulus |exp(2 i pi w)| = exp(-2 pi im(w)), for reports only.
inline double gamma_modulus_float(const GaussianRational& w) {
    return std::exp(-2.0 * M_PI * to_double(w.im));
}

struct ConditionHReport {
    IntegerBasis basis;
    BasisMode mode = BasisMode::General;
    IndexSet contracting_js;
    std::vector<std::vector<ExponentWitness>> witnesses;  // [j][r - (m+2)]
    size_t l = 0;
    size_t cover_rank = 0;
    bool holds = false;
};

// Condition (H): some f_j has |Gamma(f_j)_r| < 1 for every r in {m+2..n}.
// Verifies the good-system and indispensability preconditions before
// evaluating the witness table.
inline ConditionHReport condition_h(const IntegerBasis& basis, const FundamentalSet& eps,
                                    const Configuration& lam) {
    if (basis.m != lam.m) throw std::invalid_argument("basis rank differs from m");
    IndexSet ind = indispensable_coordinates(eps);
    for (int j = 1; j <= static_cast<int>(lam.m) + 1; ++j)
        if (!std::binary_search(ind.begin(), ind.end(), j))
            throw std::invalid_argument("condition (H) precondition: index " +
                                        std::to_string(j) + " is not indispensable");
    SystemReport sys = check_system(eps, lam);
    if (!sys.good) {
        std::string why = !sys.studyable    ? "not studyable"
                          : !sys.peur       ? "replacer uniqueness fails"
                                            : "imbrication fails";
        throw std::invalid_argument("condition (H) precondition: not a good system (" +
                                    why + ")");
    }

    CMatrix a_inv = inverse(matrix_A(lam));
    ConditionHReport rep;
    rep.basis = basis;
    rep.mode = basis.mode;
    for (size_t j = 0; j < lam.m; ++j) {
        std::vector<ExponentWitness> row;
        bool contracting = true;
        for (int r = static_cast<int>(lam.m) + 2; r <= static_cast<int>(lam.n); ++r) {
            GaussianRational w = detail::exponent_w(a_inv, basis.vectors[j], r, lam);
            contracting = contracting && sgn(w.im) > 0;
            row.push_back({r, w});
        }
        rep.witnesses.push_back(std::move(row));
        if (contracting) rep.contracting_js.push_back(static_cast<int>(j) + 1);
    }
    rep.l = rep.contracting_js.size();
    rep.cover_rank = lam.m - rep.l;
    rep.holds = !rep.contracting_js.empty();
    return rep;
}

struct ContractionGenerators {
    int j = 0;
    std::vector<std::complex<double>> diagonal;  // exp(2 i pi w_r), floating
    std::vector<ExponentWitness> witnesses;      // exact exponents
    bool contracting = false;
};

// Diagonal of the generator alpha_j^B = Diag(Gamma(f_j)_{m+2..n}); the
// floating entries accompany the exact exponents, never replace them.
inline ContractionGenerators contraction_generators(const IntegerBasis& basis, int j,
                                                    const FundamentalSet& eps,
                                                    const Configuration& lam) {
    ConditionHReport rep = condition_h(basis, eps, lam);
    if (j < 1 || j > static_cast<int>(lam.m))
        throw std::invalid_argument("generator index outside {1..m}");
    ContractionGenerators out;
    out.j = j;
    out.witnesses = rep.witnesses[static_cast<size_t>(j) - 1];
    out.contracting = std::binary_search(rep.contracting_js.begin(),
                                         rep.contracting_js.end(), j);
    for (const auto& wit : out.witnesses) {
        double mod = gamma_modulus_float(wit.w);
        double arg = 2.0 * M_PI * to_double(wit.w.re);
        out.diagonal.emplace_back(mod * std::cos(arg), mod * std::sin(arg));
    }
    return out;
}

struct ConditionKWitness {
    bool holds = true;
    Integer scale;  // Phi = scale * Identity maps every Lambda_j into Z[i]^m
};

// Every representable configuration is rational, so the scalar automorphism
// D * Id with D the lcm of all denominators certifies condition (K).
inline ConditionKWitness condition_k(const Configuration& lam) {
    Integer d(1);
    for (const auto& v : lam.vectors)
        for (const auto& z : v) {
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), z.re.get_den().get_mpz_t());
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), z.im.get_den().get_mpz_t());
        }
    return {true, d};
}

enum class Outcome {
    NotLck_SimplyConnected,
    DiagonalHopf,
    NotLckWithPotential_LckOpen,
    NotLck,
};

inline std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::NotLck_SimplyConnected: return "not-lck-simply-connected";
        case Outcome::DiagonalHopf: return "diagonal-hopf";
        case Outcome::NotLckWithPotential_LckOpen: return "not-lck-with-potential-lck-open";
        case Outcome::NotLck: return "not-lck";
    }
    return "?";
}

// The classification table as a pure function of (m, k, condition_k).
inline Outcome classify_outcome(size_t m, size_t k, bool cond_k) {
    if (m == 1) {
        if (k <= 1) return Outcome::NotLck_SimplyConnected;
        if (k == 2) return Outcome::DiagonalHopf;
        throw std::invalid_argument(
            "impossible data: m = 1 with k >= 3 cannot come from a good system");
    }
    return cond_k ? Outcome::NotLck : Outcome::NotLckWithPotential_LckOpen;
}

struct Classification {
    size_t m = 0;
    size_t n = 0;
    size_t k = 0;
    bool condition_k = false;
    Outcome outcome = Outcome::NotLck;
    std::string notes;
};

inline Classification classify(const FundamentalSet& eps, const Configuration& lam) {
    if (eps.m != lam.m || eps.n != lam.n)
        throw std::invalid_argument("fundamental set and configuration disagree on (m, n)");
    if (lam.n <= 2 * lam.m + 1)
        throw std::invalid_argument("classification needs n > 2m+1");
    Classification c;
    c.m = lam.m;
    c.n = lam.n;
    c.k = indispensable_coordinates(eps).size();
    c.condition_k = condition_k(lam).holds;
    c.outcome = classify_outcome(c.m, c.k, c.condition_k);
    switch (c.outcome) {
        case Outcome::NotLck_SimplyConnected:
            c.notes = "simply connected, hence no lck metric";
            break;
        case Outcome::DiagonalHopf:
            c.notes = "diagonal Hopf manifold; lck";
            break;
        case Outcome::NotLck:
            c.notes = "no lck metric";
            break;
        case Outcome::NotLckWithPotential_LckOpen:
            c.notes = "no lck metric with potential; plain lck undecided";
            break;
    }
    return c;
}

struct PBracket {
    int lower = 0;
    int upper = 0;
};

// p_upper = m - l from the subfamily cover; p_lower = 1 exactly when the
// classification already rules out lck metrics.
inline PBracket p_estimate(const ConditionHReport& rep, const Classification& cls) {
    if (!rep.holds)
        throw std::invalid_argument("p estimate needs condition (H) to hold");
    PBracket p;
    p.upper = static_cast<int>(rep.cover_rank);
    p.lower = (cls.outcome == Outcome::NotLck ||
               cls.outcome == Outcome::NotLck_SimplyConnected)
                  ? 1
                  : 0;
    return p;
}

}  // namespace lvmb
