#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conditions.hpp"
#include "documents.hpp"
#include "geometry.hpp"
#include "systems.hpp"

namespace lvmb {

struct FixtureExpect {
    bool good = true;
    size_t k = 0;
    IndexSet contracting;  // for the stored basis, general mode
    std::optional<Outcome> outcome;
    std::optional<PBracket> p;
    std::optional<LvmVerdictKind> lvm;
};

struct Fixture {
    std::string name;
    FundamentalSet eps;
    Configuration lam;
    std::optional<IntegerBasis> basis;
    FixtureExpect expect;
};

namespace detail {

inline GaussianRational G(long re, long im = 0) { return GaussianRational(re, im); }

inline std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> fx;

    {
        Fixture f;
        f.name = "m2n7";
        f.eps = make_fundamental_set(
            2, 7, {{1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}, {1, 2, 3, 4, 7}, {1, 2, 3, 5, 7}});
        f.lam = make_configuration(
            2, {{G(0), G(0, -1)},
                {G(-1), G(0)},
                {G(0), G(-1)},
                {G(1), G(0, 1)},
                {G(1), G(0, 1)},
                {G(-1, -1), G(1)},
                {G(-1, -1), G(1)}});
        f.basis = make_integer_basis({{0, -2}, {1, 0}});
        f.expect = {true, 3, {1}, Outcome::NotLck, PBracket{1, 1},
                    LvmVerdictKind::IsLvmType};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "m2n8";
        f.eps = make_fundamental_set(2, 8,
                                     {{1, 2, 3, 4, 5},
                                      {1, 2, 3, 4, 6},
                                      {1, 2, 3, 5, 7},
                                      {1, 2, 3, 4, 8},
                                      {1, 2, 3, 6, 7},
                                      {1, 2, 3, 7, 8}});
        f.lam = make_configuration(
            2, {{G(0, -2), G(0, -1)},
                {G(1, 1), G(-2)},
                {G(-2, -1), G(-1, -2)},
                {G(-2, 1), G(-2, -2)},
                {G(-1, 1), G(1, -2)},
                {G(-1, 1), G(-2, -1)},
                {G(-1, 1), G(-2, -2)},
                {G(0, 1), G(1, 1)}});
        f.basis = make_integer_basis({{-1, 0}, {2, -1}});
        f.expect = {true, 3, {2}, Outcome::NotLck, PBracket{1, 1}, std::nullopt};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "m3n9";
        f.eps = make_fundamental_set(3, 9,
                                     {{1, 2, 3, 4, 5, 6, 7},
                                      {1, 2, 3, 4, 5, 6, 9},
                                      {1, 2, 3, 4, 5, 8, 9},
                                      {1, 2, 3, 4, 6, 7, 8},
                                      {1, 2, 3, 4, 7, 8, 9}});
        f.lam = make_configuration(
            3, {{G(1, 1), G(1, -2), G(0)},
                {G(1), G(1, 1), G(1, -2)},
                {G(0, 1), G(1, 1), G(-1, 1)},
                {G(1), G(1, -2), G(-1, -1)},
                {G(-1, 1), G(-2, 1), G(1)},
                {G(0), G(0, -2), G(1)},
                {G(0, -2), G(-1), G(-1, -2)},
                {G(-2, -1), G(-1, -1), G(-2, -2)},
                {G(0, -2), G(-1, -1), G(0, 1)}});
        f.basis = make_integer_basis({{-2, 0, 1}, {0, 0, -2}, {1, -1, -2}});
        f.expect = {true, 4, {2, 3}, Outcome::NotLck, PBracket{1, 1}, std::nullopt};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "m3n10";
        f.eps = make_fundamental_set(3, 10,
                                     {{1, 2, 3, 4, 5, 6, 7},
                                      {1, 2, 3, 4, 6, 7, 8},
                                      {1, 2, 3, 4, 5, 7, 9},
                                      {1, 2, 3, 4, 7, 8, 9},
                                      {1, 2, 3, 4, 5, 6, 10},
                                      {1, 2, 3, 4, 6, 8, 10},
                                      {1, 2, 3, 4, 5, 9, 10},
                                      {1, 2, 3, 4, 8, 9, 10}});
        f.lam = make_configuration(
            3, {{G(-1, 2), G(2, 2), G(1)},
                {G(-2, -1), G(2), G(1, -2)},
                {G(1), G(2, -2), G(2, -1)},
                {G(2), G(1), G(2, -2)},
                {G(-2), G(-1, -2), G(1)},
                {G(-2, -2), G(-2), G(1, -1)},
                {G(0, -1), G(-2), G(-1, 1)},
                {G(0), G(-2, -2), G(-1, 2)},
                {G(-1, -2), G(-2, 1), G(2)},
                {G(2, -2), G(-2), G(-2, -2)}});
        f.basis = make_integer_basis({{0, -2, -2}, {1, -1, -2}, {0, 0, 1}});
        f.expect = {true, 4, {1, 2}, Outcome::NotLck, PBracket{1, 1}, std::nullopt};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "m4n11";
        f.eps = make_fundamental_set(4, 11,
                                     {{1, 2, 3, 4, 5, 6, 7, 8, 9},
                                      {1, 2, 3, 4, 5, 7, 8, 9, 10},
                                      {1, 2, 3, 4, 5, 6, 8, 9, 11},
                                      {1, 2, 3, 4, 5, 8, 9, 10, 11}});
        f.lam = make_configuration(
            4, {{G(-1, -1), G(-1, -2), G(1), G(-2, -1)},
                {G(-1), G(1, -1), G(0, 1), G(1, -1)},
                {G(-2), G(0, -1), G(0, -1), G(0, -1)},
                {G(-2, -2), G(-2, -2), G(0), G(0)},
                {G(-2, 1), G(-2), G(-1, 1), G(-1, -1)},
                {G(0, -1), G(0, 1), G(0, -2), G(0, -2)},
                {G(-1, -1), G(0, -2), G(-1, -1), G(0, -2)},
                {G(-2, -2), G(1, 1), G(1, -1), G(-2, -2)},
                {G(-2, 1), G(-1, -1), G(-2), G(-1, -2)},
                {G(1), G(1, -2), G(-1), G(0, -1)},
                {G(1), G(0, -2), G(1, -1), G(0, -2)}});
        f.basis = make_integer_basis(
            {{-1, 0, 0, 0}, {0, -1, 0, -1}, {0, 0, -1, -1}, {1, 0, 0, -1}});
        f.expect = {true, 7, {2, 3, 4}, Outcome::NotLck, PBracket{1, 1}, std::nullopt};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "hopf-m1";
        f.eps = make_fundamental_set(1, 4, {{1, 2, 3}, {1, 2, 4}});
        f.lam = make_configuration(1, {{G(0)}, {G(1)}, {G(0, 1)}, {G(1, 1)}});
        f.basis = make_integer_basis({{1}});
        f.expect = {true, 2, {1}, Outcome::DiagonalHopf, std::nullopt,
                    LvmVerdictKind::IsLvmType};
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "k222-not-lvm";
        f.eps = make_fundamental_set(1, 6,
                                     {{1, 3, 5},
                                      {1, 3, 6},
                                      {1, 4, 5},
                                      {1, 4, 6},
                                      {2, 3, 5},
                                      {2, 3, 6},
                                      {2, 4, 5},
                                      {2, 4, 6}});
        f.lam = make_configuration(
            1, {{G(4, 5)}, {G(-2, 1)}, {G(5, -1)}, {G(1, 1)}, {G(-5, -6)}, {G(-2)}});
        f.basis = std::nullopt;
        f.expect = {true, 0, {}, Outcome::NotLck_SimplyConnected, std::nullopt,
                    LvmVerdictKind::NotLvmType};
        fx.push_back(std::move(f));
    }
    return fx;
}

}  // namespace detail

inline const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> fx = detail::build_fixtures();
    return fx;
}

inline const Fixture& fixture(const std::string& name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown fixture: " + name);
}

inline SystemDocument fixture_document(const Fixture& f) {
    SystemDocument doc;
    doc.eps = f.eps;
    doc.lam = f.lam;
    if (f.basis) doc.basis = f.basis->vectors;
    doc.name = f.name;
    return doc;
}

}  // namespace lvmb
