#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "../src/core/systems.hpp"
#include "helpers.hpp"

using namespace lvmb;

namespace {

const std::vector<Part> FAMILY_A = {
    {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}, {1, 2, 3, 4, 7}, {1, 2, 3, 5, 7}};

const std::vector<Part> FAMILY_B = {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6},
                                    {1, 2, 3, 5, 7}, {1, 2, 3, 4, 8},
                                    {1, 2, 3, 6, 7}, {1, 2, 3, 7, 8}};

IndexSet local_replacers(const FundamentalSet& eps, const Part& sigma, int k) {
    std::set<Part> all(eps.parts.begin(), eps.parts.end());
    IndexSet out;
    for (int kp : sigma) {
        std::set<int> s(sigma.begin(), sigma.end());
        s.erase(kp);
        s.insert(k);
        Part cand(s.begin(), s.end());
        if (cand.size() == sigma.size() && all.count(cand)) out.push_back(kp);
    }
    return out;
}

}  // namespace

TEST_CASE("fundamental set canonicalization and validation") {
    FundamentalSet eps = make_fundamental_set(1, 5, {{4, 2, 1}, {1, 2, 3}, {3, 2, 1}});
    REQUIRE(eps.parts.size() == 2);
    CHECK(eps.parts[0] == Part{1, 2, 3});
    CHECK(eps.parts[1] == Part{1, 2, 4});

    CHECK_THROWS_AS(make_fundamental_set(1, 5, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_fundamental_set(1, 5, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_fundamental_set(1, 5, {{1, 2, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(make_fundamental_set(1, 5, {{1, 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_fundamental_set(1, 5, {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_fundamental_set(2, 4, {{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("configuration validation") {
    CVector z2 = {GaussianRational(0, 0), GaussianRational(0, 0)};
    CHECK_THROWS_AS(make_configuration(2, {z2, z2, z2, z2}), std::invalid_argument);
    CHECK_THROWS_AS(make_configuration(2, {z2, z2, z2, z2, {GaussianRational(0, 0)}}),
                    std::invalid_argument);
    Configuration c = make_configuration(2, {z2, z2, z2, z2, z2});
    CHECK(c.n == 5);
    CHECK(c.at(1) == z2);
}

TEST_CASE("indispensable coordinates") {
    FundamentalSet a = make_fundamental_set(2, 7, FAMILY_A);
    CHECK(indispensable_coordinates(a) == IndexSet{1, 2, 3});

    auto hopf = hopf_fundamental_set(6);
    CHECK(indispensable_coordinates(hopf.eps) == IndexSet{1, 2});

    FundamentalSet d = make_fundamental_set(1, 7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}});
    CHECK(indispensable_coordinates(d) == IndexSet{1});
}

TEST_CASE("replacer existence") {
    SUBCASE("a lone part cannot replace outside indices") {
        FundamentalSet eps = make_fundamental_set(1, 5, {{1, 2, 3}});
        auto r = satisfies_per(eps);
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->sigma == Part{1, 2, 3});
        CHECK(r.witness->k >= 4);
        CHECK(r.witness->replacers.empty());
    }
    SUBCASE("the full three-part family at n=5 passes") {
        CHECK(satisfies_per(hopf_fundamental_set(5).eps).ok);
    }
    SUBCASE("a six-part family at m=2, n=8 passes") {
        CHECK(satisfies_per(make_fundamental_set(2, 8, FAMILY_B)).ok);
    }
}

TEST_CASE("replacer uniqueness") {
    SUBCASE("passes on known-good families") {
        CHECK(satisfies_peur(hopf_fundamental_set(6).eps).ok);
        CHECK(satisfies_peur(make_fundamental_set(2, 8, FAMILY_B)).ok);
        FundamentalSet e5 = make_fundamental_set(
            4, 11,
            {{1, 2, 3, 4, 5, 6, 7, 8, 9},
             {1, 2, 3, 4, 5, 7, 8, 9, 10},
             {1, 2, 3, 4, 5, 6, 8, 9, 11},
             {1, 2, 3, 4, 5, 8, 9, 10, 11}});
        CHECK(satisfies_peur(e5).ok);
    }
    SUBCASE("two replacers are reported") {
        FundamentalSet eps = make_fundamental_set(
            2, 6, {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}});
        auto r = satisfies_peur(eps);
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->replacers.size() == 2);
        auto again = local_replacers(eps, r.witness->sigma, r.witness->k);
        CHECK(again == r.witness->replacers);
    }
    SUBCASE("uniqueness implies existence") {
        FundamentalSet eps = make_fundamental_set(1, 5, {{1, 2, 3}});
        CHECK_FALSE(satisfies_peur(eps).ok);
    }
}

TEST_CASE("residual set") {
    FundamentalSet a = make_fundamental_set(2, 7, FAMILY_A);
    auto res = residual_set(a);
    REQUIRE(res.size() == 4);
    CHECK(res[0] == Part{4, 6});
    CHECK(res[1] == Part{4, 7});
    CHECK(res[2] == Part{5, 6});
    CHECK(res[3] == Part{5, 7});

    auto hopf = hopf_fundamental_set(6);
    auto hres = residual_set(hopf.eps);
    REQUIRE(hres.size() == 4);
    for (size_t i = 0; i < 4; ++i) CHECK(hres[i] == Part{static_cast<int>(i) + 3});

    FundamentalSet bad = make_fundamental_set(1, 5, {{1, 3, 4}, {1, 3, 5}});
    CHECK_THROWS_WITH_AS(residual_set(bad),
                         "residual_set: index 2 is not indispensable",
                         std::invalid_argument);
}

TEST_CASE("residual set is injective whenever defined") {
    for (size_t m : {1ul, 2ul}) {
        for (size_t n = 2 * m + 2; n <= 8; ++n) {
            for (const auto& eps : lvmb_test::enumerate_core_peur_sets(m, n)) {
                auto ind = indispensable_coordinates(eps);
                bool core_inside = true;
                for (int j = 1; j <= static_cast<int>(m) + 1; ++j)
                    core_inside = core_inside &&
                                  std::binary_search(ind.begin(), ind.end(), j);
                if (!core_inside) continue;
                auto res = residual_set(eps);
                std::set<Part> uniq(res.begin(), res.end());
                CHECK(uniq.size() == eps.parts.size());
            }
        }
    }
}

TEST_CASE("cardinality bound") {
    CHECK(cardinality_bound(4, 1) == 2);
    CHECK(cardinality_bound(5, 1) == 3);
    CHECK(cardinality_bound(6, 1) == 4);
    CHECK(cardinality_bound(7, 1) == 5);
    CHECK(cardinality_bound(8, 1) == 6);
    CHECK(cardinality_bound(6, 2) == 2);
    CHECK(cardinality_bound(7, 2) == 5);
    CHECK(cardinality_bound(8, 2) == 9);
    CHECK(cardinality_bound(8, 3) == 2);
    CHECK(cardinality_bound(9, 3) == 8);
    CHECK(cardinality_bound(10, 4) == 2);
    CHECK_THROWS_AS(cardinality_bound(4, 2), std::invalid_argument);
}

TEST_CASE("hopf fundamental sets") {
    auto h5 = hopf_fundamental_set(5);
    CHECK_FALSE(h5.degenerate);
    REQUIRE(h5.eps.parts.size() == 3);
    CHECK(h5.eps.parts[0] == Part{1, 2, 3});
    CHECK(h5.eps.parts[1] == Part{1, 2, 4});
    CHECK(h5.eps.parts[2] == Part{1, 2, 5});
    CHECK(satisfies_peur(h5.eps).ok);

    auto h3 = hopf_fundamental_set(3);
    CHECK(h3.degenerate);
    CHECK(h3.eps.parts == std::vector<Part>{{1, 2, 3}});
    CHECK(satisfies_peur(h3.eps).ok);

    auto h4 = hopf_fundamental_set(4);
    CHECK(h4.eps.parts == std::vector<Part>{{1, 2, 3}, {1, 2, 4}});

    CHECK_THROWS_AS(hopf_fundamental_set(2), std::invalid_argument);
}

TEST_CASE("exhaustive enumeration stays under the bound") {
    for (size_t m : {1ul, 2ul}) {
        for (size_t n = 2 * m + 2; n <= 8; ++n) {
            auto sets = lvmb_test::enumerate_core_peur_sets(m, n);
            size_t best = 0;
            for (const auto& eps : sets) best = std::max(best, eps.parts.size());
            CHECK(static_cast<long long>(best) <= cardinality_bound(n, m));
            if (m == 1) {
                // Only the full family {(1,2,j)} survives, and it meets the bound.
                CHECK(sets.size() == 1);
                CHECK(best == n - 2);
            }
            if (n == 2 * m + 2) {
                for (const auto& eps : sets) CHECK(eps.parts.size() <= 2);
            }
        }
    }
    CHECK(lvmb_test::enumerate_core_peur_sets(2, 6).size() == 3);
    CHECK(lvmb_test::enumerate_core_peur_sets(2, 7).size() == 7);
    CHECK(lvmb_test::enumerate_core_peur_sets(2, 8).size() == 15);
}

TEST_CASE("the replacer map is a function on uniqueness-passing sets") {
    for (size_t n = 4; n <= 7; ++n) {
        for (const auto& eps : lvmb_test::enumerate_core_peur_sets(1, n)) {
            for (const auto& sigma : eps.parts)
                for (int k = 1; k <= static_cast<int>(eps.n); ++k)
                    CHECK(local_replacers(eps, sigma, k).size() == 1);
        }
    }
    for (const auto& eps : lvmb_test::enumerate_core_peur_sets(2, 7)) {
        for (const auto& sigma : eps.parts)
            for (int k = 1; k <= static_cast<int>(eps.n); ++k)
                CHECK(local_replacers(eps, sigma, k).size() == 1);
    }
}
