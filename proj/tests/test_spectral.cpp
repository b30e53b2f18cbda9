#include "doctest.h"

#include "plateau/field_core.hpp"
#include "plateau/function_zoo.hpp"
#include "plateau/oracles.hpp"
#include "plateau/spectral.hpp"

#include <random>

using namespace plateau;

TEST_CASE("fast transform matches the direct sum") {
    std::mt19937_64 rng(1);
    for (auto [p, n] : std::vector<std::pair<int, int>>{{3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
        PFunction f(p, n);
        for (auto& v : f.table) v = static_cast<std::uint8_t>(rng() % p);
        CHECK(walsh_transform(f) == walsh_transform_naive(f));
        CHECK(walsh_transform(f, 1) == walsh_transform(f, 4));
    }
}

TEST_CASE("x1^2+x2^2 over F_3 is bent of type (-)") {
    auto prof = classify_plateaued(polynomial_function("x1^2+x2^2", 3, 2));
    REQUIRE(prof);
    CHECK(prof->s == 0);
    CHECK(prof->eps0 == -1);
    CHECK(prof->weakly_regular);
    CHECK(prof->k == 0);
}

TEST_CASE("quadratic forms: plateau index and type") {
    for (int p : {3, 5, 7})
        for (int n = 2; n <= 4; ++n)
            for (int s = 0; s <= n - 1; ++s) {
                std::vector<int> c(n, 0);
                for (int i = 0; i < n - s; ++i) c[i] = 1;
                auto prof = classify_plateaued(quadratic_form(p, c));
                REQUIRE(prof);
                CHECK(prof->s == s);
                CHECK(prof->supp_size == ipow(p, n - s));
                // eta((-1)^{n-s}) decides the sign for an all-ones form
                PrimeField F(p);
                const int r = n - s;
                int expect = 1;
                if (r % 2 == 0) expect = F.eta(r / 2 % 2 ? p - 1 : 1);
                else expect = F.eta((r - 1) / 2 % 2 ? p - 1 : 1);
                CHECK(prof->eps0 == expect);
            }
}

TEST_CASE("non-plateaued input is rejected") {
    PFunction g = polynomial_function("x1^4", 5, 2);
    CHECK_FALSE(classify_plateaued(g));
}

TEST_CASE("reconstruction and the double dual") {
    for (int ex : {2}) {
        PFunction f = example_function(ex);
        auto prof = classify_plateaued(f);
        REQUIRE(prof);
        CHECK(reconstruct_spectrum(*prof) == walsh_transform(f));
        auto dual = dual_profile(f, *prof);
        REQUIRE(dual);
        CHECK(dual->double_dual_ok);
        for (std::uint64_t r = 0; r < f.size(); ++r) CHECK(dual->dual_of_dual[r] == f(neg_rank(r, f.p, f.n)));
    }
}

TEST_CASE("value distributions equal their closed forms") {
    for (auto s : {"x1^2+x2^2+x3^2", "x1^2+2*x2^2+x3^2+x4^2"}) {
        PFunction f = polynomial_function(s, 5, 4);
        auto prof = classify_plateaued(f);
        REQUIRE(prof);
        auto got = value_distribution(f);
        auto want = closed_form_N(5, 4, prof->s, prof->eps0, *prof->j0);
        for (int j = 0; j < 5; ++j) CHECK(BigRational(got[j]) == want[j]);
    }
}

TEST_CASE("exponential-sum oracles on a non-weakly regular function") {
    PFunction f = two_level_quadratic(3, 2, 1, 0, {1, 1}, {1, 2});
    auto prof = classify_plateaued(f);
    REQUIRE(prof);
    CHECK_FALSE(prof->weakly_regular);
    CHECK(prof->k > 0);
    CHECK(prof->k < prof->supp_size);
    auto dual = dual_profile(f, *prof);
    auto fam = family_F_check(f, *prof, dual);
    CHECK(fam.member);
    for (const auto& t : exp_sum_oracles(f, *prof, fam)) CHECK_MESSAGE(t.ok(), t.name);
    for (const auto& t : value_oracles(f, *prof, dual, fam)) CHECK_MESSAGE(t.ok(), t.name);
}

TEST_CASE("bent function with a non-standard inner product") {
    GmmfParams params;
    params.p = 3;
    params.n1 = 1;
    params.n2 = 1;
    params.l = 2;
    for (int z = 0; z < 3; ++z) params.family.push_back(quadratic_form(3, {z == 0 ? 1 : 2}));
    GmmfResult r = gmmf(params);
    auto prof = classify_plateaued(r.F);
    REQUIRE(prof);
    CHECK(prof->s == 0);
    CHECK(r.dual_formula_ok);
}
