#include "doctest.h"

#include "plateau/analytic.hpp"
#include "plateau/codes.hpp"
#include "plateau/function_zoo.hpp"
#include "plateau/linalg.hpp"

#include <random>

using namespace plateau;

namespace {

Matrix from_rows(int p, const std::vector<std::vector<int>>& rows) {
    Matrix M(p, 0, rows.front().size());
    for (const auto& r : rows) M.append_row(std::vector<std::uint8_t>(r.begin(), r.end()));
    return M;
}

}  // namespace

TEST_CASE("tetracode") {
    Matrix G = from_rows(3, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    WeightDistribution wd = weight_distribution(G);
    CHECK(wd.enumerator() == "1+8z^3");
    CHECK(wd.min_distance() == std::optional<std::size_t>(3));
    CHECK(is_self_orthogonal(G));
    CHECK_FALSE(is_lcd(G));
    // self-dual: MacWilliams returns the same distribution
    CHECK(macwilliams(wd, 2) == wd);
    SpherePacking sp = sphere_packing(3, 4, 2, 3);
    CHECK(sp.holds);
    CHECK(sp.equality);
    CHECK(dual_distance_upto4(G) == 3);
}

TEST_CASE("linear algebra") {
    Matrix A = from_rows(5, {{1, 2, 3, 4}, {2, 4, 1, 3}, {0, 1, 1, 1}});
    CHECK(matrix_rank(A) == 2);
    Matrix N = null_space(A);
    CHECK(N.rows == 2);
    CHECK(multiply(A, transpose(N)).is_zero());
    CHECK(determinant(identity_matrix(7, 4)) == 1);
    Matrix I = identity_matrix(3, 3);
    CHECK(is_lcd(I));
    CHECK(row_space_contains(A, from_rows(5, {{3, 6, 4, 2}})));
}

TEST_CASE("MacWilliams totals and power moments on random codes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = trial % 2 ? 3 : 5;
        const std::size_t k = 2 + trial % 3, m = 6 + trial % 5;
        Matrix G(p, k, m);
        for (auto& v : G.data) v = static_cast<std::uint8_t>(rng() % p);
        const std::size_t r = matrix_rank(G);
        WeightDistribution wd = weight_distribution(G);
        WeightDistribution dual = macwilliams(wd, r);
        CHECK(dual.total() == big_pow(p, static_cast<long long>(m - r)));
        auto pl = pless_moments(wd, r, 4);
        for (std::size_t w = 0; w <= 4; ++w) CHECK(pl[w] == dual.at(w));
        // direct enumeration of the dual
        WeightDistribution direct = weight_distribution(null_space(G));
        CHECK(direct == dual);
    }
}

TEST_CASE("second worked example: enumeration, spectral route and duals") {
    PFunction f = example_function(2);
    DefiningSets sets = defining_sets(f);
    struct Want {
        CodeFamily fam;
        std::size_t m, k, d;
        const char* enumerator;
        std::size_t dd;
    };
    const std::vector<Want> wants = {
        {CodeFamily::Cf, 728, 7, 459, "1+180z^459+1862z^486+144z^513", 2},
        {CodeFamily::DsqPunct, 108, 6, 63, "1+72z^63+576z^72+80z^81", 3},
        {CodeFamily::DnsqPunct, 135, 6, 81, "1+80z^81+558z^90+90z^99", 3},
    };
    for (const auto& w : wants) {
        GeneratorMatrix G = build_family(f, w.fam, sets);
        CodeReport rep = code_report(G);
        CHECK(rep.length == w.m);
        CHECK(rep.dimension == w.k);
        CHECK(rep.min_distance == std::optional<std::size_t>(w.d));
        CHECK(rep.wd.enumerator() == w.enumerator);
        DualReport dual = dual_distribution(rep, 4);
        CHECK(dual.dimension == w.m - w.k);
        CHECK(dual.min_distance == std::optional<std::size_t>(w.dd));
        CHECK(dual.pless_agrees);
        CHECK(dual_distance_upto4(G.G) == static_cast<int>(w.dd));
    }
    CHECK(spectral_weights_Cf(f, false) == code_report(build_Cf(f)).wd);
    CHECK(spectral_weights_CD(f.space, sets.Dsq_rep) == code_report(build_CD(f.space, sets.Dsq_rep)).wd);
}

TEST_CASE("defining sets and representatives") {
    PFunction f = example_function(2);
    DefiningSets sets = defining_sets(f);
    CHECK(sets.D0.size() == 242);
    CHECK(sets.Dsq.size() + sets.Dnsq.size() + sets.D0.size() + 1 == 729);
    CHECK(scale_closed(sets.D0));
    CHECK(sets.D0_rep.size() * 2 == sets.D0.size());
    CHECK_NOTHROW(validate_orbit_cover(sets.D0, sets.D0_rep));
    DefiningSet broken = sets.D0_rep;
    broken.ranks.back() = broken.ranks.front();
    CHECK_THROWS_AS(validate_orbit_cover(sets.D0, broken), HypothesisError);

    // the two selectors give the same weights
    PFunction g = quadratic_form(5, {1, 1, 2});
    DefiningSets orb = defining_sets(g, RepSelector::Orbit);
    DefiningSets pm = defining_sets(g, RepSelector::PlusMinus);
    CHECK(weight_distribution(build_CD(g.space, orb.Dsq_rep).G) == weight_distribution(build_CD(g.space, pm.Dsq_rep).G));
}

TEST_CASE("degenerate defining set warns") {
    PFunction f = polynomial_function("x1^2+x2^2", 3, 2);
    CodeReport rep = code_report(build_family(f, CodeFamily::D0, defining_sets(f)));
    CHECK(rep.length == 0);
    CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("self-orthogonality") {
    // ternary: self-orthogonal iff every weight is a multiple of 3
    for (auto fam : all_families()) {
        PFunction f = example_function(2);
        CodeReport rep = code_report(build_family(f, fam, defining_sets(f)));
        bool all3 = true;
        for (const auto& [w, a] : rep.wd.A) all3 = all3 && w % 3 == 0;
        CHECK(rep.self_orthogonal == all3);
    }
    SoChecks so = so_sufficient_checks(quadratic_form(5, {1, 1, 1, 1}));
    CHECK(so.f0_zero);
    CHECK(so.symmetric);
}

TEST_CASE("size guard on enumeration") {
    Matrix G(7, 8, 10);
    for (std::size_t i = 0; i < 8; ++i) G.at(i, i) = 1;
    CHECK_THROWS_AS(weight_distribution(G), GuardError);
}
