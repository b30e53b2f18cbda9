#include "doctest.h"

#include "plateau/field_core.hpp"
#include "plateau/function_zoo.hpp"
#include "plateau/spectral.hpp"

#include <memory>
#include <sstream>

using namespace plateau;

TEST_CASE("polynomial parser") {
    PFunction f = polynomial_function("x1^2*x2 + 2*x3 - x1", 5, 3);
    for (std::uint64_t r = 0; r < f.size(); ++r) {
        int d[3];
        rank_to_digits(r, 5, 3, d);
        CHECK(f(r) == mod(d[0] * d[0] * d[1] + 2 * d[2] - d[0], 5));
    }
    CHECK(polynomial_function("7*x1", 5, 1) == polynomial_function("2*x1", 5, 1));
    CHECK(polynomial_function("x1^5", 5, 1) == polynomial_function("x1", 5, 1));
    CHECK_THROWS_AS(polynomial_function("x4", 3, 2), ParseError);
    CHECK_THROWS_AS(polynomial_function("x1 +* x2", 3, 2), ParseError);
    CHECK_THROWS_AS(polynomial_function("y1", 3, 2), ParseError);
}

TEST_CASE("truth tables round trip") {
    PFunction f = polynomial_function("x1*x2 + x3^2", 3, 3);
    std::stringstream ss;
    write_truth_table(ss, f);
    PFunction g = read_truth_table(ss);
    CHECK(g == f);

    std::istringstream spaced("5 1\n0 1 4 4 1\n");
    CHECK(read_truth_table(spaced) == polynomial_function("x1^2", 5, 1));

    std::istringstream short_table("3 2\n0120\n");
    CHECK_THROWS_AS(read_truth_table(short_table), ParseError);
    std::istringstream bad_value("3 1\n013\n");
    CHECK_THROWS_AS(read_truth_table(bad_value), ParseError);
    std::istringstream bad_prime("4 1\n0123\n");
    CHECK_THROWS(read_truth_table(bad_prime));
}

TEST_CASE("worked examples") {
    auto p1 = classify_plateaued(example_function(1));
    REQUIRE(p1);
    CHECK(p1->s == 2);
    CHECK(p1->eps0 == 1);
    CHECK(p1->k == 125);
    CHECK_FALSE(p1->weakly_regular);

    auto p2 = classify_plateaued(example_function(2));
    REQUIRE(p2);
    CHECK(p2->s == 1);
    CHECK(p2->eps0 == -1);
    CHECK(p2->k == 162);
    CHECK_THROWS(example_function(3));
}

TEST_CASE("two-level quadratics are plateaued family members") {
    struct Case {
        int p, n1, n2, s;
        std::vector<int> u, v;
    };
    for (const auto& c : std::vector<Case>{{3, 1, 1, 0, {1}, {2}}, {3, 2, 1, 1, {1, 1}, {1, 2}}, {5, 1, 1, 0, {1}, {2}}}) {
        PFunction f = two_level_quadratic(c.p, c.n1, c.n2, c.s, c.u, c.v);
        CHECK(f.n == c.n1 + 2 * c.n2 + c.s);
        auto prof = classify_plateaued(f);
        REQUIRE(prof);
        CHECK(prof->s == c.s);
        auto dual = dual_profile(f, *prof);
        REQUIRE(dual);
        auto fam = family_F_check(f, *prof, dual);
        CHECK(fam.member);
        CHECK(fam.t == 2);
        CHECK(fam.t_prime == 2);
    }
}

TEST_CASE("quadratic forms over a trace inner product") {
    auto E = std::make_shared<const ExtField>(3, 2);
    InnerProductSpace S(3, {SpaceFactor{SpaceFactor::Kind::Trace, 2, E}});
    PFunction f = PFunction::from_fn(S, [](const std::vector<int>& x) { return (x[0] * x[0] + x[1] * x[1]) % 3; });
    auto prof = classify_plateaued(f);
    REQUIRE(prof);
    CHECK(prof->s == 0);
}
