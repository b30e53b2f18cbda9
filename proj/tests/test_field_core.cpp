#include "doctest.h"

#include "plateau/field_core.hpp"

#include <set>

using namespace plateau;

TEST_CASE("prime field arithmetic and characters") {
    for (int p : {3, 5, 7, 11, 13}) {
        PrimeField F(p);
        for (int a = 1; a < p; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
        // eta is multiplicative and agrees with Euler's criterion
        for (int a = 1; a < p; ++a) {
            int e = pow_mod(a, (p - 1) / 2, p);
            CHECK(F.eta(a) == (e == 1 ? 1 : -1));
            for (int b = 1; b < p; ++b) CHECK(F.eta(a * b) == F.eta(a) * F.eta(b));
        }
        CHECK(F.eta(0) == 0);
        CHECK(F.squares().size() == static_cast<std::size_t>((p - 1) / 2));
        CHECK(F.nonsquares().size() == static_cast<std::size_t>((p - 1) / 2));
        CHECK(F.p_star() == (p % 4 == 1 ? p : -p));
    }
    CHECK(PrimeField(3).smallest_nonsquare() == 2);
    CHECK(PrimeField(7).smallest_nonsquare() == 3);
    CHECK(PrimeField(5).smallest_square() == 1);
}

TEST_CASE("rank and digits: x1 is the most significant digit") {
    int d[3];
    rank_to_digits(1, 3, 3, d);
    CHECK(d[0] == 0);
    CHECK(d[2] == 1);
    rank_to_digits(9, 3, 3, d);
    CHECK(d[0] == 1);
    for (std::uint64_t r = 0; r < 125; ++r) {
        int e[3];
        rank_to_digits(r, 5, 3, e);
        CHECK(digits_to_rank(e, 5, 3) == r);
        CHECK(neg_rank(neg_rank(r, 5, 3), 5, 3) == r);
        CHECK(scale_rank(r, 1, 5, 3) == r);
    }
    CHECK(FpVector::unit(3, 4, 0).rank() == 27);
}

TEST_CASE("size guard") {
    CHECK(guarded_power(3, 6) == 729);
    CHECK_THROWS_AS(guarded_power(31, 6), GuardError);
    CHECK_THROWS(PrimeField(9));
}

TEST_CASE("extension field: modulus, Frobenius and trace") {
    ExtField F(3, 2);
    CHECK(F.order() == 9);
    CHECK(ExtField::is_irreducible(3, F.modulus()));
    std::set<int> seen;
    std::vector<int> counts(3, 0);
    for (std::uint64_t i = 0; i < F.order(); ++i) {
        auto a = F.from_index(i);
        CHECK(F.index(a) == i);
        CHECK(F.pow(a, 9) == a);
        ++counts[F.trace(a)];
        for (std::uint64_t j = 0; j < F.order(); ++j) {
            auto b = F.from_index(j);
            CHECK(F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % 3);
        }
    }
    // trace is balanced
    CHECK(counts[0] == 3);
    CHECK(counts[1] == 3);
    CHECK(counts[2] == 3);
}

TEST_CASE("inner product spaces") {
    auto S = InnerProductSpace::dot(5, 3);
    CHECK(S.is_standard());
    CHECK(S.nondegenerate_exhaustive());
    std::vector<int> a{1, 2, 3}, b{4, 0, 1};
    CHECK(S.inner(a, b) == (4 + 3) % 5);
    CHECK(S.apply(a) == a);
    auto E = std::make_shared<const ExtField>(3, 2);
    InnerProductSpace T(3, {SpaceFactor{SpaceFactor::Kind::Trace, 2, E}, SpaceFactor{SpaceFactor::Kind::Dot, 1, nullptr}});
    CHECK(T.dim() == 3);
    CHECK(T.nondegenerate_exhaustive());
}
