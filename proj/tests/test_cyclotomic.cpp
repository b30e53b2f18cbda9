#include "doctest.h"

#include "plateau/cyclotomic.hpp"
#include "plateau/field_core.hpp"

using namespace plateau;

TEST_CASE("integers and powers of xi on the integral basis") {
    for (int p : {3, 5, 7}) {
        CycInt one = CycInt::integer(p, 1);
        CHECK(one.as_integer() == BigInt(1));
        CycInt sum = CycInt::zero(p);
        for (int j = 0; j < p; ++j) sum += CycInt::xi_pow(p, j);
        CHECK(sum.is_zero());
        CHECK(CycInt::xi_pow(p, p) == one);
        CHECK(CycInt::xi_pow(p, 2) * CycInt::xi_pow(p, p - 2) == one);
        CHECK(CycInt::xi_pow(p, 1).galois(2) == CycInt::xi_pow(p, 2));
    }
}

TEST_CASE("quadratic Gauss sum squares to p*") {
    for (int p : {3, 5, 7, 11, 13}) {
        CycInt g = gauss_sum(p);
        PrimeField F(p);
        CHECK((g * g).as_integer() == BigInt(F.p_star()));
        CHECK(g.norm_squared() == p);
        // sigma_t(g) = eta(t) g
        for (int t = 1; t < p; ++t) CHECK(g.galois(t) == g * BigInt(F.eta(t)));
    }
}

TEST_CASE("plateau value recognizer") {
    for (int p : {3, 5}) {
        for (int N : {2, 3, 4}) {
            PlateauRecognizer R(p, N);
            for (int eps : {1, -1})
                for (int j = 0; j < p; ++j) {
                    CycInt W = R.value(eps, j);
                    auto m = R.match(W);
                    REQUIRE(m);
                    CHECK(m->eps == eps);
                    CHECK(m->j == j);
                    CHECK(W.norm_squared() == big_pow(p, N));
                }
            CHECK_FALSE(R.match(CycInt::integer(p, 1)));
        }
    }
}

TEST_CASE("big integer helpers") {
    CHECK(binomial(15624, 2) == BigInt(15624) * 15623 / 2);
    CHECK(to_string(big_pow(5, 30)) == "931322574615478515625");
}
