#include "doctest.h"

#include "plateau/derived.hpp"
#include "plateau/function_zoo.hpp"
#include "plateau/linalg.hpp"

using namespace plateau;

TEST_CASE("quantum Hamming bound") {
    // 7^3 < 1 + 42*48, so dimension 39 is excluded at length 42
    CHECK(quantum_hamming_max_k(7, 42, 3) == std::optional<std::size_t>(38));
    CHECK(quantum_hamming_max_k(3, 4, 5) == std::nullopt);
}

TEST_CASE("enlargement from a punctured function code") {
    QuantumParams q = quantum_from_function(quadratic_instance(7, 2, 1, 1));
    CHECK(q.length == 42);
    CHECK(q.dimension == 38);
    CHECK(q.distance == 3);
    CHECK(q.chain);
    CHECK(q.k2 >= q.k1 + 2);
    CHECK(q.pure);
    CHECK(q.hamming_max_k == std::optional<std::size_t>(38));

    QuantumParams q2 = quantum_from_function(example_function(2));
    CHECK(q2.length == 486);
    CHECK(q2.dimension == 478);
    CHECK(q2.distance == 3);
}

TEST_CASE("enlargement hypotheses are enforced") {
    // k2 = k1 + 1
    Matrix H1(3, 0, 4), H2(3, 0, 4);
    H1.append_row({1, 0, 1, 1});
    H1.append_row({0, 1, 1, 2});
    H2.append_row({1, 0, 1, 1});
    CHECK_THROWS_AS(steane_enlarge({H1, H2, nullptr}), HypothesisError);
    CHECK_THROWS_AS(quantum_square_set(7, 3, 0, -1), HypothesisError);
}

TEST_CASE("ternary zero-set construction matches its closed form") {
    QuantumParams q = quantum_ternary_zero_set(5, 0, 1);
    REQUIRE(q.closed_form);
    CHECK(q.closed_form->first == q.length);
    CHECK(q.closed_form->second == q.dimension);
    CHECK(q.distance == 3);
}

TEST_CASE("square-set construction") {
    QuantumParams q = quantum_square_set(7, 4, 1, 1);
    CHECK(q.length == 196);
    CHECK(q.dimension == 190);
    CHECK(q.distance == 3);
}

TEST_CASE("LCD constructions") {
    LcdReport a = lcd_from_function(quadratic_instance(3, 4, 2, 1));
    CHECK(a.gram_identity);
    CHECK(a.dual.length == 41);
    CHECK(a.dual.dimension == 36);
    CHECK(a.dual_distance_columns == 3);
    CHECK(a.dual_distance_moments == 3);

    LcdReport b = lcd_ternary_zero_set(5, 1, -1);
    CHECK(b.gram_nonsingular);
    CHECK(b.dual.length == 36);
    CHECK(b.dual.dimension == 31);

    LcdReport c = lcd_square_set(3, 5, 2, -1);
    CHECK(c.gram_nonsingular);
    CHECK(c.dual.length == 32);
    CHECK(c.dual.dimension == 27);
    CHECK(c.dual_distance_columns == 3);
}

TEST_CASE("random bases have nonsingular Gram matrices") {
    CHECK(random_basis_gram_check(5, 4, 50, 3) == 50);
    Matrix B = identity_matrix(3, 3);
    CHECK(basis_gram(B) == identity_matrix(3, 3));
}
