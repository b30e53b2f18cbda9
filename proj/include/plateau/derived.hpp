#pragma once

#include "plateau/codes.hpp"
#include "plateau/linalg.hpp"
#include "plateau/spectral.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plateau {

using Constants = std::vector<std::pair<std::string, std::string>>;

struct QuantumParams {
    int p = 3;
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::size_t distance = 0;
    bool pure = true;
    std::optional<std::size_t> hamming_max_k;  // none: no dimension permitted

    // enlargement data
    std::size_t k1 = 0, k2 = 0;
    std::size_t d1 = 0, d2 = 0;
    bool chain = false;  // C1^perp <= C1 <= C2 by row reduction

    std::string source;
    bool extrapolated = false;
    std::optional<std::pair<std::size_t, std::size_t>> closed_form;  // closed-form (length, dimension)
    Constants constants;
    std::vector<std::string> transcript;
};

// Largest k with p^{n-k} >= sum_{j <= (d-1)/2} C(n,j)(p^2-1)^j.
std::optional<std::size_t> quantum_hamming_max_k(int p, std::size_t nq, std::size_t dq);

struct SteaneInput {
    Matrix H1;  // generates C1^perp
    Matrix H2;  // generates C2^perp
    const WeightDistribution* wd_H1 = nullptr;  // weights of C1^perp when already known
};

// Enlargement in parity-check form. Throws HypothesisError naming the violated clause.
QuantumParams steane_enlarge(const SteaneInput& in);
// Same from generator matrices of C1 and C2 (dual generators by null space).
QuantumParams steane_enlarge_generators(const Matrix& G1, const Matrix& G2);

// Minimum distance of the code with parity-check matrix H, by column dependencies and by power moments
// of the row space of H. Throws std::logic_error if the routes disagree.
std::size_t checked_dual_distance(const Matrix& H, const WeightDistribution* wd_rowspace, std::vector<std::string>* log);

// Quadratic form sum c_i x_i^2 on the first n-s variables with the requested type (s dummy variables).
PFunction quadratic_instance(int p, int n, int s, int eps0, Constants* chosen = nullptr);

QuantumParams quantum_from_function(const PFunction& f);
QuantumParams quantum_ternary_zero_set(int n, int s, int eps0);
// nsq = true builds the non-square variant (v1, w1 square, D~_{f,i} with i a nonsquare).
QuantumParams quantum_square_set(int p, int n, int s, int eps0, bool nsq = false);

// Gram matrix <a_i, a_j> of the rows of a basis (dot product).
Matrix basis_gram(const Matrix& basis);
// Random bases of F_p^n; returns the number whose Gram matrix is nonsingular.
std::size_t random_basis_gram_check(int p, int n, std::size_t trials, std::uint64_t seed);

struct LcdReport {
    std::string source;
    Matrix Gprime;
    Matrix H;  // left block
    bool gram_nonsingular = false;
    bool gram_identity = false;
    bool block_self_orthogonal = false;
    CodeReport code;
    DualReport dual;
    std::size_t dual_distance_columns = 0;
    std::size_t dual_distance_moments = 0;
    std::optional<bool> dual_lcd_direct;  // computed when the dual is small
    std::optional<std::pair<std::size_t, std::size_t>> closed_form;  // dual (length, dimension)
    Constants constants;
    std::vector<std::string> transcript;
};

LcdReport lcd_from_function(const PFunction& f);
LcdReport lcd_ternary_zero_set(int n, int s, int eps0);
LcdReport lcd_square_set(int p, int n, int s, int eps0);

}  // namespace plateau
