#pragma once

#include "plateau/spectral.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace plateau {

struct Term {
    int coeff = 1;
    std::vector<int> exps;  // one exponent per variable
};

// Sum of monomials over F_p in variables x1..xn; evaluated literally, no exponent reduction.
struct PolynomialExpr {
    int p = 3;
    int n = 0;
    std::vector<Term> terms;
};

PolynomialExpr parse_polynomial(const std::string& text, int p, int n);
int eval_polynomial(const PolynomialExpr& expr, const std::vector<int>& x);
PFunction polynomial_function(const std::string& text, int p, int n);

// Truth-table file: "p n" then p^n values in rank order (single digits, or whitespace separated).
PFunction read_truth_table(std::istream& in);
PFunction load_truth_table(const std::string& path);
void write_truth_table(std::ostream& out, const PFunction& f);

// sum d_i x_i^2
PFunction quadratic_form(int p, const std::vector<int>& coeffs);

// F(x,y,z) = f^(z)(x) + Tr(y z^{l-1}) on V_{n1} x GF(p^{n2}) x GF(p^{n2}).
struct GmmfParams {
    int p = 3;
    int n1 = 1;
    int n2 = 1;
    int l = 2;
    std::vector<PFunction> family;  // indexed by the field index of z
};

struct GmmfResult {
    PFunction F;
    int e = 0;  // e(l-1) = 1 mod p^{n2}-1
    std::vector<int> family_types;
    bool dual_formula_ok = false;
    bool sign_sets_ok = false;
    bool dual_sign_sets_ok = false;
    std::vector<std::string> notes;
};

GmmfResult gmmf(const GmmfParams& params);

// f(x,y,z,u) = f^(z)(x) + sum y_i z_i on F_p^{n1} x F_p^{n2} x F_p^{n2} x F_p^s; family indexed by rank of z.
PFunction mm_variant(int p, int n1, int n2, int s, const std::vector<PFunction>& family);
// mm_variant with f^(0) = sum u_i x_i^2 and f^(z) = sum v_i x_i^2 for z != 0
PFunction two_level_quadratic(int p, int n1, int n2, int s, const std::vector<int>& u, const std::vector<int>& v);

PFunction example_function(int idx);
extern const char* const kExample1Poly;
extern const char* const kExample2Poly;

}  // namespace plateau
