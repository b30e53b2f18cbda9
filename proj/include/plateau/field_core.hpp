#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace plateau {

// Error categories surfaced by the CLI as distinct exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxPrime = 31;
constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 24;

bool is_prime(int p);
int mod(long long a, int p);
int pow_mod(long long a, long long e, int p);
int inv_mod(int a, int p);

// p^n, throwing GuardError when it exceeds the table limit.
std::uint64_t guarded_power(int p, int n);
std::uint64_t ipow(std::uint64_t b, unsigned e);

// Odd prime modulus with cached inverse and character tables.
class PrimeField {
public:
    explicit PrimeField(int p);

    int p() const { return p_; }
    int add(int a, int b) const { int c = a + b; return c >= p_ ? c - p_ : c; }
    int sub(int a, int b) const { int c = a - b; return c < 0 ? c + p_ : c; }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }
    int mul(int a, int b) const { return (a * b) % p_; }
    int inv(int a) const;
    int pow(int a, long long e) const { return pow_mod(a, e, p_); }

    // Quadratic character with eta(0) = 0.
    int eta(int a) const { return eta_[mod(a, p_)]; }
    // p* = eta(-1) p
    int p_star() const { return eta(p_ - 1) * p_; }
    const std::vector<int>& squares() const { return sq_; }
    const std::vector<int>& nonsquares() const { return nsq_; }
    int smallest_square() const { return sq_.front(); }
    int smallest_nonsquare() const { return nsq_.front(); }
    int primitive_root() const { return g_; }

private:
    int p_;
    int g_ = 0;
    std::vector<int> inv_;
    std::vector<int> eta_;
    std::vector<int> sq_;
    std::vector<int> nsq_;
};

int quadratic_character(int a, int p);

// Element of F_p^n; digits[0] is x_1, the most significant base-p digit of the rank.
struct FpVector {
    int p = 3;
    std::vector<int> digits;

    std::size_t size() const { return digits.size(); }
    std::uint64_t rank() const;
    static FpVector from_rank(int p, int n, std::uint64_t r);
    static FpVector unit(int p, int n, int i);
    bool is_zero() const;
    bool operator==(const FpVector& o) const { return p == o.p && digits == o.digits; }
};

void rank_to_digits(std::uint64_t r, int p, int n, int* out);
std::uint64_t digits_to_rank(const int* d, int p, int n);
// rank of c*x for a scalar c
std::uint64_t scale_rank(std::uint64_t r, int c, int p, int n);
std::uint64_t neg_rank(std::uint64_t r, int p, int n);

// GF(p^m) on a power basis of a monic irreducible modulus (coefficients low to high).
class ExtField {
public:
    using Elem = std::vector<int>;

    ExtField(int p, int m);
    ExtField(int p, std::vector<int> modulus);

    int p() const { return p_; }
    int degree() const { return m_; }
    const std::vector<int>& modulus() const { return modulus_; }
    std::string modulus_string() const;
    std::uint64_t order() const;

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    Elem generator() const;  // the class of x
    Elem constant(int c) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::uint64_t e) const;
    Elem frobenius(const Elem& a) const { return pow(a, static_cast<std::uint64_t>(p_)); }
    int trace(const Elem& a) const;

    // index uses the same convention as FpVector: coefficient of x^0 is the most significant digit
    std::uint64_t index(const Elem& a) const;
    Elem from_index(std::uint64_t r) const;

    static bool is_irreducible(int p, const std::vector<int>& monic);
    static std::vector<int> smallest_irreducible(int p, int m);

private:
    int p_;
    int m_;
    std::vector<int> modulus_;
};

int trace(const ExtField& F, const ExtField::Elem& x);

struct SpaceFactor {
    enum class Kind { Dot, Trace };
    Kind kind = Kind::Dot;
    int dim = 1;
    std::shared_ptr<const ExtField> field;  // set for Trace factors
};

// Product of dot-product spaces and trace-form extension fields; <a,b> = a^T Q b.
class InnerProductSpace {
public:
    InnerProductSpace() = default;
    InnerProductSpace(int p, std::vector<SpaceFactor> factors);
    static InnerProductSpace dot(int p, int n);

    int p() const { return p_; }
    int dim() const { return n_; }
    const std::vector<SpaceFactor>& factors() const { return factors_; }
    bool is_standard() const { return standard_; }
    int gram(int i, int j) const { return gram_[static_cast<std::size_t>(i) * n_ + j]; }

    int inner(const std::vector<int>& a, const std::vector<int>& b) const;
    int inner(const FpVector& a, const FpVector& b) const;
    // Q a, as digits
    std::vector<int> apply(const std::vector<int>& a) const;
    std::uint64_t apply_rank(std::uint64_t a) const;
    bool nondegenerate_exhaustive() const;
    std::string describe() const;

private:
    int p_ = 3;
    int n_ = 0;
    bool standard_ = true;
    std::vector<SpaceFactor> factors_;
    std::vector<int> gram_;
};

int inner_product(const FpVector& a, const FpVector& b, const InnerProductSpace& space);

}  // namespace plateau
