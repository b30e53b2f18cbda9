#pragma once

#include "plateau/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plateau {

// Element of Z[xi_p] on the integral basis xi^1..xi^{p-1}.
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(int p);
    CycInt(int p, std::vector<BigInt> coords);

    static CycInt zero(int p) { return CycInt(p); }
    static CycInt integer(int p, const BigInt& c);
    static CycInt xi_pow(int p, long long j);
    // from coefficients on 1, xi, ..., xi^{p-1}
    static CycInt from_group_ring(int p, const std::vector<long long>& c);

    int p() const { return p_; }
    // coefficient of xi^j, 1 <= j <= p-1
    const BigInt& coeff(int j) const { return c_.at(j - 1); }
    const std::vector<BigInt>& coords() const { return c_; }

    bool is_zero() const;
    std::optional<BigInt> as_integer() const;
    // sum of basis coordinates; the field trace equals its negation
    BigInt coordinate_sum() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(const BigInt& k) const;
    CycInt& operator+=(const CycInt& o);
    bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    CycInt galois(int t) const;
    CycInt conj() const { return galois(p_ - 1); }
    BigInt norm_squared() const;  // W * conj(W); throws unless rational (plateaued spectra)

    std::string to_string() const;

private:
    void check(const CycInt& o) const;
    int p_ = 0;
    std::vector<BigInt> c_;
};

CycInt gauss_sum(int p);

struct PlateauValue {
    int eps;  // +1 or -1
    int j;    // exponent of xi
    bool operator==(const PlateauValue& o) const { return eps == o.eps && j == o.j; }
};

// Matches W against eps*p^{N/2}*xi^j (N even) or eps*g*p^{(N-1)/2}*xi^j (N odd).
class PlateauRecognizer {
public:
    PlateauRecognizer(int p, int N);
    std::optional<PlateauValue> match(const CycInt& W) const;
    std::optional<PlateauValue> match(const long long* coords) const;
    CycInt value(int eps, int j) const;

private:
    int p_;
    int N_;
    std::vector<std::vector<long long>> small_;  // [eps_index * p + j] -> coords
    std::vector<CycInt> targets_;
    bool small_ok_ = false;
};

// N = n + s for the Walsh transform of f, n - s for its dual.
std::optional<PlateauValue> recognize_plateau_value(const CycInt& W, int p, int n, int s);

}  // namespace plateau
