#pragma once

#include "plateau/cyclotomic.hpp"
#include "plateau/field_core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace plateau {

// f: V_n -> F_p as a dense table indexed by rank.
struct PFunction {
    int p = 3;
    int n = 0;
    InnerProductSpace space;
    std::vector<std::uint8_t> table;
    std::string label;

    PFunction() = default;
    PFunction(int p, int n);  // zero function on the dot-product space
    PFunction(InnerProductSpace space, std::vector<std::uint8_t> table);
    static PFunction from_fn(const InnerProductSpace& space, const std::function<int(const std::vector<int>&)>& fn);

    std::uint64_t size() const { return table.size(); }
    int operator()(std::uint64_t r) const { return table[r]; }
    int at(const FpVector& x) const { return table[x.rank()]; }
    bool operator==(const PFunction& o) const { return p == o.p && n == o.n && table == o.table; }
};

// Spectrum with int64 coordinates on the integral basis; value() gives the exact CycInt.
class WalshSpectrum {
public:
    WalshSpectrum() = default;
    WalshSpectrum(int p, int n, std::vector<long long> coords);

    int p() const { return p_; }
    int n() const { return n_; }
    std::uint64_t size() const { return size_; }
    const long long* raw(std::uint64_t r) const { return coords_.data() + r * (p_ - 1); }
    CycInt value(std::uint64_t r) const;
    bool is_zero(std::uint64_t r) const;
    BigInt norm_squared(std::uint64_t r) const { return value(r).norm_squared(); }
    bool operator==(const WalshSpectrum& o) const {
        return p_ == o.p_ && n_ == o.n_ && coords_ == o.coords_;
    }

private:
    int p_ = 3;
    int n_ = 0;
    std::uint64_t size_ = 0;
    std::vector<long long> coords_;
};

// Sum over x with exps[x] >= 0 of xi^{exps[x] - <alpha,x>}, for every alpha.
WalshSpectrum masked_transform(int p, int n, const InnerProductSpace& space, const std::vector<std::int16_t>& exps,
                               int jobs = 0);
WalshSpectrum walsh_transform(const PFunction& f, int jobs = 0);
WalshSpectrum walsh_transform_naive(const PFunction& f);

struct PlateauProfile {
    int p = 3;
    int n = 0;
    int s = 0;
    InnerProductSpace space;
    std::vector<std::uint8_t> supp;  // membership by rank
    std::vector<std::int8_t> dual;   // f*, -1 outside supp
    std::vector<std::int8_t> eps;    // +-1 on supp, 0 outside
    int eps0 = 0;                    // 0 when balanced
    std::uint64_t supp_size = 0;
    std::uint64_t k = 0;  // #B+(f)
    bool weakly_regular = false;
    bool balanced = false;
    std::optional<int> j0;  // f*(0)

    bool even() const { return (n + s) % 2 == 0; }
    std::vector<std::uint64_t> plus_set() const;
    std::vector<std::uint64_t> minus_set() const;
    std::string type_string() const;
};

std::optional<PlateauProfile> classify_plateaued(const WalshSpectrum& W, const InnerProductSpace& space);
std::optional<PlateauProfile> classify_plateaued(const PFunction& f, int jobs = 0);
// Rebuilds the spectrum from (s, supp, dual, eps).
WalshSpectrum reconstruct_spectrum(const PlateauProfile& prof);

struct DualProfile {
    std::vector<std::int8_t> dual_of_dual;  // f** by rank
    std::vector<std::int8_t> eps_star;      // +-1 everywhere
    int eps0_star = 0;
    std::vector<std::uint8_t> plus_mask;  // B+(f*)
    std::uint64_t plus_count = 0;
    bool double_dual_ok = false;

    std::vector<std::uint64_t> plus_set() const;
    std::vector<std::uint64_t> minus_set() const;
};

WalshSpectrum dual_transform(const PlateauProfile& prof, int jobs = 0);
std::optional<DualProfile> dual_profile(const PFunction& f, const PlateauProfile& prof, int jobs = 0);

struct FamilyReport {
    bool member = false;
    bool f0_zero = false;
    bool dual_bent = false;
    bool scale_closed = false;
    bool exponents_found = false;
    std::vector<int> t_all;
    std::vector<int> t_prime_all;
    std::optional<int> t;
    std::optional<int> t_prime;
    std::vector<std::string> reasons;
};

FamilyReport family_F_check(const PFunction& f, const PlateauProfile& prof, const std::optional<DualProfile>& dual);
// exponents e in [lo, p-1] with f(ax) = a^e f(x) on the given ranks (all ranks when empty mask)
std::vector<int> homogeneity_exponents(const std::vector<std::int8_t>& table, int p, int n,
                                       const std::vector<std::uint8_t>* mask, bool mask_value, int lo,
                                       bool require_gcd);
std::vector<int> lform_check(const PFunction& f);

std::vector<std::uint64_t> value_distribution(const PFunction& f);
std::vector<BigRational> closed_form_N(int p, int n, int s, int eps0, int j0);

struct DualDistribution {
    std::vector<std::uint64_t> N, c, d;
};
DualDistribution dual_value_distribution(const PlateauProfile& prof);
std::vector<BigRational> closed_form_dual_N(int p, int n, int s, int eps0_star, int j0);
void closed_form_cd(int p, int n, int s, int eps0_star, std::uint64_t k, int j0, std::vector<BigRational>& c,
                    std::vector<BigRational>& d);

// S0 over B+(f*), S1 over B-(f*), sum of xi^{f(x)+<alpha,x>}
struct PartialSums {
    CycInt S0, S1;
};
PartialSums partial_walsh_sums(const PFunction& f, const DualProfile& dual, std::uint64_t alpha);
void partial_walsh_sums_all(const PFunction& f, const DualProfile& dual, WalshSpectrum& S0, WalshSpectrum& S1,
                            int jobs = 0);
PartialSums closed_form_partial_sums(const PlateauProfile& prof, std::uint64_t alpha);

struct OrbitReport {
    bool closure_ok = false;
    std::vector<int> h_all, h_prime_all;
    std::optional<int> h, h_prime;
    bool symmetric = false;     // f(x) = f(-x)
    bool dual_zero_ok = false;  // f*(0) = 0
    std::optional<bool> type_relation_ok;
    std::vector<std::string> violations;
};
OrbitReport orbit_exponents(const PFunction& f, const PlateauProfile& prof, const std::optional<DualProfile>& dual);

// exact p^e for possibly negative e
BigRational rpow(int p, int e);

}  // namespace plateau
