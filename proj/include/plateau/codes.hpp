#pragma once

#include "plateau/bigint.hpp"
#include "plateau/linalg.hpp"
#include "plateau/spectral.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plateau {

// Largest message space enumerated codeword by codeword.
constexpr std::uint64_t kEnumerationGuard = 390625;  // 5^8

struct GeneratorMatrix {
    Matrix G;                           // k x m
    std::vector<std::uint64_t> labels;  // rank of the defining vector behind each column
    int label_dim = 0;
    std::string provenance;

    int p() const { return G.p; }
    std::size_t length() const { return G.cols; }
    std::size_t rows() const { return G.rows; }
};

// Ordered defining vectors (ranks in V_n) with a provenance tag.
struct DefiningSet {
    int p = 3;
    int n = 0;
    std::vector<std::uint64_t> ranks;
    std::string tag;

    std::size_t size() const { return ranks.size(); }
};

enum class RepSelector { Orbit, PlusMinus };

struct DefiningSets {
    DefiningSet complement_D0;  // V \ D_{f,0}
    DefiningSet D0;             // D_{f,0} \ {0}
    DefiningSet Dsq, Dnsq;
    DefiningSet M_tilde;  // F_p^* representatives of V \ D_{f,0}
    DefiningSet D0_rep, Dsq_rep, Dnsq_rep;
    std::vector<std::string> warnings;
};

// Level set D_{f,i} (i = 0 includes the zero vector).
DefiningSet level_set(const PFunction& f, int i);
bool scale_closed(const DefiningSet& D);
// representatives of F_p^* orbits: first nonzero digit equal to 1
DefiningSet orbit_representatives(const DefiningSet& D, const std::string& tag);
// representatives of {x,-x}: the lexicographically smaller member
DefiningSet pm_representatives(const DefiningSet& D, const std::string& tag);
// checks that the F_p^* multiples of reps partition D; throws HypothesisError otherwise
void validate_orbit_cover(const DefiningSet& D, const DefiningSet& reps);
void validate_pm_cover(const DefiningSet& D, const DefiningSet& reps);

// Orbit selector: first-digit-1 members. PlusMinus selector for sq/nsq: D~_{f,i} for the smallest
// (non)square i, validated to cover D_{f,sq} / D_{f,nsq} under F_p^* scaling.
DefiningSets defining_sets(const PFunction& f, RepSelector sel = RepSelector::Orbit);
// custom representatives given as digit vectors, validated against D
DefiningSet custom_representatives(const DefiningSet& D, const std::vector<std::vector<int>>& vecs);

GeneratorMatrix build_Cf(const PFunction& f);
GeneratorMatrix build_Cf_punctured(const PFunction& f);
GeneratorMatrix build_CD(const InnerProductSpace& space, const DefiningSet& D);

// A_w for w = 0..length, stored sparsely.
struct WeightDistribution {
    int p = 3;
    std::size_t length = 0;
    std::map<std::size_t, BigInt> A;

    BigInt total() const;
    BigInt at(std::size_t w) const;
    std::optional<std::size_t> min_distance() const;
    std::optional<std::size_t> max_weight() const;
    std::string enumerator() const;  // "1+16z^5+..."
    bool operator==(const WeightDistribution& o) const { return p == o.p && length == o.length && A == o.A; }
};

struct SpherePacking {
    BigInt ball;  // sum_{j <= (d-1)/2} C(m,j)(p-1)^j
    bool holds = false;
    bool equality = false;
    bool k_plus_one_excluded = false;  // [m,k+1,d] violates the bound
    bool d_plus_one_excluded = false;  // [m,k,d+1] violates the bound
};

struct CodeReport {
    int p = 3;
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::optional<std::size_t> min_distance;
    WeightDistribution wd;
    bool self_orthogonal = false;
    bool lcd = false;
    bool minimal = false;
    std::optional<SpherePacking> sphere_packing;
    std::string provenance;
    std::vector<std::string> warnings;
};

struct DualReport {
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::optional<std::size_t> min_distance;
    WeightDistribution wd;  // computed up to max_weight_computed
    std::size_t max_weight_computed = 0;
    std::vector<BigInt> pless;  // A^perp_0..A^perp_r from the power moments
    bool pless_agrees = false;
    std::optional<SpherePacking> sphere_packing;
};

// Full enumeration over the row space; throws GuardError when p^rank exceeds the guard.
WeightDistribution weight_distribution(const Matrix& G, int jobs = 0);
CodeReport code_report(const GeneratorMatrix& G, int jobs = 0);

// Weights of C_f (or its puncture at D_{f,0}) from the Walsh spectrum: wt = p^n - M_{a,b}.
WeightDistribution spectral_weights_Cf(const PFunction& f, bool punctured, int jobs = 0);
// Weights of C_D from the masked transform of the indicator of D.
WeightDistribution spectral_weights_CD(const InnerProductSpace& space, const DefiningSet& D, int jobs = 0);

// MacWilliams transform via Krawtchouk recurrences; weights above max_j are skipped.
WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t k, std::size_t max_j = SIZE_MAX);
// A^perp_0..A^perp_r from the binomial power moments.
std::vector<BigInt> pless_moments(const WeightDistribution& wd, std::size_t k, std::size_t r);
DualReport dual_distribution(const CodeReport& rep, std::size_t max_j = SIZE_MAX);

// d^perp if at most 4, else 5 (meaning >= 5).
int dual_distance_upto4(const Matrix& G);

bool is_self_orthogonal(const Matrix& G);
// row-reduces first; effective dimension written to *eff_k when given
bool is_lcd(const Matrix& G, std::size_t* eff_k = nullptr);

struct SoChecks {
    bool f0_zero = false;
    bool symmetric = false;  // f(x) = f(-x)
    int sum_i2_Ni = 0;       // sum i^2 N_i(f) mod p
    bool symmetric_criterion = false;    // p > 3, symmetric, sum = 0
    std::vector<int> l_a;    // even l_a per a (index a), 0 when none
    bool even_level_criterion = false;    // p > 3 and every a has an even l_a
};
SoChecks so_sufficient_checks(const PFunction& f);

SpherePacking sphere_packing(int p, std::size_t m, std::size_t k, std::size_t d);
bool minimality_flag(const WeightDistribution& wd);

}  // namespace plateau
