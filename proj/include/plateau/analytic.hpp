#pragma once

#include "plateau/bigint.hpp"
#include "plateau/codes.hpp"
#include "plateau/spectral.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plateau {

enum class CodeFamily { Cf, CfPunct, D0, Dsq, Dnsq, D0Punct, DsqPunct, DnsqPunct };

const std::vector<CodeFamily>& all_families();
std::string family_name(CodeFamily f);  // CLI spelling: Cf, Cf-punct, D0, ...
std::optional<CodeFamily> parse_family(const std::string& s);
int construction_of(CodeFamily f);
bool is_sq_family(CodeFamily f);
bool is_nsq_family(CodeFamily f);

// Generator matrix of the given family; punctured defining-set families use the representatives in sets.
GeneratorMatrix build_family(const PFunction& f, CodeFamily fam, const DefiningSets& sets);

struct CodeContext {
    int p = 3;
    int n = 2;
    int s = 0;
    int eps0 = 1;
    int eps0_star = 1;
    BigInt k = 0;  // #B+(f)
    int j0 = 0;
    bool symmetric = true;             // f(x) = f(-x)
    bool quadratic_exponents = false;  // t = t' = 2

    bool even() const { return (n + s) % 2 == 0; }
    BigRational var_k() const { return BigRational(k); }

    // eps0_star from eps0 by the type rule: equal iff p^{n+s} = 1 mod 4
    static CodeContext make(int p, int n, int s, int eps0, const BigInt& k);
};

int derived_eps0_star(int p, int n, int s, int eps0);
// Context from computed profiles; throws std::logic_error if the type rule disagrees with the computed
// dual sign at 0 for a member of the family.
CodeContext context_from_profile(const PFunction& f, const PlateauProfile& prof,
                                    const std::optional<DualProfile>& dual, const FamilyReport& fam);

// Internal consistency: eps in {+1,-1}, 0 <= k <= p^{n-s}, p | k, eps0 = +1 needs k >= 1, eps0 = -1 needs
// k <= p^{n-s} - 1.
std::vector<std::string> context_violations(const CodeContext& ctx);
std::vector<std::string> construction_range_violations(int construction, const CodeContext& ctx);

struct TableColumn {
    std::string label;
    int eps0 = 0;       // required eps0, 0 = any
    int eps0_star = 0;  // required eps0*, 0 = any
    int set = 0;        // 1 = sq family, 2 = nsq family, 0 = any
};

struct WeightTable {
    std::string id;  // family and parity, e.g. "Cf-punct-even"
    int construction = 1;
    bool even = true;
    std::vector<CodeFamily> families;
    std::vector<TableColumn> columns;
    std::vector<std::string> weights;
    std::vector<std::vector<std::string>> mult;  // mult[row][column]
    std::vector<std::string> corrections;
};

const std::vector<WeightTable>& weight_tables();
const WeightTable& weight_table(const std::string& id);

struct PredictedDistribution {
    std::string table;
    std::string column;
    int construction = 0;
    int p = 3;
    BigInt length = 0;
    std::size_t dimension = 0;
    std::vector<std::pair<BigInt, BigInt>> rows;  // (weight, multiplicity), collapsed, ascending

    WeightDistribution to_distribution() const;
};

// Evaluates the table at ctx; family picks the column for the odd sq/nsq tables.
PredictedDistribution predict(const std::string& table_id, const CodeContext& ctx,
                              std::optional<CodeFamily> family = std::nullopt);
std::string table_for(CodeFamily family, const CodeContext& ctx);
PredictedDistribution predict_for(CodeFamily family, const CodeContext& ctx);

struct PredictedParameters {
    int construction = 0;
    CodeFamily family = CodeFamily::Cf;
    BigInt length = 0;
    std::size_t dimension = 0;
    std::optional<int> dual_distance;
    std::optional<bool> self_orthogonal;  // the claimed value, none when it makes none
    std::vector<std::string> notes;
};

PredictedParameters predict_parameters(CodeFamily family, const CodeContext& ctx);
std::vector<PredictedParameters> predict_parameters(int construction, const CodeContext& ctx);

// Closed forms for the first nonzero dual counts (C~_f, punctured defining-set codes).
struct DualLowWeights {
    std::optional<BigRational> A3;
    std::optional<BigRational> A4;
    std::string branch;
};
std::optional<DualLowWeights> predicted_dual_low_weights(CodeFamily family, const CodeContext& ctx);

// Empty iff the nonzero (weight, count) pairs agree.
std::vector<std::string> compare(const WeightDistribution& predicted, const WeightDistribution& actual);

struct SweepResult {
    std::size_t contexts = 0;
    std::size_t predictions = 0;
    std::size_t dual_checks = 0;
    std::vector<std::string> failures;       // multiplicities, totals
    std::vector<std::string> dual_failures;  // dual low-weight closed forms vs power moments
    std::vector<std::string> infeasible;     // a table row goes negative: no function has this (eps0, k)
};
// p in {3,5,7}, n <= 7, every s in range, both eps0, k in {0, p^{n-s-1}, p^{n-s}}.
SweepResult sanity_sweep();

}  // namespace plateau
