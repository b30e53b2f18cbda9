#pragma once

#include "plateau/analytic.hpp"
#include "plateau/codes.hpp"
#include "plateau/derived.hpp"
#include "plateau/spectral.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plateau {

// Key order is insertion order; big integers are decimal strings.
using Json = nlohmann::ordered_json;

std::string digits_string(std::uint64_t rank, int p, int n);

Json distribution_json(const WeightDistribution& wd);  // [[w, "count"], ...]
Json code_report_json(const CodeReport& rep);
Json dual_report_json(const DualReport& rep);
Json prediction_json(const PredictedDistribution& pd);
Json context_json(const CodeContext& ctx);

struct FunctionAnalysis {
    PFunction f;
    std::optional<PlateauProfile> prof;
    std::optional<DualProfile> dual;
    std::optional<FamilyReport> family;
    std::optional<CodeContext> ctx;
};
// Throws HypothesisError only for internal inconsistencies; prof is empty for non-plateaued input.
FunctionAnalysis analyze_function(const PFunction& f, int jobs = 0);
Json function_report_json(const FunctionAnalysis& a);

// One code family built, enumerated, cross-checked by the spectrum, and compared with the tables.
struct FamilyRun {
    CodeFamily family = CodeFamily::Cf;
    GeneratorMatrix G;
    CodeReport report;
    std::optional<bool> spectral_agrees;
    DualReport dual;
    std::optional<int> dual_distance_columns;  // 5 means >= 5
    std::optional<PredictedDistribution> prediction;
    std::optional<PredictedParameters> parameters;
    std::vector<std::string> diff;
    std::vector<std::string> notes;
};

FamilyRun run_family(const FunctionAnalysis& a, CodeFamily fam, const DefiningSets& sets, int jobs = 0);
Json family_run_json(const FamilyRun& run);

Json constants_json(const Constants& c);
Json quantum_json(const QuantumParams& q);
Json lcd_json(const LcdReport& r);

}  // namespace plateau
