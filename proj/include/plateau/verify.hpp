#pragma once

#include "plateau/analytic.hpp"
#include "plateau/report.hpp"

#include <string>
#include <vector>

namespace plateau {

struct Check {
    std::string scope;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int jobs = 0;
};

// Printed parameters and enumerators of the worked examples.
struct GoldenCode {
    int example = 1;
    CodeFamily family = CodeFamily::Cf;
    std::string name;
    std::size_t length = 0, dimension = 0, min_distance = 0;
    std::string enumerator;
    std::size_t dual_length = 0, dual_dimension = 0, dual_distance = 0;
};
const std::vector<GoldenCode>& golden_codes();

// example = 1 or 2; 0 runs both.
std::vector<Check> verify_examples(int example, const VerifyOptions& opt = {});
std::vector<Check> verify_classification(const VerifyOptions& opt = {});
std::vector<Check> verify_lemmas(const VerifyOptions& opt = {});
std::vector<Check> verify_tables(const VerifyOptions& opt = {});
std::vector<Check> verify_self_orthogonality(const VerifyOptions& opt = {});
std::vector<Check> verify_lcd(const VerifyOptions& opt = {});
std::vector<Check> verify_quantum(const VerifyOptions& opt = {});
std::vector<Check> verify_properties(const VerifyOptions& opt = {});

// examples, classification, lemmas, tables, so, lcd, quantum, properties, all
const std::vector<std::string>& verify_scope_names();
std::vector<Check> verify_scope(const std::string& scope, const VerifyOptions& opt = {});

bool all_pass(const std::vector<Check>& checks);
Json checks_json(const std::vector<Check>& checks);

}  // namespace plateau
