// One PASS/FAIL line per acceptance criterion. Failing checks are listed below each FAIL line.
// Exit status is 0 when every failure is one of the documented unattainable instances.

#include "plateau/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace plateau;

namespace {

// The enlargement hypothesis k2 >= k1 + 2 does not hold for these instances (k2 = k1 + 1).
const std::set<std::string> kUnattainable = {
    "construction 9 p=7 n=3 s=0 (+) -> [[28,23,3]]_7",
    "construction 9 p=7 n=3 s=0 (-) -> [[21,16,3]]_7",
};

struct Criterion {
    int id;
    std::string title;
    std::function<std::vector<Check>()> run;
};

}  // namespace

int main() {
    VerifyOptions opt;
    const std::vector<Criterion> criteria = {
        {1, "second worked example: codes, enumerators and duals", [&] { return verify_examples(2, opt); }},
        {2, "first worked example: codes, enumerators and duals", [&] { return verify_examples(1, opt); }},
        {3, "classification facts of both worked examples", [&] { return verify_classification(opt); }},
        {4, "exponential-sum and value-count oracles", [&] { return verify_lemmas(opt); }},
        {5, "weight tables against enumeration on the battery", [&] { return verify_tables(opt); }},
        {6, "self-orthogonality claims and negative control", [&] { return verify_self_orthogonality(opt); }},
        {7, "LCD constructions", [&] { return verify_lcd(opt); }},
        {8, "quantum constructions and Hamming verdicts", [&] { return verify_quantum(opt); }},
        {9, "property suites", [&] { return verify_properties(opt); }},
    };

    bool unexpected = false;
    std::size_t passed_criteria = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<Check> checks;
        std::string crash;
        try {
            checks = c.run();
        } catch (const std::exception& e) {
            crash = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::size_t pass = 0;
        std::vector<const Check*> failed;
        for (const auto& ch : checks) {
            if (ch.pass)
                ++pass;
            else
                failed.push_back(&ch);
        }
        const bool ok = crash.empty() && failed.empty() && !checks.empty();
        if (ok) ++passed_criteria;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << pass << "/"
                  << checks.size() << " checks, " << static_cast<long>(secs * 10) / 10.0 << " s)\n";
        if (!crash.empty()) {
            std::cout << "    error: " << crash << "\n";
            unexpected = true;
        }
        if (checks.empty()) unexpected = true;
        for (const Check* f : failed) {
            const bool known = kUnattainable.count(f->name) > 0;
            std::cout << "    " << (known ? "known unattainable: " : "failed: ") << f->name << " -- " << f->detail
                      << "\n";
            if (!known) unexpected = true;
        }
    }
    std::cout << passed_criteria << "/" << criteria.size() << " criteria pass";
    if (!unexpected && passed_criteria < criteria.size()) std::cout << "; remaining failures are documented";
    std::cout << "\n";
    return unexpected ? 1 : 0;
}
