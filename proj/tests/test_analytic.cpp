#include "doctest.h"

#include "plateau/analytic.hpp"
#include "plateau/battery.hpp"
#include "plateau/derived.hpp"
#include "plateau/function_zoo.hpp"
#include "plateau/report.hpp"

using namespace plateau;

TEST_CASE("family names round trip") {
    CHECK(all_families().size() == 8);
    for (auto fam : all_families()) CHECK(parse_family(family_name(fam)) == fam);
    CHECK_FALSE(parse_family("nope"));
    CHECK(family_name(CodeFamily::DsqPunct) == "Dsq-punct");
}

TEST_CASE("type rule for the dual sign") {
    // eps0* = eps0 iff p^{n+s} = 1 mod 4
    CHECK(derived_eps0_star(3, 5, 1, -1) == -1);
    CHECK(derived_eps0_star(3, 4, 1, -1) == 1);
    CHECK(derived_eps0_star(5, 4, 1, -1) == -1);
}

TEST_CASE("context consistency") {
    CHECK(context_violations(CodeContext::make(3, 6, 1, -1, 162)).empty());
    CHECK_FALSE(context_violations(CodeContext::make(3, 6, 1, -1, 243)).empty());
    CHECK_FALSE(context_violations(CodeContext::make(3, 6, 1, 1, 0)).empty());
    CHECK_FALSE(context_violations(CodeContext::make(3, 6, 1, 1, 10)).empty());
}

TEST_CASE("every table column sums to the code size") {
    for (const auto& t : weight_tables()) {
        CHECK(t.weights.size() == t.mult.size());
        for (const auto& row : t.mult) CHECK(row.size() == t.columns.size());
    }
    CodeContext c = CodeContext::make(3, 6, 1, -1, 162);
    for (auto fam : all_families()) {
        PredictedDistribution pd = predict_for(fam, c);
        BigInt total = 0;
        for (const auto& [w, a] : pd.rows) total += a;
        CHECK(total == big_pow(3, static_cast<long long>(pd.dimension)));
    }
}

TEST_CASE("predictions match enumeration on the second worked example") {
    FunctionAnalysis a = analyze_function(example_function(2));
    REQUIRE(a.ctx);
    DefiningSets sets = defining_sets(a.f);
    for (auto fam : all_families()) {
        FamilyRun run = run_family(a, fam, sets);
        REQUIRE(run.prediction);
        CHECK_MESSAGE(run.diff.empty(), family_name(fam));
        CHECK(run.spectral_agrees == std::optional<bool>(true));
    }
}

TEST_CASE("predictions match enumeration on a small battery") {
    int runs = 0;
    for (const auto& e : builtin_battery()) {
        if (e.f.p != 3 || e.f.n > 4) continue;
        FunctionAnalysis a = analyze_function(e.f);
        if (!a.ctx || !a.family || !a.family->member) continue;
        DefiningSets sets = defining_sets(a.f);
        for (auto fam : all_families()) {
            if (!construction_range_violations(construction_of(fam), *a.ctx).empty()) continue;
            FamilyRun run = run_family(a, fam, sets);
            if (!run.prediction) continue;
            ++runs;
            CHECK_MESSAGE(run.diff.empty(), std::string(e.name + " " + family_name(fam)));
        }
    }
    CHECK(runs > 20);
}

TEST_CASE("table comparator reports differences") {
    WeightDistribution a, b;
    a.p = b.p = 3;
    a.length = b.length = 4;
    a.A = {{0, 1}, {3, 8}};
    b.A = {{0, 1}, {3, 6}, {4, 2}};
    CHECK(compare(a, a).empty());
    CHECK_FALSE(compare(a, b).empty());
}

TEST_CASE("closed-form sanity sweep") {
    SweepResult r = sanity_sweep();
    CHECK(r.predictions > 0);
    CHECK(r.failures.empty());
    CHECK(r.dual_failures.empty());
}

TEST_CASE("quadratic instances have the requested type") {
    for (int p : {3, 5, 7})
        for (int n = 2; n <= 4; ++n)
            for (int s = 0; s <= n - 2; ++s)
                for (int eps : {1, -1}) {
                    auto prof = classify_plateaued(quadratic_instance(p, n, s, eps));
                    REQUIRE(prof);
                    CHECK(prof->s == s);
                    CHECK(prof->eps0 == eps);
                }
}
