#include "plateau/verify.hpp"

#include "plateau/battery.hpp"
#include "plateau/codes.hpp"
#include "plateau/derived.hpp"
#include "plateau/field_core.hpp"
#include "plateau/function_zoo.hpp"
#include "plateau/oracles.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace plateau {

namespace {

using CF = CodeFamily;

void add(std::vector<Check>& out, const std::string& scope, const std::string& name, bool pass,
         const std::string& detail = "") {
    out.push_back({scope, name, pass, detail});
}

std::string params(std::size_t n, std::size_t k, std::optional<std::size_t> d) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + (d ? std::to_string(*d) : std::string("-")) + "]";
}

std::string join(const std::vector<std::string>& v, const std::string& sep = "; ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

// Ranks matching a per-coordinate pattern: 'a' any, '0' zero, '*' nonzero.
std::vector<std::uint64_t> pattern_set(const std::string& pat, int p) {
    const int n = static_cast<int>(pat.size());
    std::vector<std::uint64_t> out;
    std::vector<int> d(n);
    const std::uint64_t N = ipow(p, n);
    for (std::uint64_t r = 0; r < N; ++r) {
        rank_to_digits(r, p, n, d.data());
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (pat[i] == '0') ok = d[i] == 0;
            if (pat[i] == '*') ok = d[i] != 0;
        }
        if (ok) out.push_back(r);
    }
    return out;
}

bool in_range(CodeFamily fam, const FunctionAnalysis& a) {
    return a.ctx && a.family && a.family->member && construction_range_violations(construction_of(fam), *a.ctx).empty();
}

std::string k_class(const CodeContext& c) {
    if (c.k == 0) return "k=0";
    if (c.k == big_pow(c.p, c.n - c.s)) return "k=p^(n-s)";
    return "0<k<p^(n-s)";
}

}  // namespace

const std::vector<GoldenCode>& golden_codes() {
    static const std::vector<GoldenCode> g = {
        {2, CF::Cf, "C_f", 728, 7, 459, "1+180z^459+1862z^486+144z^513", 728, 721, 2},
        {2, CF::CfPunct, "C~_f", 486, 7, 306, "1+72z^306+180z^315+1698z^324+144z^333+90z^342+2z^486", 486, 479, 3},
        {2, CF::D0, "C_{D_{f,0}\\{0}}", 242, 6, 144, "1+90z^144+566z^162+72z^180", 242, 236, 2},
        {2, CF::Dsq, "C_{D_{f,sq}}", 216, 6, 126, "1+72z^126+576z^144+80z^162", 216, 210, 2},
        {2, CF::Dnsq, "C_{D_{f,nsq}}", 270, 6, 162, "1+80z^162+558z^180+90z^198", 270, 264, 2},
        {2, CF::D0Punct, "C~_{D_{f,0}\\{0}}", 121, 6, 72, "1+90z^72+566z^81+72z^90", 121, 115, 3},
        {2, CF::DsqPunct, "C~_{D_{f,sq}}", 108, 6, 63, "1+72z^63+576z^72+80z^81", 108, 102, 3},
        {2, CF::DnsqPunct, "C~_{D_{f,nsq}}", 135, 6, 81, "1+80z^81+558z^90+90z^99", 135, 129, 3},
        {1, CF::Cf, "C_f", 15624, 7, 12000, "1+180z^12000+1600z^12375+75624z^12500+320z^12625+400z^13000", 15624, 15617,
         2},
        {1, CF::CfPunct, "C~_f", 12000, 7, 9200,
         "1+100z^9200+256z^9500+1600z^9575+75000z^9600+320z^9625+800z^9700+44z^10000+4z^12000", 12000, 11993, 3},
        {1, CF::D0, "C_{D_{f,0}\\{0}}", 3624, 6, 2500, "1+44z^2500+400z^2800+15000z^2900+80z^3000+100z^3300", 3624, 3618,
         2},
        {1, CF::Dsq, "C_{D_{f,sq}}", 6000, 6, 4500, "1+40z^4500+300z^4600+15000z^4800+84z^5000+200z^5100", 6000, 5994, 2},
        {1, CF::Dnsq, "C_{D_{f,nsq}}", 6000, 6, 4500, "1+40z^4500+300z^4600+15000z^4800+84z^5000+200z^5100", 6000, 5994,
         2},
        {1, CF::D0Punct, "C~_{D_{f,0}\\{0}}", 906, 6, 625, "1+44z^625+400z^700+15000z^725+80z^750+100z^825", 906, 900, 3},
        {1, CF::DsqPunct, "C~_{D_{f,sq}}", 1500, 6, 1125, "1+40z^1125+300z^1150+15000z^1200+84z^1250+200z^1275", 1500,
         1494, 3},
        {1, CF::DnsqPunct, "C~_{D_{f,nsq}}", 1500, 6, 1125, "1+40z^1125+300z^1150+15000z^1200+84z^1250+200z^1275", 1500,
         1494, 3},
    };
    return g;
}

std::vector<Check> verify_examples(int example, const VerifyOptions& opt) {
    std::vector<Check> out;
    for (int ex : {2, 1}) {
        if (example != 0 && example != ex) continue;
        FunctionAnalysis a = analyze_function(example_function(ex), opt.jobs);
        DefiningSets sets = defining_sets(a.f);
        for (const auto& g : golden_codes()) {
            if (g.example != ex) continue;
            const std::string name = "example " + std::to_string(ex) + " " + g.name;
            try {
                FamilyRun run = run_family(a, g.family, sets, opt.jobs);
                const CodeReport& r = run.report;
                std::vector<std::string> bad;
                if (r.length != g.length || r.dimension != g.dimension || r.min_distance != g.min_distance)
                    bad.push_back("parameters " + params(r.length, r.dimension, r.min_distance));
                if (r.wd.enumerator() != g.enumerator) bad.push_back("enumerator " + r.wd.enumerator());
                const std::size_t dual_k = r.length - r.dimension;
                const int dcol = run.dual_distance_columns.value_or(-1);
                if (run.dual.length != g.dual_length || dual_k != g.dual_dimension || run.dual.dimension != dual_k)
                    bad.push_back("dual length/dimension");
                if (dcol != static_cast<int>(g.dual_distance)) bad.push_back("dual distance by columns " + std::to_string(dcol));
                if (run.dual.min_distance != g.dual_distance) bad.push_back("dual distance by MacWilliams");
                if (!run.dual.pless_agrees) bad.push_back("power moments disagree with MacWilliams");
                for (const auto& d : run.diff) bad.push_back(d);
                if (!run.prediction) bad.push_back("no table prediction");
                std::string detail = params(r.length, r.dimension, r.min_distance) + " " + r.wd.enumerator() + ", dual " +
                                     params(dual_k > 0 ? r.length : 0, dual_k, run.dual.min_distance);
                if (run.prediction) detail += ", table " + run.prediction->table;
                add(out, "examples", name, bad.empty(), bad.empty() ? detail : join(bad));
            } catch (const std::exception& e) {
                add(out, "examples", name, false, e.what());
            }
        }
    }
    return out;
}

std::vector<Check> verify_classification(const VerifyOptions& opt) {
    std::vector<Check> out;
    struct Facts {
        int ex, p, s, eps0, t, t_prime;
        std::uint64_t k;
        std::string plus, minus, dual_plus, dual_minus, dual_poly;
    };
    const std::vector<Facts> facts = {
        {1, 5, 2, 1, 4, 2, 125, "aa0a00", "aa*a00", "aaa0aa", "aaa*aa",
         "x1^3*x2*x3^4 + 4*x1^3*x2 + x1^2*x3^4 + 3*x2^2*x3^4 + 4*x3*x4"},
        {2, 3, 1, -1, 2, 2, 162, "aaa*a0", "aaa0a0", "aaaa0a", "aaaa*a",
         "2*x1^2*x4^2 + 2*x1^2 + 2*x2^2 + 2*x3^2 + 2*x4*x5"},
    };
    for (const auto& F : facts) {
        const std::string pre = "example " + std::to_string(F.ex) + " ";
        FunctionAnalysis a = analyze_function(example_function(F.ex), opt.jobs);
        if (!a.prof || !a.dual || !a.family) {
            add(out, "classification", pre + "plateaued with bent dual", false, "classification failed");
            continue;
        }
        const auto& pr = *a.prof;
        const auto& du = *a.dual;
        const auto& fa = *a.family;
        add(out, "classification", pre + "s", pr.s == F.s, "s=" + std::to_string(pr.s));
        add(out, "classification", pre + "type", pr.eps0 == F.eps0, pr.type_string());
        add(out, "classification", pre + "non-weakly regular", !pr.weakly_regular);
        add(out, "classification", pre + "k = #B+(f)", pr.k == F.k, "k=" + std::to_string(pr.k));
        add(out, "classification", pre + "family member", fa.member, join(fa.reasons));
        add(out, "classification", pre + "t", fa.t == F.t, fa.t ? "t=" + std::to_string(*fa.t) : "none");
        add(out, "classification", pre + "t'", fa.t_prime == F.t_prime,
            fa.t_prime ? "t'=" + std::to_string(*fa.t_prime) : "none");
        add(out, "classification", pre + "B+(f)", pr.plus_set() == pattern_set(F.plus, F.p), F.plus);
        add(out, "classification", pre + "B-(f)", pr.minus_set() == pattern_set(F.minus, F.p), F.minus);
        add(out, "classification", pre + "B+(f*)", du.plus_set() == pattern_set(F.dual_plus, F.p), F.dual_plus);
        add(out, "classification", pre + "B-(f*)", du.minus_set() == pattern_set(F.dual_minus, F.p), F.dual_minus);
        PFunction g = polynomial_function(F.dual_poly, F.p, a.f.n);
        std::uint64_t bad = 0;
        for (std::uint64_t r = 0; r < a.f.size(); ++r)
            if (pr.supp[r] && pr.dual[r] != g(r)) ++bad;
        add(out, "classification", pre + "f* on the support", bad == 0,
            F.dual_poly + (bad ? ", mismatches " + std::to_string(bad) : ""));
    }
    return out;
}

std::vector<Check> verify_lemmas(const VerifyOptions& opt) {
    std::vector<Check> out;
    for (const auto& e : extended_battery()) {
        FunctionAnalysis a = analyze_function(e.f, opt.jobs);
        if (!a.prof || !a.family) {
            add(out, "lemmas", e.name, false, "not plateaued");
            continue;
        }
        OracleOptions oo;
        oo.jobs = opt.jobs;
        // golden functions are swept exhaustively even above the default threshold
        oo.force_exhaustive = e.name.rfind("example", 0) == 0;
        auto tallies = exp_sum_oracles(e.f, *a.prof, *a.family, oo);
        for (auto& t : value_oracles(e.f, *a.prof, a.dual, *a.family, opt.jobs)) tallies.push_back(t);
        bool ok = true;
        std::uint64_t q = 0, mm = 0;
        std::vector<std::string> parts;
        for (const auto& t : tallies) {
            ok = ok && t.ok();
            q += t.queries;
            mm += t.mismatches;
            if (t.skipped)
                parts.push_back(t.name + " skipped (" + t.note + ")");
            else if (t.mismatches)
                parts.push_back(t.name + ": " + std::to_string(t.mismatches) + " mismatches, first " +
                                join(t.first_mismatches, ", "));
        }
        std::string detail = std::to_string(q) + " queries, " + std::to_string(mm) + " mismatches" +
                             (tallies.empty() || tallies[0].exhaustive ? ", exhaustive" : ", sampled");
        if (!parts.empty()) detail += "; " + join(parts);
        add(out, "lemmas", e.name, ok, detail);
    }
    return out;
}

std::vector<Check> verify_tables(const VerifyOptions& opt) {
    std::vector<Check> out;
    std::set<std::pair<std::string, std::string>> covered;
    std::set<std::string> kclasses, parities, types;
    std::size_t compared = 0;
    for (const auto& e : extended_battery()) {
        FunctionAnalysis a = analyze_function(e.f, opt.jobs);
        if (!a.ctx || !a.family || !a.family->member) {
            add(out, "tables", e.name, false, "not a family member");
            continue;
        }
        DefiningSets sets = defining_sets(e.f);
        std::vector<std::string> bad, used;
        for (auto fam : all_families()) {
            if (!in_range(fam, a)) continue;
            try {
                FamilyRun run = run_family(a, fam, sets, opt.jobs);
                ++compared;
                covered.insert({run.prediction->table, run.prediction->column});
                used.push_back(family_name(fam) + ":" + run.prediction->table);
                for (const auto& d : run.diff) bad.push_back(family_name(fam) + ": " + d);
            } catch (const std::exception& ex) {
                bad.push_back(family_name(fam) + ": " + ex.what());
            }
        }
        kclasses.insert(k_class(*a.ctx));
        parities.insert(a.ctx->even() ? "even" : "odd");
        types.insert(a.ctx->eps0 > 0 ? "(+)" : "(-)");
        add(out, "tables", e.name, bad.empty(), bad.empty() ? join(used, " ") : join(bad));
    }
    std::vector<std::string> missing;
    for (const auto& t : weight_tables())
        for (const auto& c : t.columns)
            if (!covered.count({t.id, c.label})) missing.push_back(t.id + "/" + c.label);
    add(out, "tables", "coverage of every table column", missing.empty(),
        missing.empty() ? std::to_string(covered.size()) + " columns, " + std::to_string(compared) + " codes compared"
                        : "missing " + join(missing));
    add(out, "tables", "coverage of k classes, parities and types",
        kclasses.size() == 3 && parities.size() == 2 && types.size() == 2,
        join(std::vector<std::string>(kclasses.begin(), kclasses.end()), ", "));
    SweepResult sw = sanity_sweep();
    add(out, "tables", "parameter sweep (totals, nonnegativity, dual A3/A4 vs power moments)",
        sw.failures.empty() && sw.dual_failures.empty(),
        std::to_string(sw.contexts) + " contexts, " + std::to_string(sw.predictions) + " predictions, " +
            std::to_string(sw.dual_checks) + " dual checks, " + std::to_string(sw.infeasible.size()) +
            " unrealizable contexts" + (sw.failures.empty() ? "" : "; " + join(sw.failures)) +
            (sw.dual_failures.empty() ? "" : "; " + join(sw.dual_failures)));
    for (const auto& t : weight_tables())
        for (const auto& c : t.corrections) add(out, "tables", "correction applied to table " + t.id, true, c);
    return out;
}

std::vector<Check> verify_self_orthogonality(const VerifyOptions& opt) {
    std::vector<Check> out;
    std::size_t claims = 0;
    for (const auto& e : extended_battery()) {
        FunctionAnalysis a = analyze_function(e.f, opt.jobs);
        if (!a.ctx || !a.family) continue;
        std::optional<DefiningSets> orbit, pm;
        std::vector<std::string> bad, good;
        if (a.family->member) {
            for (auto fam : all_families()) {
                if (!in_range(fam, a)) continue;
                PredictedParameters pp = predict_parameters(fam, *a.ctx);
                if (!pp.self_orthogonal || !*pp.self_orthogonal) continue;
                const bool use_pm = construction_of(fam) == 6 && e.f.p != 3;
                auto& sets = use_pm ? pm : orbit;
                if (!sets) sets = defining_sets(e.f, use_pm ? RepSelector::PlusMinus : RepSelector::Orbit);
                GeneratorMatrix G = build_family(e.f, fam, *sets);
                ++claims;
                (is_self_orthogonal(G.G) ? good : bad).push_back(family_name(fam));
            }
        }
        SoChecks so = so_sufficient_checks(e.f);
        if (so.symmetric_criterion) {
            ++claims;
            (is_self_orthogonal(build_Cf(e.f).G) ? good : bad).push_back("Cf (symmetric, sum i^2 N_i = 0)");
        }
        if (so.even_level_criterion) {
            if (!orbit) orbit = defining_sets(e.f);
            for (auto* D : {&orbit->D0, &orbit->Dsq, &orbit->Dnsq}) {
                if (D->size() == 0) continue;
                ++claims;
                (is_self_orthogonal(build_CD(e.f.space, *D).G) ? good : bad).push_back(D->tag + " (even l_a)");
            }
        }
        if (good.empty() && bad.empty()) continue;
        add(out, "so", e.name, bad.empty(),
            bad.empty() ? "Gram zero: " + join(good, ", ") : "Gram nonzero: " + join(bad, ", "));
    }
    add(out, "so", "claims checked", claims > 0, std::to_string(claims) + " codes");
    // outside the hypothesis: p = 3 with n+s = 4
    std::size_t not_so = 0;
    for (const auto& e : builtin_battery()) {
        if (e.f.p != 3) continue;
        FunctionAnalysis a = analyze_function(e.f, opt.jobs);
        if (!a.ctx || a.ctx->n + a.ctx->s != 4 || !in_range(CF::CfPunct, a)) continue;
        PredictedParameters pp = predict_parameters(CF::CfPunct, *a.ctx);
        const bool claimed = pp.self_orthogonal.value_or(false);
        const bool so = is_self_orthogonal(build_Cf_punctured(e.f).G);
        not_so += !so;
        add(out, "so", "outside the hypothesis: C~_f of " + e.name, !claimed,
            std::string("claimed=") + (claimed ? "yes" : "no") + ", self-orthogonal=" + (so ? "yes" : "no"));
    }
    add(out, "so", "negative control: some p=3, n+s=4 C~_f is not self-orthogonal", not_so > 0,
        std::to_string(not_so) + " codes with nonzero Gram matrix");
    return out;
}

std::vector<Check> verify_lcd(const VerifyOptions&) {
    std::vector<Check> out;
    struct Row {
        int thm, n, s, eps0;
        std::size_t len, dim;
    };
    const std::vector<Row> rows = {
        {10, 4, 2, 1, 41, 36},    {10, 4, 2, -1, 77, 72},   {10, 5, 1, 1, 150, 144},  {10, 5, 1, -1, 186, 180},
        {10, 5, 3, 1, 114, 108},  {10, 5, 3, -1, 222, 216}, {10, 3, 2, 1, 22, 18},    {10, 3, 2, -1, 22, 18},
        {10, 4, 1, 1, 59, 54},    {10, 4, 3, -1, 59, 54},   {10, 5, 0, 1, 168, 162},  {10, 5, 2, -1, 168, 162},
        {10, 5, 4, 1, 168, 162},  {11, 5, 1, -1, 36, 31},   {11, 5, 1, 1, 54, 49},    {11, 6, 0, -1, 118, 112},
        {11, 6, 0, 1, 136, 130},  {11, 6, 2, -1, 100, 94},  {11, 6, 2, 1, 154, 148},  {11, 4, 1, 1, 17, 13},
        {11, 4, 1, -1, 17, 13},   {11, 5, 0, 1, 45, 40},    {11, 5, 2, -1, 45, 40},   {11, 6, 1, 1, 127, 121},
        {11, 6, 3, -1, 127, 121}, {12, 5, 1, -1, 50, 45},   {12, 6, 0, 1, 123, 117},  {12, 6, 0, -1, 132, 126},
        {12, 6, 2, -1, 141, 135}, {12, 5, 2, -1, 32, 27},   {12, 6, 3, -1, 87, 81},
    };
    for (const auto& r : rows) {
        std::string name = "construction " + std::to_string(r.thm) + " n=" + std::to_string(r.n) +
                           " s=" + std::to_string(r.s) + (r.eps0 > 0 ? " (+)" : " (-)") + " -> " +
                           params(r.len, r.dim, 3);
        try {
            LcdReport rep = r.thm == 10   ? lcd_from_function(quadratic_instance(3, r.n, r.s, r.eps0))
                            : r.thm == 11 ? lcd_ternary_zero_set(r.n, r.s, r.eps0)
                                          : lcd_square_set(3, r.n, r.s, r.eps0);
            std::vector<std::string> bad;
            if (rep.dual.length != r.len || rep.dual.dimension != r.dim)
                bad.push_back("got " + params(rep.dual.length, rep.dual.dimension, rep.dual_distance_columns));
            if (!rep.gram_nonsingular) bad.push_back("G'G'^T singular");
            if (rep.dual_distance_columns != 3) bad.push_back("distance by columns " + std::to_string(rep.dual_distance_columns));
            if (rep.dual_distance_moments != 3) bad.push_back("distance by moments " + std::to_string(rep.dual_distance_moments));
            if (rep.dual_lcd_direct && !*rep.dual_lcd_direct) bad.push_back("dual not LCD");
            add(out, "lcd", name, bad.empty(),
                bad.empty() ? "Gram nonsingular, d=3 by columns and by power moments" +
                                  std::string(rep.dual_lcd_direct ? ", dual LCD checked directly" : "")
                            : join(bad));
        } catch (const std::exception& e) {
            add(out, "lcd", name, false, e.what());
        }
    }
    for (int p : {3, 5, 7}) {
        std::size_t ok = random_basis_gram_check(p, 5, 200, 20240 + p);
        add(out, "lcd", "random bases have nonsingular Gram matrix, p=" + std::to_string(p), ok == 200,
            std::to_string(ok) + "/200");
    }
    return out;
}

std::vector<Check> verify_quantum(const VerifyOptions&) {
    std::vector<Check> out;
    struct Row {
        int thm, p, n, s, eps0;
        std::size_t len, dim;
        std::optional<std::size_t> hamming;
    };
    const std::vector<Row> rows = {
        {7, 7, 3, 1, 1, 252, 247, {}},  {7, 7, 3, 1, -1, 336, 331, {}}, {7, 7, 3, 0, 1, 294, 289, {}},
        {7, 7, 2, 1, 1, 42, 38, 38},    {9, 7, 4, 0, -1, 175, 169, {}}, {9, 7, 3, 0, 1, 28, 23, {}},
        {9, 7, 3, 0, -1, 21, 16, {}},   {9, 7, 4, 1, 1, 196, 190, {}},  {9, 7, 4, 1, -1, 147, 141, {}},
    };
    auto describe = [](const QuantumParams& q) {
        return "[[" + std::to_string(q.length) + "," + std::to_string(q.dimension) + "," + std::to_string(q.distance) +
               "]]_" + std::to_string(q.p) + " k1=" + std::to_string(q.k1) + " k2=" + std::to_string(q.k2) +
               " d1=" + std::to_string(q.d1) + " d2=" + std::to_string(q.d2) + " chain=" + (q.chain ? "yes" : "no") +
               " hamming max k=" + (q.hamming_max_k ? std::to_string(*q.hamming_max_k) : std::string("none"));
    };
    for (const auto& r : rows) {
        std::string name = "construction " + std::to_string(r.thm) + " p=" + std::to_string(r.p) +
                           " n=" + std::to_string(r.n) + " s=" + std::to_string(r.s) +
                           (r.eps0 > 0 ? " (+)" : " (-)") + " -> [[" + std::to_string(r.len) + "," +
                           std::to_string(r.dim) + ",3]]_" + std::to_string(r.p);
        try {
            QuantumParams q = r.thm == 7 ? quantum_from_function(quadratic_instance(r.p, r.n, r.s, r.eps0))
                                         : quantum_square_set(r.p, r.n, r.s, r.eps0);
            std::vector<std::string> bad;
            if (q.length != r.len || q.dimension != r.dim || q.distance != 3) bad.push_back("got " + describe(q));
            if (!q.chain) bad.push_back("chain fails");
            if (q.k2 < q.k1 + 2) bad.push_back("k2 < k1 + 2");
            if (r.hamming && q.hamming_max_k != r.hamming) bad.push_back("hamming verdict");
            add(out, "quantum", name, bad.empty(), bad.empty() ? describe(q) : join(bad));
        } catch (const std::exception& e) {
            add(out, "quantum", name, false, e.what());
        }
    }
    for (auto [n, s, eps] : std::vector<std::tuple<int, int, int>>{{5, 0, 1}, {5, 0, -1}, {6, 0, -1}, {6, 1, 1}}) {
        std::string name = "construction 8 p=3 n=" + std::to_string(n) + " s=" + std::to_string(s) +
                           (eps > 0 ? " (+)" : " (-)");
        try {
            QuantumParams q = quantum_ternary_zero_set(n, s, eps);
            bool ok = q.closed_form && q.closed_form->first == q.length && q.closed_form->second == q.dimension &&
                      q.distance == 3 && q.chain && q.k2 >= q.k1 + 2;
            add(out, "quantum", name, ok, describe(q));
        } catch (const std::exception& e) {
            add(out, "quantum", name, false, e.what());
        }
    }
    for (auto [ex, len, dim] : std::vector<std::tuple<int, std::size_t, std::size_t>>{{2, 486, 478}, {1, 12000, 11992}}) {
        const int p = ex == 1 ? 5 : 3;
        std::string name = "construction 7 on example " + std::to_string(ex) + " -> [[" + std::to_string(len) + "," +
                           std::to_string(dim) + ",3]]_" + std::to_string(p);
        try {
            QuantumParams q = quantum_from_function(example_function(ex));
            bool ok = q.length == len && q.dimension == dim && q.distance == 3 && q.chain && q.k2 >= q.k1 + 2;
            add(out, "quantum", name, ok, describe(q));
        } catch (const std::exception& e) {
            add(out, "quantum", name, false, e.what());
        }
    }
    auto hk = quantum_hamming_max_k(7, 42, 3);
    add(out, "quantum", "quantum Hamming bound at length 42, d=3, p=7", hk == std::optional<std::size_t>(38),
        "max k=" + (hk ? std::to_string(*hk) : std::string("none")));
    return out;
}

std::vector<Check> verify_properties(const VerifyOptions& opt) {
    std::vector<Check> out;
    // Parseval on random functions, and the fast transform against the direct sum
    {
        std::mt19937_64 rng(7);
        const std::vector<std::pair<int, int>> shapes = {{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}};
        std::size_t ok = 0, naive_ok = 0, naive_runs = 0;
        for (int i = 0; i < 500; ++i) {
            auto [p, n] = shapes[i % shapes.size()];
            PFunction f(p, n);
            for (auto& v : f.table) v = static_cast<std::uint8_t>(rng() % p);
            WalshSpectrum W = walsh_transform(f, opt.jobs);
            // each |W|^2 lies in the real subfield; only the sum is rational
            CycInt sum = CycInt::zero(p);
            for (std::uint64_t r = 0; r < W.size(); ++r) {
                CycInt w = W.value(r);
                sum += w * w.conj();
            }
            auto total = sum.as_integer();
            if (total && *total == big_pow(p, 2 * n)) ++ok;
            if (i < 100) {
                ++naive_runs;
                if (walsh_transform_naive(f) == W) ++naive_ok;
            }
        }
        add(out, "properties", "Parseval on 500 random functions", ok == 500, std::to_string(ok) + "/500");
        add(out, "properties", "fast transform equals direct sum", naive_ok == naive_runs,
            std::to_string(naive_ok) + "/" + std::to_string(naive_runs));
    }
    std::size_t dd_checked = 0, dd_bad = 0, inv_checked = 0, mac_checked = 0, a3_checked = 0;
    std::vector<std::string> inv_bad, mac_bad, a3_bad;
    for (const auto& e : builtin_battery()) {
        FunctionAnalysis a = analyze_function(e.f, opt.jobs);
        if (!a.prof) continue;
        if (a.dual) {
            ++dd_checked;
            bool ok = a.dual->double_dual_ok;
            for (std::uint64_t r = 0; r < e.f.size() && ok; ++r)
                ok = a.dual->dual_of_dual[r] == e.f(neg_rank(r, e.f.p, e.f.n));
            if (!ok) ++dd_bad;
        }
        if (!a.family || !a.family->member || !a.ctx) continue;
        DefiningSets orbit = defining_sets(e.f, RepSelector::Orbit);
        DefiningSets pm = defining_sets(e.f, RepSelector::PlusMinus);
        std::mt19937_64 rng(e.f.size());
        for (auto fam : all_families()) {
            GeneratorMatrix G = build_family(e.f, fam, orbit);
            if (G.length() == 0) continue;
            WeightDistribution wd = weight_distribution(G.G, opt.jobs);
            // reversed column order
            Matrix R(G.G.p, G.G.rows, G.G.cols);
            for (std::size_t i = 0; i < R.rows; ++i)
                for (std::size_t j = 0; j < R.cols; ++j) R.at(i, j) = G.G.at(i, R.cols - 1 - j);
            // columns rescaled by random nonzero constants (another representative choice)
            Matrix S = G.G;
            for (std::size_t j = 0; j < S.cols; ++j) {
                int c = 1 + static_cast<int>(rng() % (S.p - 1));
                for (std::size_t i = 0; i < S.rows; ++i) S.at(i, j) = static_cast<std::uint8_t>(S.at(i, j) * c % S.p);
            }
            ++inv_checked;
            if (!(weight_distribution(R, opt.jobs) == wd) || !(weight_distribution(S, opt.jobs) == wd))
                inv_bad.push_back(e.name + " " + family_name(fam));
            if (is_sq_family(fam) || is_nsq_family(fam)) {
                GeneratorMatrix P = build_family(e.f, fam, pm);
                if (!(weight_distribution(P.G, opt.jobs) == wd)) inv_bad.push_back(e.name + " " + family_name(fam) + " +-");
            }
            const std::size_t k = matrix_rank(G.G);
            if (G.length() <= 1000) {
                ++mac_checked;
                WeightDistribution dual = macwilliams(wd, k);
                if (dual.total() != big_pow(e.f.p, G.length() - k) || dual.at(0) != 1)
                    mac_bad.push_back(e.name + " " + family_name(fam));
            }
            if (in_range(fam, a)) {
                auto low = predicted_dual_low_weights(fam, *a.ctx);
                if (low && low->A3) {
                    ++a3_checked;
                    WeightDistribution mw = macwilliams(wd, k, 4);
                    auto pl = pless_moments(wd, k, 4);
                    bool ok = BigRational(mw.at(3)) == *low->A3 && pl[3] == mw.at(3);
                    if (low->A4) ok = ok && BigRational(mw.at(4)) == *low->A4 && pl[4] == mw.at(4);
                    if (!ok) a3_bad.push_back(e.name + " " + family_name(fam));
                }
            }
        }
    }
    add(out, "properties", "f** = f(-x) on dual-bent battery members", dd_bad == 0 && dd_checked > 0,
        std::to_string(dd_checked - dd_bad) + "/" + std::to_string(dd_checked));
    add(out, "properties", "weight distribution invariant under column order and representatives", inv_bad.empty(),
        inv_bad.empty() ? std::to_string(inv_checked) + " codes" : join(inv_bad));
    add(out, "properties", "MacWilliams totals equal p^(m-k)", mac_bad.empty() && mac_checked > 0,
        mac_bad.empty() ? std::to_string(mac_checked) + " codes" : join(mac_bad));
    add(out, "properties", "dual A3 (and A4): MacWilliams = power moments = closed form", a3_bad.empty() && a3_checked > 0,
        a3_bad.empty() ? std::to_string(a3_checked) + " codes" : join(a3_bad));
    // determinism under the parallelism degree
    {
        auto render = [](int jobs) {
            Json j;
            FunctionAnalysis a = analyze_function(example_function(2), jobs);
            j["function"] = function_report_json(a);
            DefiningSets sets = defining_sets(a.f);
            for (auto fam : all_families()) j[family_name(fam)] = family_run_json(run_family(a, fam, sets, jobs));
            PFunction g = quadratic_instance(5, 4, 1, -1);
            j["spectrum"] = walsh_transform(g, jobs) == walsh_transform(g, 1);
            return j.dump();
        };
        const std::string a = render(1), b = render(8);
        add(out, "properties", "byte-identical reports with jobs 1 and 8", a == b, std::to_string(a.size()) + " bytes");
    }
    return out;
}

const std::vector<std::string>& verify_scope_names() {
    static const std::vector<std::string> names = {"examples", "classification", "lemmas", "tables", "so",
                                                   "lcd",      "quantum",        "properties", "all"};
    return names;
}

std::vector<Check> verify_scope(const std::string& scope, const VerifyOptions& opt) {
    if (scope == "examples") {
        auto a = verify_examples(0, opt);
        auto b = verify_classification(opt);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    if (scope == "classification") return verify_classification(opt);
    if (scope == "lemmas") return verify_lemmas(opt);
    if (scope == "tables") return verify_tables(opt);
    if (scope == "so") return verify_self_orthogonality(opt);
    if (scope == "lcd") return verify_lcd(opt);
    if (scope == "quantum") return verify_quantum(opt);
    if (scope == "properties") return verify_properties(opt);
    if (scope == "all") {
        std::vector<Check> out;
        for (const auto& s : {"examples", "lemmas", "tables", "so", "lcd", "quantum", "properties"}) {
            auto part = verify_scope(s, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown verify scope: " + scope);
}

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json checks_json(const std::vector<Check>& checks) {
    Json arr = Json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        passed += c.pass;
        arr.push_back(Json{{"scope", c.scope}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return Json{{"passed", passed}, {"failed", checks.size() - passed}, {"checks", arr}};
}

}  // namespace plateau
