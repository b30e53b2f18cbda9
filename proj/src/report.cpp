#include "plateau/report.hpp"

#include "plateau/field_core.hpp"

#include <stdexcept>

namespace plateau {

namespace {

constexpr std::uint64_t kListSetsUpTo = 243;

Json opt_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json sphere_json(const std::optional<SpherePacking>& sp) {
    if (!sp) return nullptr;
    return Json{{"ball", to_string(sp->ball)},
                {"holds", sp->holds},
                {"equality", sp->equality},
                {"k_plus_one_excluded", sp->k_plus_one_excluded},
                {"d_plus_one_excluded", sp->d_plus_one_excluded}};
}

Json rank_list(const std::vector<std::uint64_t>& ranks, int p, int n) {
    Json a = Json::array();
    for (auto r : ranks) a.push_back(digits_string(r, p, n));
    return a;
}

}  // namespace

std::string digits_string(std::uint64_t rank, int p, int n) {
    std::vector<int> d(n);
    rank_to_digits(rank, p, n, d.data());
    std::string s;
    for (int x : d) s += static_cast<char>('0' + x);
    return s;
}

Json distribution_json(const WeightDistribution& wd) {
    Json a = Json::array();
    for (const auto& [w, c] : wd.A)
        if (c != 0) a.push_back(Json::array({w, to_string(c)}));
    return a;
}

Json code_report_json(const CodeReport& rep) {
    Json j;
    j["length"] = rep.length;
    j["dimension"] = rep.dimension;
    j["min_distance"] = opt_size(rep.min_distance);
    j["weight_distribution"] = distribution_json(rep.wd);
    j["enumerator"] = rep.wd.enumerator();
    j["flags"] = Json{{"self_orthogonal", rep.self_orthogonal},
                      {"lcd", rep.lcd},
                      {"minimal", rep.minimal},
                      {"sphere_packing", sphere_json(rep.sphere_packing)}};
    j["provenance"] = rep.provenance;
    j["warnings"] = rep.warnings;
    return j;
}

Json dual_report_json(const DualReport& rep) {
    Json j;
    j["length"] = rep.length;
    j["dimension"] = rep.dimension;
    j["min_distance"] = opt_size(rep.min_distance);
    j["low_weights_up_to"] = rep.max_weight_computed;
    j["low_weights"] = distribution_json(rep.wd);
    Json pl = Json::array();
    for (const auto& v : rep.pless) pl.push_back(to_string(v));
    j["power_moments"] = pl;
    j["power_moments_agree"] = rep.pless_agrees;
    j["sphere_packing"] = sphere_json(rep.sphere_packing);
    return j;
}

Json prediction_json(const PredictedDistribution& pd) {
    WeightDistribution wd = pd.to_distribution();
    Json j;
    j["length"] = to_string(pd.length);
    j["dimension"] = pd.dimension;
    j["min_distance"] = opt_size(wd.min_distance());
    j["weight_distribution"] = distribution_json(wd);
    j["enumerator"] = wd.enumerator();
    j["table"] = pd.table;
    j["column"] = pd.column;
    j["construction"] = pd.construction;
    return j;
}

Json context_json(const CodeContext& c) {
    return Json{{"p", c.p},
                {"n", c.n},
                {"s", c.s},
                {"eps0", c.eps0},
                {"eps0_star", c.eps0_star},
                {"k", to_string(c.k)},
                {"dual_at_zero", c.j0},
                {"symmetric", c.symmetric},
                {"quadratic_exponents", c.quadratic_exponents}};
}

FunctionAnalysis analyze_function(const PFunction& f, int jobs) {
    FunctionAnalysis a;
    a.f = f;
    a.prof = classify_plateaued(f, jobs);
    if (!a.prof) return a;
    a.dual = dual_profile(f, *a.prof, jobs);
    a.family = family_F_check(f, *a.prof, a.dual);
    if (!a.prof->balanced && a.prof->eps0 != 0) a.ctx = context_from_profile(f, *a.prof, a.dual, *a.family);
    return a;
}

Json function_report_json(const FunctionAnalysis& a) {
    const PFunction& f = a.f;
    Json j;
    j["label"] = f.label;
    j["p"] = f.p;
    j["n"] = f.n;
    j["inner_product"] = f.space.describe();
    Json vd = Json::array();
    for (auto c : value_distribution(f)) vd.push_back(c);
    j["value_distribution"] = vd;
    j["plateaued"] = a.prof.has_value();
    if (!a.prof) return j;
    const PlateauProfile& pr = *a.prof;
    j["s"] = pr.s;
    j["bent"] = pr.s == 0;
    j["type"] = pr.type_string();
    j["eps0"] = pr.eps0;
    j["k"] = pr.k;
    j["support_size"] = pr.supp_size;
    j["weakly_regular"] = pr.weakly_regular;
    j["balanced"] = pr.balanced;
    j["dual_at_zero"] = pr.j0 ? Json(*pr.j0) : Json(nullptr);
    if (pr.supp_size <= kListSetsUpTo) {
        j["B_plus"] = rank_list(pr.plus_set(), f.p, f.n);
        j["B_minus"] = rank_list(pr.minus_set(), f.p, f.n);
    }
    if (a.dual) {
        const DualProfile& d = *a.dual;
        Json dj;
        dj["eps0_star"] = d.eps0_star;
        dj["plus_count"] = d.plus_count;
        dj["double_dual_is_negation"] = d.double_dual_ok;
        DualDistribution dd = dual_value_distribution(pr);
        dj["value_distribution"] = dd.N;
        j["dual"] = dj;
    } else {
        j["dual"] = nullptr;
    }
    if (a.family) {
        const FamilyReport& fr = *a.family;
        j["family"] = Json{{"member", fr.member},
                           {"f0_zero", fr.f0_zero},
                           {"dual_bent", fr.dual_bent},
                           {"scale_closed", fr.scale_closed},
                           {"t", fr.t ? Json(*fr.t) : Json(nullptr)},
                           {"t_prime", fr.t_prime ? Json(*fr.t_prime) : Json(nullptr)},
                           {"t_all", fr.t_all},
                           {"t_prime_all", fr.t_prime_all},
                           {"reasons", fr.reasons}};
    }
    j["context"] = a.ctx ? context_json(*a.ctx) : Json(nullptr);
    return j;
}

FamilyRun run_family(const FunctionAnalysis& a, CodeFamily fam, const DefiningSets& sets, int jobs) {
    const PFunction& f = a.f;
    FamilyRun run;
    run.family = fam;
    run.G = build_family(f, fam, sets);
    run.report = code_report(run.G, jobs);
    if (run.G.length() > 0) {
        WeightDistribution via_spectrum;
        if (fam == CodeFamily::Cf || fam == CodeFamily::CfPunct) {
            via_spectrum = spectral_weights_Cf(f, fam == CodeFamily::CfPunct, jobs);
        } else {
            DefiningSet D{f.p, f.n, run.G.labels, run.G.provenance};
            via_spectrum = spectral_weights_CD(f.space, D, jobs);
        }
        run.spectral_agrees = via_spectrum == run.report.wd;
        if (!*run.spectral_agrees) run.diff.push_back("enumeration and spectrum disagree");
        run.dual = dual_distribution(run.report, 4);
        run.dual_distance_columns = dual_distance_upto4(run.G.G);
        const int dc = *run.dual_distance_columns;
        const auto& dm = run.dual.min_distance;
        if (dc <= 4 ? (!dm || *dm != static_cast<std::size_t>(dc)) : (dm && *dm <= 4))
            run.diff.push_back("dual distance: column search and MacWilliams disagree");
    }
    if (!a.ctx || !a.family) {
        run.notes.push_back("no prediction: f is not plateaued with 0 in its support");
        return run;
    }
    if (!a.family->member) {
        run.notes.push_back("no prediction: f is outside the family");
        return run;
    }
    auto rv = construction_range_violations(construction_of(fam), *a.ctx);
    if (!rv.empty()) {
        for (const auto& v : rv) run.notes.push_back("no prediction: outside range: " + v);
        return run;
    }
    run.prediction = predict_for(fam, *a.ctx);
    run.parameters = predict_parameters(fam, *a.ctx);
    for (auto& d : compare(run.prediction->to_distribution(), run.report.wd)) run.diff.push_back(d);
    const auto& pp = *run.parameters;
    if (BigInt(run.report.length) != pp.length) run.diff.push_back("length differs from the formula");
    if (run.report.dimension != pp.dimension) run.diff.push_back("dimension differs from the formula");
    if (pp.dual_distance && run.dual_distance_columns && *run.dual_distance_columns != *pp.dual_distance)
        run.diff.push_back("dual distance " + std::to_string(*run.dual_distance_columns) + " differs from the predicted " +
                           std::to_string(*pp.dual_distance));
    if (pp.self_orthogonal && *pp.self_orthogonal && !run.report.self_orthogonal)
        run.notes.push_back("self-orthogonality claimed but the Gram matrix is nonzero for this representative choice");
    return run;
}

Json family_run_json(const FamilyRun& run) {
    Json j;
    j["family"] = family_name(run.family);
    j["code"] = code_report_json(run.report);
    j["spectral_route_agrees"] = run.spectral_agrees ? Json(*run.spectral_agrees) : Json(nullptr);
    if (run.G.length() > 0) {
        Json d = dual_report_json(run.dual);
        d["distance_by_columns"] = run.dual_distance_columns ? Json(*run.dual_distance_columns) : Json(nullptr);
        j["dual"] = d;
    } else {
        j["dual"] = nullptr;
    }
    j["prediction"] = run.prediction ? prediction_json(*run.prediction) : Json(nullptr);
    if (run.parameters) {
        const auto& pp = *run.parameters;
        j["predicted_parameters"] = Json{{"length", to_string(pp.length)},
                                         {"dimension", pp.dimension},
                                         {"dual_distance", pp.dual_distance ? Json(*pp.dual_distance) : Json(nullptr)},
                                         {"self_orthogonal", pp.self_orthogonal ? Json(*pp.self_orthogonal) : Json(nullptr)},
                                         {"notes", pp.notes}};
    } else {
        j["predicted_parameters"] = nullptr;
    }
    j["diff"] = run.diff;
    j["notes"] = run.notes;
    return j;
}

Json constants_json(const Constants& c) {
    Json j = Json::object();
    for (const auto& [k, v] : c) j[k] = v;
    return j;
}

Json quantum_json(const QuantumParams& q) {
    Json j;
    j["p"] = q.p;
    j["length"] = q.length;
    j["dimension"] = q.dimension;
    j["distance"] = q.distance;
    j["pure"] = q.pure;
    j["preconditions"] = Json{{"chain", q.chain},
                              {"k1", q.k1},
                              {"k2", q.k2},
                              {"k2_margin", static_cast<long long>(q.k2) - static_cast<long long>(q.k1)},
                              {"d1", q.d1},
                              {"d2", q.d2}};
    Json h;
    h["max_k"] = q.hamming_max_k ? Json(*q.hamming_max_k) : Json(nullptr);
    h["achieved_k"] = q.dimension;
    h["gap"] = q.hamming_max_k ? Json(static_cast<long long>(*q.hamming_max_k) - static_cast<long long>(q.dimension))
                               : Json(nullptr);
    j["quantum_hamming"] = h;
    if (q.closed_form)
        j["closed_form"] = Json{{"length", q.closed_form->first}, {"dimension", q.closed_form->second}};
    else
        j["closed_form"] = nullptr;
    j["extrapolated"] = q.extrapolated;
    j["source"] = q.source;
    j["metadata"] = Json{{"chosen_constants", constants_json(q.constants)}};
    j["transcript"] = q.transcript;
    return j;
}

Json lcd_json(const LcdReport& r) {
    Json j;
    j["p"] = r.code.p;
    j["length"] = r.dual.length;
    j["dimension"] = r.dual.dimension;
    j["distance"] = r.dual_distance_columns;
    j["pure"] = nullptr;
    j["preconditions"] = Json{{"gram_nonsingular", r.gram_nonsingular},
                              {"gram_identity", r.gram_identity},
                              {"block_self_orthogonal", r.block_self_orthogonal},
                              {"distance_by_columns", r.dual_distance_columns},
                              {"distance_by_moments", r.dual_distance_moments},
                              {"dual_lcd_direct", r.dual_lcd_direct ? Json(*r.dual_lcd_direct) : Json(nullptr)}};
    if (r.closed_form)
        j["closed_form"] = Json{{"length", r.closed_form->first}, {"dimension", r.closed_form->second}};
    else
        j["closed_form"] = nullptr;
    j["generator_code"] = code_report_json(r.code);
    j["dual"] = dual_report_json(r.dual);
    j["source"] = r.source;
    j["metadata"] = Json{{"chosen_constants", constants_json(r.constants)}};
    j["transcript"] = r.transcript;
    return j;
}

}  // namespace plateau
