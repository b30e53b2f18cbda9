#include "plateau/analytic.hpp"
#include "plateau/codes.hpp"
#include "plateau/derived.hpp"
#include "plateau/field_core.hpp"
#include "plateau/function_zoo.hpp"
#include "plateau/linalg.hpp"
#include "plateau/parallel.hpp"
#include "plateau/report.hpp"
#include "plateau/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

using namespace plateau;

namespace {

enum Exit { kOk = 0, kParse = 1, kClassify = 2, kGuard = 3, kHypothesis = 4, kVerify = 5 };

struct ClassifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Job {
    std::optional<int> p, n, s, example, thm;
    std::optional<std::string> poly, table, family, type, rep_set, out, matrix, scope;
    bool nsq = false;
    int jobs = 0;
};

int parse_type(const std::string& t) {
    if (t == "+" || t == "plus" || t == "1" || t == "+1") return 1;
    if (t == "-" || t == "minus" || t == "-1") return -1;
    throw ParseError("--type must be + or -");
}

int infer_n(const std::string& poly) {
    static const std::regex var("x([0-9]+)");
    int n = 0;
    for (auto it = std::sregex_iterator(poly.begin(), poly.end(), var); it != std::sregex_iterator(); ++it)
        n = std::max(n, std::stoi((*it)[1]));
    if (n == 0) throw ParseError("cannot infer n from the polynomial; pass --n");
    return n;
}

bool has_function_source(const Job& j) { return j.poly || j.table || j.example; }

// Exactly one source: DSL text, truth table, builtin example, or constructor parameters (quadratic instance).
PFunction load_function(const Job& j) {
    const int sources = (j.poly ? 1 : 0) + (j.table ? 1 : 0) + (j.example ? 1 : 0);
    if (sources > 1) throw ParseError("give exactly one of --poly, --table, --example");
    if (j.poly) {
        if (!j.p) throw ParseError("--poly needs --p");
        return polynomial_function(*j.poly, *j.p, j.n ? *j.n : infer_n(*j.poly));
    }
    if (j.table) return load_truth_table(*j.table);
    if (j.example) {
        if (*j.example != 1 && *j.example != 2) throw ParseError("--example must be 1 or 2");
        return example_function(*j.example);
    }
    if (!j.p || !j.n) throw ParseError("no function source: give --poly, --table, --example, or --p --n [--s --type]");
    PFunction f = quadratic_instance(*j.p, *j.n, j.s.value_or(0), j.type ? parse_type(*j.type) : 1);
    return f;
}

std::vector<std::vector<int>> read_rep_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open representative set " + path);
    std::vector<std::vector<int>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<int> v;
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            for (char c : toks[0]) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("representative set: bad digit in " + toks[0]);
                v.push_back(c - '0');
            }
        } else {
            for (const auto& t : toks) {
                for (char c : t)
                    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("representative set: bad entry " + t);
                v.push_back(std::stoi(t));
            }
        }
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("representative set is empty");
    return out;
}

void emit(const Job& j, const Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (j.out) {
        std::ofstream o(*j.out);
        if (!o) throw ParseError("cannot write " + *j.out);
        o << text;
    } else {
        std::cout << text;
    }
}

int cmd_analyze(const Job& j) {
    PFunction f = load_function(j);
    FunctionAnalysis a = analyze_function(f, j.jobs);
    emit(j, function_report_json(a));
    if (!a.prof) throw ClassifyError("function is not plateaued");
    return kOk;
}

int cmd_build(const Job& j) {
    if (!j.family) throw ParseError("build needs --family");
    auto fam = parse_family(*j.family);
    if (!fam) throw ParseError("unknown family " + *j.family + " (Cf, Cf-punct, D0, Dsq, Dnsq, D0-punct, Dsq-punct, Dnsq-punct)");
    PFunction f = load_function(j);
    FunctionAnalysis a = analyze_function(f, j.jobs);
    DefiningSets sets = defining_sets(f);
    Json rep_meta = "orbit (first nonzero coordinate 1)";
    if (j.rep_set) {
        auto vecs = read_rep_set(*j.rep_set);
        switch (*fam) {
            case CodeFamily::D0Punct: sets.D0_rep = custom_representatives(sets.D0, vecs); break;
            case CodeFamily::DsqPunct: sets.Dsq_rep = custom_representatives(sets.Dsq, vecs); break;
            case CodeFamily::DnsqPunct: sets.Dnsq_rep = custom_representatives(sets.Dnsq, vecs); break;
            default: throw HypothesisError("--rep-set applies to D0-punct, Dsq-punct, Dnsq-punct");
        }
        rep_meta = "custom: " + *j.rep_set;
    }
    FamilyRun run = run_family(a, *fam, sets, j.jobs);
    Json doc;
    doc["function"] = Json{{"label", f.label},
                           {"p", f.p},
                           {"n", f.n},
                           {"plateaued", a.prof.has_value()},
                           {"context", a.ctx ? context_json(*a.ctx) : Json(nullptr)}};
    doc["representatives"] = rep_meta;
    doc["warnings"] = sets.warnings;
    Json body = family_run_json(run);
    for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
    if (j.matrix) {
        std::ofstream o(*j.matrix);
        if (!o) throw ParseError("cannot write " + *j.matrix);
        o << matrix_to_csv(run.G.G);
    }
    emit(j, doc);
    return kOk;
}

int cmd_quantum(const Job& j) {
    if (!j.thm) throw ParseError("quantum needs --thm 7, 8 or 9");
    QuantumParams q;
    const int eps = j.type ? parse_type(*j.type) : 1;
    switch (*j.thm) {
        case 7: {
            if (has_function_source(j)) {
                q = quantum_from_function(load_function(j));
            } else {
                if (!j.p || !j.n) throw ParseError("construction 7 needs a function or --p --n [--s --type]");
                Constants chosen;
                PFunction f = quadratic_instance(*j.p, *j.n, j.s.value_or(0), eps, &chosen);
                q = quantum_from_function(f);
                q.constants.insert(q.constants.begin(), chosen.begin(), chosen.end());
            }
            break;
        }
        case 8:
            if (j.p && *j.p != 3) throw HypothesisError("p=3 required");
            if (!j.n) throw ParseError("construction 8 needs --n");
            q = quantum_ternary_zero_set(*j.n, j.s.value_or(0), eps);
            break;
        case 9:
            if (!j.p || !j.n) throw ParseError("construction 9 needs --p --n");
            q = quantum_square_set(*j.p, *j.n, j.s.value_or(0), eps, j.nsq);
            break;
        default: throw ParseError("quantum --thm must be 7, 8 or 9");
    }
    emit(j, quantum_json(q));
    return kOk;
}

int cmd_lcd(const Job& j) {
    if (!j.thm) throw ParseError("lcd needs --thm 10, 11 or 12");
    const int eps = j.type ? parse_type(*j.type) : 1;
    LcdReport r;
    switch (*j.thm) {
        case 10: {
            if (has_function_source(j)) {
                r = lcd_from_function(load_function(j));
            } else {
                if (!j.p || !j.n) throw ParseError("construction 10 needs a function or --p --n [--s --type]");
                Constants chosen;
                PFunction f = quadratic_instance(*j.p, *j.n, j.s.value_or(0), eps, &chosen);
                r = lcd_from_function(f);
                r.constants.insert(r.constants.begin(), chosen.begin(), chosen.end());
            }
            break;
        }
        case 11:
            if (j.p && *j.p != 3) throw HypothesisError("p=3 required");
            if (!j.n) throw ParseError("construction 11 needs --n");
            r = lcd_ternary_zero_set(*j.n, j.s.value_or(0), eps);
            break;
        case 12:
            if (!j.n) throw ParseError("construction 12 needs --n");
            r = lcd_square_set(j.p.value_or(3), *j.n, j.s.value_or(0), eps);
            break;
        default: throw ParseError("lcd --thm must be 10, 11 or 12");
    }
    emit(j, lcd_json(r));
    return kOk;
}

int cmd_verify(const Job& j) {
    const std::string scope = j.scope.value_or("all");
    const auto& names = verify_scope_names();
    if (std::find(names.begin(), names.end(), scope) == names.end()) throw ParseError("unknown scope " + scope);
    VerifyOptions opt;
    opt.jobs = j.jobs;
    auto checks = verify_scope(scope, opt);
    Json doc = checks_json(checks);
    doc["scope"] = scope;
    emit(j, doc);
    for (const auto& c : checks)
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.scope << ": " << c.name << (c.pass ? "" : " -- " + c.detail) << "\n";
    if (!all_pass(checks)) throw VerifyFailure("verification failed");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear, self-orthogonal, LCD and quantum codes from p-ary plateaued functions"};
    app.require_subcommand(1);
    Job j;
    std::string type_text;

    auto add_common = [&](CLI::App* sc) {
        sc->add_option("--p", j.p, "odd prime");
        sc->add_option("--n", j.n, "number of variables");
        sc->add_option("--s", j.s, "plateau index for constructor inputs");
        sc->add_option("--type", j.type, "type of f: + or -");
        sc->add_option("--poly", j.poly, "polynomial in x1..xn, e.g. \"x1^2+x2^2\"");
        sc->add_option("--table", j.table, "truth-table file");
        sc->add_option("--example", j.example, "builtin worked example (1 or 2)");
        sc->add_option("--out", j.out, "write JSON here instead of stdout");
        sc->add_option("--jobs", j.jobs, "worker threads (0 = hardware)");
    };

    auto* analyze = app.add_subcommand("analyze", "classify a function");
    add_common(analyze);
    auto* build = app.add_subcommand("build", "build and enumerate one code family, compare with the tables");
    add_common(build);
    build->add_option("--family", j.family, "Cf, Cf-punct, D0, Dsq, Dnsq, D0-punct, Dsq-punct, Dnsq-punct");
    build->add_option("--rep-set", j.rep_set, "representative vectors for a punctured family, one per line");
    build->add_option("--matrix", j.matrix, "write the generator matrix as CSV");
    auto* quantum = app.add_subcommand("quantum", "quantum code by enlargement");
    add_common(quantum);
    quantum->add_option("--thm", j.thm, "construction id 7, 8 or 9");
    quantum->add_flag("--nsq", j.nsq, "non-square variant of construction 9");
    auto* lcd = app.add_subcommand("lcd", "LCD code from a self-orthogonal code");
    add_common(lcd);
    lcd->add_option("--thm", j.thm, "construction id 10, 11 or 12");
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("scope,--scope", j.scope, "examples, classification, lemmas, tables, so, lcd, quantum, properties, all");
    verify->add_option("--out", j.out, "write JSON here instead of stdout");
    verify->add_option("--jobs", j.jobs, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (j.jobs < 0) throw ParseError("--jobs must be >= 0");
        set_default_jobs(j.jobs);
        if (*analyze) return cmd_analyze(j);
        if (*build) return cmd_build(j);
        if (*quantum) return cmd_quantum(j);
        if (*lcd) return cmd_lcd(j);
        if (*verify) return cmd_verify(j);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ClassifyError& e) {
        std::cerr << "classification: " << e.what() << "\n";
        return kClassify;
    } catch (const GuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kGuard;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis: " << e.what() << "\n";
        return kHypothesis;
    } catch (const VerifyFailure& e) {
        std::cerr << e.what() << "\n";
        return kVerify;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::out_of_range& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kOk;
}
