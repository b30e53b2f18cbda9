#include "plateau/analytic.hpp"

#include "plateau/expr.hpp"
#include "plateau/field_core.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plateau {

using CF = CodeFamily;

const std::vector<CodeFamily>& all_families() {
    static const std::vector<CodeFamily> v{CF::Cf,  CF::CfPunct, CF::D0,       CF::Dsq,
                                           CF::Dnsq, CF::D0Punct, CF::DsqPunct, CF::DnsqPunct};
    return v;
}

std::string family_name(CodeFamily f) {
    switch (f) {
        case CF::Cf: return "Cf";
        case CF::CfPunct: return "Cf-punct";
        case CF::D0: return "D0";
        case CF::Dsq: return "Dsq";
        case CF::Dnsq: return "Dnsq";
        case CF::D0Punct: return "D0-punct";
        case CF::DsqPunct: return "Dsq-punct";
        case CF::DnsqPunct: return "Dnsq-punct";
    }
    return "?";
}

std::optional<CodeFamily> parse_family(const std::string& s) {
    for (auto f : all_families())
        if (family_name(f) == s) return f;
    return std::nullopt;
}

int construction_of(CodeFamily f) {
    switch (f) {
        case CF::Cf: return 1;
        case CF::CfPunct: return 2;
        case CF::D0: return 3;
        case CF::Dsq:
        case CF::Dnsq: return 4;
        case CF::D0Punct: return 5;
        case CF::DsqPunct:
        case CF::DnsqPunct: return 6;
    }
    return 0;
}

bool is_sq_family(CodeFamily f) { return f == CF::Dsq || f == CF::DsqPunct; }
bool is_nsq_family(CodeFamily f) { return f == CF::Dnsq || f == CF::DnsqPunct; }

GeneratorMatrix build_family(const PFunction& f, CodeFamily fam, const DefiningSets& sets) {
    switch (fam) {
        case CF::Cf: return build_Cf(f);
        case CF::CfPunct: return build_Cf_punctured(f);
        case CF::D0: return build_CD(f.space, sets.D0);
        case CF::Dsq: return build_CD(f.space, sets.Dsq);
        case CF::Dnsq: return build_CD(f.space, sets.Dnsq);
        case CF::D0Punct: return build_CD(f.space, sets.D0_rep);
        case CF::DsqPunct: return build_CD(f.space, sets.Dsq_rep);
        case CF::DnsqPunct: return build_CD(f.space, sets.Dnsq_rep);
    }
    throw std::logic_error("unknown code family");
}

int derived_eps0_star(int p, int n, int s, int eps0) {
    bool same = (p % 4 == 1) || ((n + s) % 2 == 0);
    return same ? eps0 : -eps0;
}

CodeContext CodeContext::make(int p, int n, int s, int eps0, const BigInt& k) {
    CodeContext c;
    c.p = p;
    c.n = n;
    c.s = s;
    c.eps0 = eps0;
    c.eps0_star = derived_eps0_star(p, n, s, eps0);
    c.k = k;
    return c;
}

CodeContext context_from_profile(const PFunction& f, const PlateauProfile& prof,
                                    const std::optional<DualProfile>& dual, const FamilyReport& fam) {
    if (prof.balanced || prof.eps0 == 0) throw HypothesisError("f is balanced: 0 is outside the Walsh support");
    CodeContext c = CodeContext::make(prof.p, prof.n, prof.s, prof.eps0, BigInt(prof.k));
    c.j0 = prof.j0.value_or(0);
    c.symmetric = true;
    for (std::uint64_t r = 0; r < f.size() && c.symmetric; ++r)
        if (f(neg_rank(r, f.p, f.n)) != f(r)) c.symmetric = false;
    c.quadratic_exponents = fam.t == 2 && fam.t_prime == 2;
    if (dual) {
        if (fam.member && dual->eps0_star != c.eps0_star)
            throw std::logic_error("type rule disagrees with the computed dual sign at 0");
        c.eps0_star = dual->eps0_star;
    }
    return c;
}

namespace {

ExprVars vars_of(const CodeContext& c) {
    return {{"p", BigRational(c.p)}, {"n", BigRational(c.n)},         {"s", BigRational(c.s)},
            {"k", c.var_k()},        {"e", BigRational(c.eps0)},      {"es", BigRational(c.eps0_star)}};
}

BigInt as_integer(const BigRational& v, const std::string& what) {
    if (denominator(v) != 1) throw std::logic_error(what + " is not an integer");
    return numerator(v);
}

}  // namespace

std::vector<std::string> context_violations(const CodeContext& c) {
    std::vector<std::string> v;
    if (!is_prime(c.p) || c.p == 2) v.push_back("p must be an odd prime");
    if (c.n < 1) v.push_back("n >= 1");
    if (c.s < 0 || c.s > c.n) v.push_back("0 <= s <= n");
    if (c.eps0 != 1 && c.eps0 != -1) v.push_back("eps0 in {+1,-1}");
    if (c.eps0_star != 1 && c.eps0_star != -1) v.push_back("eps0* in {+1,-1}");
    if (!v.empty()) return v;
    BigInt supp = big_pow(c.p, c.n - c.s);
    if (c.k < 0 || c.k > supp) v.push_back("0 <= k <= p^(n-s)");
    if (c.k % c.p != 0) v.push_back("p divides k");
    if (c.eps0 == 1 && c.k < 1) v.push_back("0 in B+(f) needs k >= 1");
    if (c.eps0 == -1 && c.k > supp - 1) v.push_back("0 in B-(f) needs k <= p^(n-s) - 1");
    return v;
}

std::vector<std::string> construction_range_violations(int thm, const CodeContext& c) {
    std::vector<std::string> v;
    const int n = c.n, s = c.s;
    const bool even = c.even();
    if (s < 0) v.push_back("s >= 0");
    switch (thm) {
        case 1:
            if (even && s > n - 2) v.push_back("s <= n-2 for even n+s");
            if (!even && s > n - 1) v.push_back("s <= n-1 for odd n+s");
            break;
        case 2:
            if (even && s > n - 2) v.push_back("s <= n-2 for even n+s");
            if (even && n + s < 4) v.push_back("n+s >= 4 for even n+s");
            if (!even && s > n - 1) v.push_back("s <= n-1 for odd n+s");
            if (!even && n + s < 3) v.push_back("n+s >= 3 for odd n+s");
            break;
        case 3:
        case 4:
        case 5:
        case 6:
            if (even && s > n - 4) v.push_back("s <= n-4 for even n+s");
            if (!even && s > n - 3) v.push_back("s <= n-3 for odd n+s");
            break;
        default: v.push_back("unknown construction " + std::to_string(thm));
    }
    return v;
}

const std::vector<WeightTable>& weight_tables() {
    static const std::vector<WeightTable> tables = [] {
        std::vector<WeightTable> t;
        const TableColumn any{"", 0, 0, 0};
        const TableColumn fs_plus{"0 in B+(f*)", 0, 1, 0}, fs_minus{"0 in B-(f*)", 0, -1, 0};
        const TableColumn f_plus{"0 in B+(f)", 1, 0, 0}, f_minus{"0 in B-(f)", -1, 0, 0};
        const TableColumn sq_plus{"D_{f,sq}, 0 in B+(f)", 1, 0, 1}, nsq_minus{"D_{f,nsq}, 0 in B-(f)", -1, 0, 2};
        const TableColumn sq_minus{"D_{f,sq}, 0 in B-(f)", -1, 0, 1}, nsq_plus{"D_{f,nsq}, 0 in B+(f)", 1, 0, 2};

        t.push_back({"Cf-even", 1, true, {CF::Cf}, {fs_plus, fs_minus},
                     {"0", "(p-1)*p^(n-1)", "(p-1)*(p^(n-1)-p^((n+s)/2-1))", "(p-1)*(p^(n-1)+p^((n+s)/2-1))",
                      "(p-1)*p^(n-1)+p^((n+s)/2-1)", "(p-1)*p^(n-1)-p^((n+s)/2-1)"},
                     {{"1", "1"},
                      {"p^(n+1)-(p-1)*p^(n-s)-1", "p^(n+1)-(p-1)*p^(n-s)-1"},
                      {"(p-1)*(k/p+(p-1)*p^((n-s)/2-1))", "(p-1)*k/p"},
                      {"(p-1)*(p^(n-s-1)-k/p)", "(p-1)*(p^(n-s-1)-k/p-(p-1)*p^((n-s)/2-1))"},
                      {"(p-1)^2*(k/p-p^((n-s)/2-1))", "(p-1)^2*k/p"},
                      {"(p-1)^2*(p^(n-s-1)-k/p)", "(p-1)^2*(p^(n-s-1)-k/p+p^((n-s)/2-1))"}},
                     {}});
        t.push_back({"Cf-odd", 1, false, {CF::Cf}, {any},
                     {"0", "(p-1)*p^(n-1)", "(p-1)*p^(n-1)-p^((n+s-1)/2)", "(p-1)*p^(n-1)+p^((n+s-1)/2)"},
                     {{"1"},
                      {"p^(n+1)-(p-1)^2*p^(n-s-1)-1"},
                      {"(p-1)^2/2*(p^((n-s-1)/2)+p^(n-s-1))"},
                      {"(p-1)^2/2*(p^(n-s-1)-p^((n-s-1)/2))"}},
                     {}});
        t.push_back({"Cf-punct-even", 2, true, {CF::CfPunct}, {f_plus, f_minus},
                     {"0", "(p-1)^2*(p^(n-2)-e*p^((n+s)/2-2))", "(p-1)^2*p^(n-2)",
                      "(p-1)^2*(p^(n-2)-2*e*p^((n+s)/2-2))", "(p-1)*(p^(n-1)-p^(n-2)-e*p^((n+s)/2-1))",
                      "(p-1)*((p-1)*p^(n-2)-e*(p-2)*p^((n+s)/2-2))", "(p-1)*(p^(n-1)-e*p^((n+s)/2-1))",
                      "(p-1)^2*p^(n-2)-e*(p-2)*p^((n+s)/2-1)", "(p-1)^2*p^(n-2)-e*(p^2-2*p+2)*p^((n+s)/2-2)"},
                     {{"1", "1"},
                      {"p^(n+1)-p^(n-s+1)", "p^(n+1)-p^(n-s+1)"},
                      {"k/p+(p-1)*p^((n-s)/2-1)-1", "p^(n-s-1)-(p-1)*p^((n-s)/2-1)-k/p-1"},
                      {"p^(n-s-1)-k/p", "k/p"},
                      {"(p-1)*(2*k/p+(p-2)*p^((n-s)/2-1)-1)", "(p-1)*(2*p^(n-s-1)-(p-2)*p^((n-s)/2-1)-2*k/p-1)"},
                      {"2*(p-1)*(p^(n-s-1)-k/p)", "2*(p-1)*k/p"},
                      {"p-1", "p-1"},
                      {"(p-1)^2*(k/p-p^((n-s)/2-1))", "(p-1)^2*(p^(n-s-1)+p^((n-s)/2-1)-k/p)"},
                      {"(p-1)^2*(p^(n-s-1)-k/p)", "(p-1)^2*k/p"}},
                     {"row 2, column 0 in B-(f): printed as p^(n+1)-p^(n-s-1); the column only sums to p^(n+1) "
                      "with p^(n+1)-p^(n-s+1), which enumeration confirms"}});
        t.push_back({"Cf-punct-odd", 2, false, {CF::CfPunct}, {any},
                     {"0", "(p-1)^2*p^(n-2)", "(p-1)*(p^(n-1)-p^(n-2)+p^((n+s-3)/2))",
                      "(p-1)*(p^(n-1)-p^(n-2)-p^((n+s-3)/2))", "(p-1)^2*p^(n-2)-p^((n+s-3)/2)",
                      "(p-1)^2*p^(n-2)+p^((n+s-3)/2)", "(p-1)*p^(n-1)"},
                     {{"1"},
                      {"p^(n+1)-p^(n-s+1)+p^(n-s)-p"},
                      {"(p-1)/2*(p^(n-s-1)+p^((n-s-1)/2))"},
                      {"(p-1)/2*(p^(n-s-1)-p^((n-s-1)/2))"},
                      {"(p-1)^2/2*(p^(n-s-1)+p^((n-s-1)/2))"},
                      {"(p-1)^2/2*(p^(n-s-1)-p^((n-s-1)/2))"},
                      {"p-1"}},
                     {}});
        t.push_back({"D0-even", 3, true, {CF::D0}, {f_plus, f_minus},
                     {"0", "(p-1)*(p^(n-2)+e*(p-1)*p^((n+s)/2-2))", "(p-1)*p^(n-2)",
                      "(p-1)*(p^(n-2)+2*e*(p-1)*p^((n+s)/2-2))", "(p-1)*(p^(n-2)+e*p^((n+s)/2-1))",
                      "(p-1)*(p^(n-2)+e*(p-2)*p^((n+s)/2-2))"},
                     {{"1", "1"},
                      {"p^n-p^(n-s)", "p^n-p^(n-s)"},
                      {"k/p+(p-1)*p^((n-s)/2-1)-1", "p^(n-s-1)-(p-1)*p^((n-s)/2-1)-k/p-1"},
                      {"p^(n-s-1)-k/p", "k/p"},
                      {"(p-1)*(k/p-p^((n-s)/2-1))", "(p-1)*(p^(n-s-1)+p^((n-s)/2-1)-k/p)"},
                      {"(p-1)*(p^(n-s-1)-k/p)", "(p-1)*k/p"}},
                     {}});
        t.push_back({"D0-odd", 3, false, {CF::D0}, {any},
                     {"0", "(p-1)*p^(n-2)", "(p-1)*(p^(n-2)-p^((n+s-3)/2))", "(p-1)*(p^(n-2)+p^((n+s-3)/2))"},
                     {{"1"},
                      {"p^n-(p-1)*p^(n-s-1)-1"},
                      {"(p-1)/2*(p^(n-s-1)+p^((n-s-1)/2))"},
                      {"(p-1)/2*(p^(n-s-1)-p^((n-s-1)/2))"}},
                     {}});
        t.push_back({"Dsq-Dnsq-even", 4, true, {CF::Dsq, CF::Dnsq}, {f_plus, f_minus},
                     {"0", "(p-1)^2/2*(p^(n-2)-e*p^((n+s)/2-2))", "(p-1)^2/2*p^(n-2)",
                      "(p-1)^2/2*(p^(n-2)-2*e*p^((n+s)/2-2))", "(p-1)/2*(p^(n-1)-p^(n-2)-2*e*p^((n+s)/2-1))",
                      "(p-1)/2*(p^(n-1)-p^(n-2)+2*e*p^((n+s)/2-2))"},
                     {{"1", "1"},
                      {"p^n-p^(n-s)", "p^n-p^(n-s)"},
                      {"(p+1)/2*k/p+(p-1)/2*p^((n-s)/2-1)-1",
                       "(p+1)/2*(p^(n-s-1)-k/p)-(p-1)/2*p^((n-s)/2-1)-1"},
                      {"(p+1)/2*(p^(n-s-1)-k/p)", "(p+1)/2*k/p"},
                      {"(p-1)/2*(k/p-p^((n-s)/2-1))", "(p-1)/2*(p^(n-s-1)-k/p+p^((n-s)/2-1))"},
                      {"(p-1)/2*(p^(n-s-1)-k/p)", "(p-1)/2*k/p"}},
                     {}});
        t.push_back({"Dsq-Dnsq-odd-same", 4, false, {CF::Dsq, CF::Dnsq}, {sq_plus, nsq_minus},
                     {"0", "(p-1)^2/2*(p^(n-2)+p^((n+s-3)/2))", "(p-1)^2/2*p^(n-2)",
                      "(p-1)^2/2*(p^(n-2)+2*p^((n+s-3)/2))", "(p-1)^2/2*p^(n-2)+(p^2-1)/2*p^((n+s-3)/2)",
                      "(p-1)^2/2*p^(n-2)+(p-1)*(p-3)/2*p^((n+s-3)/2)"},
                     {{"1", "1"},
                      {"p^n-p^(n-s)+(p-1)/2*(p^(n-s-1)-p^((n-s-1)/2))",
                       "p^n-p^(n-s)+(p-1)/2*(p^(n-s-1)-p^((n-s-1)/2))"},
                      {"k/p-1", "p^(n-s-1)-k/p-1"},
                      {"p^(n-s-1)-k/p", "k/p"},
                      {"(p-1)/2*(k/p+p^((n-s-1)/2))", "(p-1)/2*(p^(n-s-1)-k/p+p^((n-s-1)/2))"},
                      {"(p-1)/2*(p^(n-s-1)-k/p)", "(p-1)/2*k/p"}},
                     {}});
        t.push_back({"Dsq-Dnsq-odd-opposite", 4, false, {CF::Dsq, CF::Dnsq}, {sq_minus, nsq_plus},
                     {"0", "(p-1)^2/2*(p^(n-2)-p^((n+s-3)/2))", "(p-1)^2/2*(p^(n-2)-2*p^((n+s-3)/2))",
                      "(p-1)^2/2*p^(n-2)", "(p-1)^2/2*p^(n-2)-(p-1)*(p-3)/2*p^((n+s-3)/2)",
                      "(p-1)^2/2*p^(n-2)-(p^2-1)/2*p^((n+s-3)/2)"},
                     {{"1", "1"},
                      {"p^n-p^(n-s)+(p-1)/2*(p^(n-s-1)+p^((n-s-1)/2))",
                       "p^n-p^(n-s)+(p-1)/2*(p^(n-s-1)+p^((n-s-1)/2))"},
                      {"k/p", "p^(n-s-1)-k/p"},
                      {"p^(n-s-1)-k/p-1", "k/p-1"},
                      {"(p-1)*k/(2*p)", "(p-1)/2*(p^(n-s-1)-k/p)"},
                      {"(p-1)/2*(p^(n-s-1)-p^((n-s-1)/2)-k/p)", "(p-1)/2*(k/p-p^((n-s-1)/2))"}},
                     {}});
        t.push_back({"D0-punct-even", 5, true, {CF::D0Punct}, {f_plus, f_minus},
                     {"0", "p^(n-2)+e*(p-1)*p^((n+s)/2-2)", "p^(n-2)", "p^(n-2)+2*e*(p-1)*p^((n+s)/2-2)",
                      "p^(n-2)+e*p^((n+s)/2-1)", "p^(n-2)+e*(p-2)*p^((n+s)/2-2)"},
                     {{"1", "1"},
                      {"p^n-p^(n-s)", "p^n-p^(n-s)"},
                      {"k/p+(p-1)*p^((n-s)/2-1)-1", "p^(n-s-1)-(p-1)*p^((n-s)/2-1)-k/p-1"},
                      {"p^(n-s-1)-k/p", "k/p"},
                      {"(p-1)*(k/p-p^((n-s)/2-1))", "(p-1)*(p^(n-s-1)+p^((n-s)/2-1)-k/p)"},
                      {"(p-1)*(p^(n-s-1)-k/p)", "(p-1)*k/p"}},
                     {}});
        t.push_back({"D0-punct-odd", 5, false, {CF::D0Punct}, {any},
                     {"0", "p^(n-2)", "p^(n-2)-p^((n+s-3)/2)", "p^(n-2)+p^((n+s-3)/2)"},
                     {{"1"},
                      {"p^n-(p-1)*p^(n-s-1)-1"},
                      {"(p-1)/2*(p^(n-s-1)+p^((n-s-1)/2))"},
                      {"(p-1)/2*(p^(n-s-1)-p^((n-s-1)/2))"}},
                     {}});
        t.push_back({"Dsq-Dnsq-punct-even", 6, true, {CF::DsqPunct, CF::DnsqPunct}, {f_plus, f_minus},
                     {"0", "(p-1)/2*(p^(n-2)-e*p^((n+s)/2-2))", "(p-1)/2*p^(n-2)",
                      "(p-1)/2*(p^(n-2)-2*e*p^((n+s)/2-2))", "(p^(n-1)-p^(n-2)-2*e*p^((n+s)/2-1))/2",
                      "(p^(n-1)-p^(n-2)+2*e*p^((n+s)/2-2))/2"},
                     {{"1", "1"},
                      {"p^n-p^(n-s)", "p^n-p^(n-s)"},
                      {"(p+1)/2*k/p+(p-1)/2*p^((n-s)/2-1)-1",
                       "(p+1)/2*(p^(n-s-1)-k/p)-(p-1)/2*p^((n-s)/2-1)-1"},
                      {"(p+1)/2*(p^(n-s-1)-k/p)", "(p+1)/2*k/p"},
                      {"(p-1)/2*(k/p-p^((n-s)/2-1))", "(p-1)/2*(p^(n-s-1)-k/p+p^((n-s)/2-1))"},
                      {"(p-1)/2*(p^(n-s-1)-k/p)", "(p-1)/2*k/p"}},
                     {}});
        t.push_back({"Dsq-Dnsq-punct-odd-same", 6, false, {CF::DsqPunct, CF::DnsqPunct}, {sq_plus, nsq_minus},
                     {"0", "(p-1)/2*(p^(n-2)+p^((n+s-3)/2))", "(p-1)/2*p^(n-2)", "(p-1)/2*(p^(n-2)+2*p^((n+s-3)/2))",
                      "(p-1)/2*p^(n-2)+(p+1)/2*p^((n+s-3)/2)", "(p-1)/2*p^(n-2)+(p-3)/2*p^((n+s-3)/2)"},
                     {{"1", "1"},
                      {"p^n-p^(n-s)+(p-1)/2*(p^(n-s-1)-p^((n-s-1)/2))",
                       "p^n-p^(n-s)+(p-1)/2*(p^(n-s-1)-p^((n-s-1)/2))"},
                      {"k/p-1", "p^(n-s-1)-k/p-1"},
                      {"p^(n-s-1)-k/p", "k/p"},
                      {"(p-1)/2*(k/p+p^((n-s-1)/2))", "(p-1)/2*(p^(n-s-1)-k/p+p^((n-s-1)/2))"},
                      {"(p-1)/2*(p^(n-s-1)-k/p)", "(p-1)/2*k/p"}},
                     {}});
        t.push_back({"Dsq-Dnsq-punct-odd-opposite", 6, false, {CF::DsqPunct, CF::DnsqPunct}, {sq_minus, nsq_plus},
                     {"0", "(p-1)/2*(p^(n-2)-p^((n+s-3)/2))", "(p-1)/2*(p^(n-2)-2*p^((n+s-3)/2))", "(p-1)/2*p^(n-2)",
                      "(p-1)/2*p^(n-2)-(p-3)/2*p^((n+s-3)/2)", "(p-1)/2*p^(n-2)-(p+1)/2*p^((n+s-3)/2)"},
                     {{"1", "1"},
                      {"p^n-p^(n-s)+(p-1)/2*(p^(n-s-1)+p^((n-s-1)/2))",
                       "p^n-p^(n-s)+(p-1)/2*(p^(n-s-1)+p^((n-s-1)/2))"},
                      {"k/p", "p^(n-s-1)-k/p"},
                      {"p^(n-s-1)-k/p-1", "k/p-1"},
                      {"(p-1)*k/(2*p)", "(p-1)/2*(p^(n-s-1)-k/p)"},
                      {"(p-1)/2*(p^(n-s-1)-p^((n-s-1)/2)-k/p)", "(p-1)/2*(k/p-p^((n-s-1)/2))"}},
                     {}});
        return t;
    }();
    return tables;
}

const WeightTable& weight_table(const std::string& id) {
    for (const auto& t : weight_tables())
        if (t.id == id) return t;
    throw ParseError("unknown table " + id);
}

WeightDistribution PredictedDistribution::to_distribution() const {
    WeightDistribution wd;
    wd.p = p;
    wd.length = length.convert_to<std::size_t>();
    for (const auto& [w, m] : rows) wd.A[w.convert_to<std::size_t>()] = m;
    return wd;
}

namespace {

void require(const std::vector<std::string>& v, const std::string& what) {
    if (v.empty()) return;
    std::string msg = what + ":";
    for (const auto& s : v) msg += " " + s + ";";
    throw HypothesisError(msg);
}

BigInt eval_int(const std::string& e, const ExprVars& vars, const std::string& what) {
    return as_integer(eval_expr(e, vars), what + " (" + e + ")");
}

}  // namespace

std::string table_for(CodeFamily fam, const CodeContext& c) {
    const bool even = c.even();
    switch (fam) {
        case CF::Cf: return even ? "Cf-even" : "Cf-odd";
        case CF::CfPunct: return even ? "Cf-punct-even" : "Cf-punct-odd";
        case CF::D0: return even ? "D0-even" : "D0-odd";
        case CF::D0Punct: return even ? "D0-punct-even" : "D0-punct-odd";
        case CF::Dsq:
        case CF::Dnsq: {
            if (even) return "Dsq-Dnsq-even";
            bool sq = fam == CF::Dsq;
            return (sq == (c.eps0 == 1)) ? "Dsq-Dnsq-odd-same" : "Dsq-Dnsq-odd-opposite";
        }
        case CF::DsqPunct:
        case CF::DnsqPunct: {
            if (even) return "Dsq-Dnsq-punct-even";
            bool sq = fam == CF::DsqPunct;
            return (sq == (c.eps0 == 1)) ? "Dsq-Dnsq-punct-odd-same" : "Dsq-Dnsq-punct-odd-opposite";
        }
    }
    return "";
}

PredictedParameters predict_parameters(CodeFamily fam, const CodeContext& c) {
    require(context_violations(c), "invalid context");
    const int thm = construction_of(fam);
    require(construction_range_violations(thm, c), "construction " + std::to_string(thm) + " range");
    const ExprVars v = vars_of(c);
    const bool even = c.even();
    const int p = c.p, n = c.n, s = c.s;
    PredictedParameters r;
    r.construction = thm;
    r.family = fam;
    r.dimension = (thm <= 2) ? n + 1 : n;
    std::string len;
    switch (fam) {
        case CF::Cf: len = "p^n-1"; break;
        case CF::CfPunct: len = even ? "(p-1)*(p^(n-1)-e*p^((n+s)/2-1))" : "(p-1)*p^(n-1)"; break;
        case CF::D0:
        case CF::D0Punct: len = even ? "p^(n-1)+e*(p-1)*p^((n+s)/2-1)-1" : "p^(n-1)-1"; break;
        case CF::Dsq:
        case CF::DsqPunct: len = even ? "(p-1)/2*(p^(n-1)-e*p^((n+s)/2-1))" : "(p-1)/2*(p^(n-1)+e*p^((n+s-1)/2))"; break;
        case CF::Dnsq:
        case CF::DnsqPunct: len = even ? "(p-1)/2*(p^(n-1)-e*p^((n+s)/2-1))" : "(p-1)/2*(p^(n-1)-e*p^((n+s-1)/2))"; break;
    }
    if (thm == 5 || thm == 6) len = "(" + len + ")/(p-1)";
    r.length = eval_int(len, v, "length");

    switch (thm) {
        case 1:
            if (even)
                r.dual_distance = (s == 0 && n == 2 && c.eps0_star == -1) ? 3 : 2;
            else if (s == 0 && n == 1 && p != 3)
                r.dual_distance = 3;
            else if (n > 1)
                r.dual_distance = 2;
            if (p == 3) {
                if (n + s >= 3) r.self_orthogonal = true;
            } else if (!(n == 1 && s == 0) && c.symmetric) {
                r.self_orthogonal = true;
            }
            break;
        case 2:
            r.dual_distance = 3;
            if (p != 3 || n + s >= 5) r.self_orthogonal = true;
            break;
        case 3:
        case 4:
            r.dual_distance = 2;
            if (p != 3 || n + s >= 5) r.self_orthogonal = true;
            break;
        case 5:
            if (even)
                r.dual_distance = (s == 0 && n == 4 && c.k == 0) ? 4 : 3;
            else
                r.dual_distance = (s == 0 && n == 3) ? 4 : 3;
            if (p == 3 && n + s >= 5) r.self_orthogonal = true;
            if (p != 3) r.notes.push_back("self-orthogonality depends on the chosen representatives");
            break;
        case 6: {
            bool exceptional = !even && p == 3 && n == 3 &&
                               ((fam == CF::DsqPunct && c.eps0 == -1) || (fam == CF::DnsqPunct && c.eps0 == 1));
            if (exceptional)
                r.notes.push_back("excluded case p=3, n=3: dual distance not claimed");
            else
                r.dual_distance = 3;
            if (p == 3) {
                if (n + s >= 5) r.self_orthogonal = true;
            } else if (c.quadratic_exponents) {
                r.self_orthogonal = true;
                r.notes.push_back("self-orthogonal with +-representatives of a single level set");
            }
            break;
        }
    }
    return r;
}

std::vector<PredictedParameters> predict_parameters(int construction, const CodeContext& c) {
    std::vector<PredictedParameters> out;
    for (auto f : all_families())
        if (construction_of(f) == construction) out.push_back(predict_parameters(f, c));
    if (out.empty()) throw HypothesisError("construction must be in 1..6");
    return out;
}

PredictedDistribution predict(const std::string& id, const CodeContext& c, std::optional<CodeFamily> family) {
    const WeightTable& t = weight_table(id);
    if (t.even != c.even())
        throw HypothesisError("Table " + id + " needs " + (t.even ? "even" : "odd") + " n+s");
    if (family && std::find(t.families.begin(), t.families.end(), *family) == t.families.end())
        throw HypothesisError("Table " + id + " does not describe " + family_name(*family));
    CodeFamily fam = family ? *family : t.families.front();
    PredictedParameters params = predict_parameters(fam, c);

    int col = -1;
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        const auto& cl = t.columns[j];
        if (cl.eps0 && cl.eps0 != c.eps0) continue;
        if (cl.eps0_star && cl.eps0_star != c.eps0_star) continue;
        if (cl.set == 1 && !is_sq_family(fam)) continue;
        if (cl.set == 2 && !is_nsq_family(fam)) continue;
        col = static_cast<int>(j);
        break;
    }
    if (col < 0) throw HypothesisError("Table " + id + " has no column for this context and code family");

    const ExprVars v = vars_of(c);
    std::map<BigInt, BigInt> acc;
    for (std::size_t r = 0; r < t.weights.size(); ++r) {
        std::string where = "Table " + id + " row " + std::to_string(r);
        BigInt w = eval_int(t.weights[r], v, where + " weight");
        BigInt m = eval_int(t.mult[r][col], v, where + " multiplicity");
        if (w < 0) throw std::logic_error(where + ": negative weight");
        if (m < 0) throw HypothesisError(where + ": negative multiplicity " + to_string(m) + ", context not realizable");
        if (m != 0 && w > params.length) throw std::logic_error(where + ": weight exceeds the length");
        if (m != 0) acc[w] += m;
    }
    PredictedDistribution pd;
    pd.table = id;
    pd.column = t.columns[col].label;
    pd.construction = t.construction;
    pd.p = c.p;
    pd.length = params.length;
    pd.dimension = params.dimension;
    BigInt total = 0;
    for (const auto& [w, m] : acc) {
        pd.rows.emplace_back(w, m);
        total += m;
    }
    if (total != big_pow(c.p, static_cast<long long>(pd.dimension)))
        throw std::logic_error("Table " + id + ": multiplicities sum to " + to_string(total) + ", not p^" +
                               std::to_string(pd.dimension));
    return pd;
}

PredictedDistribution predict_for(CodeFamily family, const CodeContext& c) {
    return predict(table_for(family, c), c, family);
}

std::optional<DualLowWeights> predicted_dual_low_weights(CodeFamily fam, const CodeContext& c) {
    require(context_violations(c), "invalid context");
    require(construction_range_violations(construction_of(fam), c), "construction " + std::to_string(construction_of(fam)) + " range");
    const ExprVars v = vars_of(c);
    const bool even = c.even();
    const int p = c.p, n = c.n, s = c.s;
    DualLowWeights d;
    auto set3 = [&](const std::string& e, const std::string& branch) {
        d.A3 = eval_expr(e, v);
        d.branch = branch;
    };
    switch (fam) {
        case CF::CfPunct:
            if (!even)
                set3("(p-1)^2*(p-2)/6*(p^(2*n-3)+p^(2*n-1)-2*p^(2*n-2)-p^(n+s-2)-p^(n-1))", "odd n+s");
            else if (c.eps0 == 1)
                set3("(p-1)^2*(p-2)/6*(p^(2*n-3)*(p^2-2*p+1)+p^(n+s-2)*(2*p-3)+p^((n+s)/2-1)"
                     "-(2*p-4)*k*p^((n+3*s)/2-3)-(3*p^2-7*p+5)*p^((3*n+s)/2-3)-p^(n-1))",
                     "even n+s, 0 in B+(f)");
            else
                set3("(p-1)^2*(p-2)/6*(p^(2*n-3)*(p^2-2*p+1)+p^(n+s-2)*(2*p-3)+(3*p^2-5*p+1)*p^((3*n+s)/2-3)"
                     "-(2*p-4)*k*p^((n+3*s)/2-3)-p^((n+s)/2-1)-p^(n-1))",
                     "even n+s, 0 in B-(f)");
            return d;
        case CF::D0Punct:
            if (even) {
                if (c.eps0 == 1) {
                    set3("(p^(2*n)-p^(n+2)*(p+1)+p^4-p^((3*n+s)/2)*(p^2-6*p+5)+2*k*p^((n+3*s)/2)*(p^2-3*p+2)"
                         "-p^((n+s)/2+2)*(p^2-1)+p^(n+s+2)*(p-1))/(6*p^3)",
                         "even n+s, 0 in B+(f)");
                } else if (s == 0 && n == 4 && c.k != 0) {
                    set3("2*k*p^2*(p^2-3*p+2)/(6*p^3)", "even n+s, 0 in B-(f), s=0, n=4, k!=0");
                } else if (s == 0 && n == 4) {
                    d.A3 = BigRational(0);
                    d.A4 = eval_expr("p^2*(p-1)^2*(p^4-p^3-p^2-p-2)/24", v);
                    d.branch = "even n+s, 0 in B-(f), s=0, n=4, k=0";
                } else {
                    set3("(p^(2*n)-p^(n+2)*(p+1)+p^4-p^((3*n+s)/2)*(p^2-1)+2*k*p^((n+3*s)/2)*(p^2-3*p+2)"
                         "+p^((n+s)/2)*(p^4-p^2)+p^(n+s+2)*(p-1))/(6*p^3)",
                         "even n+s, 0 in B-(f), n>4");
                }
            } else if (s == 0 && n == 3) {
                d.A3 = BigRational(0);
                d.A4 = eval_expr("p*(p-1)^2*(p^2-p-2)/24", v);
                d.branch = "odd n+s, s=0, n=3";
            } else {
                set3("(p^(2*n)-p^(n+2)-p^(n+3)+p^(n+s+2)-p^(n+s+1)+p^4)/(6*p^3)", "odd n+s, n>3");
            }
            return d;
        case CF::DsqPunct:
        case CF::DnsqPunct: {
            bool sq = fam == CF::DsqPunct;
            if (even) {
                if (c.eps0 == 1)
                    set3("(p-1)/(48*p^3)*(4*k*p^((3*s+n)/2)*(p+1)-(3*p^2-4*p+5)*p^((n+s)/2+n)+(p-1)^2*p^(2*n)"
                         "-(4*p^3-8*p^2)*(p^n-p^((n+s)/2))+(2*p^2-6*p)*p^(n+s))",
                         "even n+s, 0 in B+(f)");
                else
                    set3("(p-1)/(48*p^3)*(p^((3*n+s)/2)*(3*p^2-8*p+1)+4*k*p^((3*s+n)/2)*(p+1)+(p-1)^2*p^(2*n)"
                         "-(4*p^3-8*p^2)*(p^n+p^((n+s)/2))+(2*p^2-6*p)*p^(s+n))",
                         "even n+s, 0 in B-(f)");
                return d;
            }
            if (p == 3 && n == 3 && ((sq && c.eps0 == -1) || (!sq && c.eps0 == 1))) return std::nullopt;
            if (sq && c.eps0 == 1)
                set3("(p-1)/48*((3*p^2-6*p-1)*p^(n+s-2)+(4*p-8)*(p^((3*n+s-3)/2)-p^((n+s-1)/2)-p^(n-1))"
                     "+(p-1)^2*p^(2*n-3)-2*(p^(n-s)-k)*p^((n+3*s-5)/2)*(p^2-2*p-3))",
                     "odd n+s, D_{f,sq}, 0 in B+(f)");
            else if (sq)
                set3("(p-1)/48*((3*p^2-6*p-1)*p^(n+s-2)-(4*p-8)*(p^((3*n+s-3)/2)+p^(n-1)-p^((n+s-1)/2))"
                     "+(p-1)^2*p^(2*n-3)+2*k*(p^2-2*p-3)*p^((n+3*s-5)/2))",
                     "odd n+s, D_{f,sq}, 0 in B-(f)");
            else if (c.eps0 == 1)
                set3("(p-1)/48*((3*p^2-6*p-1)*p^(n+s-2)+(p-1)^2*p^(2*n-3)-(4*p-8)*(p^(n-1)-p^((n+s-1)/2))"
                     "-2*k*(p^2-2*p-3)*p^((n+3*s-5)/2)-(2*p^2-4*p+6)*p^((3*n+s-5)/2))",
                     "odd n+s, D_{f,nsq}, 0 in B+(f)");
            else
                set3("(p-1)/48*((3*p^2-6*p-1)*p^(n+s-2)+(4*p-8)*(p^((3*n+s-3)/2)-p^((n+s-1)/2)-p^(n-1))"
                     "+(p-1)^2*p^(2*n-3)-2*k*p^((n+3*s-5)/2)*(p^2-2*p-3))",
                     "odd n+s, D_{f,nsq}, 0 in B-(f)");
            return d;
        }
        default: return std::nullopt;
    }
}

std::vector<std::string> compare(const WeightDistribution& pred, const WeightDistribution& act) {
    std::vector<std::string> diffs;
    if (pred.length != act.length)
        diffs.push_back("length: predicted " + std::to_string(pred.length) + ", enumerated " +
                        std::to_string(act.length));
    std::map<std::size_t, std::pair<BigInt, BigInt>> all;
    for (const auto& [w, a] : pred.A)
        if (a != 0) all[w].first = a;
    for (const auto& [w, a] : act.A)
        if (a != 0) all[w].second = a;
    for (const auto& [w, pr] : all)
        if (pr.first != pr.second)
            diffs.push_back("weight " + std::to_string(w) + ": predicted " + to_string(pr.first) + ", enumerated " +
                            to_string(pr.second));
    return diffs;
}

SweepResult sanity_sweep() {
    SweepResult res;
    for (int p : {3, 5, 7})
        for (int n = 1; n <= 7; ++n)
            for (int s = 0; s <= n; ++s)
                for (int e : {1, -1}) {
                    std::vector<BigInt> ks{BigInt(0), big_pow(p, n - s)};
                    if (n - s >= 1) ks.push_back(big_pow(p, n - s - 1));
                    std::sort(ks.begin(), ks.end());
                    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
                    for (const auto& k : ks) {
                        CodeContext c = CodeContext::make(p, n, s, e, k);
                        c.quadratic_exponents = true;
                        if (!context_violations(c).empty()) continue;
                        ++res.contexts;
                        for (auto fam : all_families()) {
                            if (!construction_range_violations(construction_of(fam), c).empty()) continue;
                            std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                              " s=" + std::to_string(s) + " e=" + std::to_string(e) +
                                              " k=" + to_string(k) + " " + family_name(fam);
                            PredictedDistribution pd;
                            try {
                                pd = predict_for(fam, c);
                                ++res.predictions;
                            } catch (const HypothesisError& ex) {
                                res.infeasible.push_back(tag + ": " + ex.what());
                                continue;
                            } catch (const std::exception& ex) {
                                res.failures.push_back(tag + ": " + ex.what());
                                continue;
                            }
                            auto low = predicted_dual_low_weights(fam, c);
                            if (!low) continue;
                            ++res.dual_checks;
                            WeightDistribution wd = pd.to_distribution();
                            std::vector<BigInt> pl = pless_moments(wd, pd.dimension, 4);
                            auto check = [&](std::size_t j, const std::optional<BigRational>& want) {
                                if (!want || j >= pl.size()) return;
                                if (BigRational(pl[j]) != *want)
                                    res.dual_failures.push_back(tag + " A" + std::to_string(j) + " (" + low->branch +
                                                                "): closed form " + want->str() +
                                                                ", power moments " + to_string(pl[j]));
                            };
                            check(3, low->A3);
                            check(4, low->A4);
                        }
                    }
                }
    return res;
}

}  // namespace plateau
