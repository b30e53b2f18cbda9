#include "plateau/function_zoo.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <memory>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace plateau {

const char* const kExample1Poly = "x1^2*x4^4 + 4*x1*x2^3*x4^4 + x1*x2^3 + 2*x2^2*x4^4 + x3*x4";
const char* const kExample2Poly = "x1^2*x5^2 + x1^2 + x2^2 + x3^2 + x4*x5";

// ------------------------------------------------------------------ polynomial DSL

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    long long number() {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected a number at offset " + std::to_string(i));
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000LL) throw ParseError("number too large at offset " + std::to_string(i));
            ++i;
        }
        return v;
    }
};

}  // namespace

PolynomialExpr parse_polynomial(const std::string& text, int p, int n) {
    PrimeField F(p);
    PolynomialExpr ex;
    ex.p = p;
    ex.n = n;
    Lexer lx{text};
    if (lx.eof()) throw ParseError("empty polynomial");
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('+')) {
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at offset " + std::to_string(lx.i));
        }
        first = false;
        Term t;
        t.exps.assign(n, 0);
        long long coeff = 1;
        bool any = false;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = coeff * lx.number() % p;
                any = true;
            } else if (c == 'x' || c == 'X') {
                ++lx.i;
                long long v = lx.number();
                if (v < 1 || v > n) throw ParseError("variable x" + std::to_string(v) + " out of range 1.." + std::to_string(n));
                long long e = 1;
                if (lx.accept('^')) e = lx.number();
                t.exps[v - 1] += static_cast<int>(e);
                any = true;
            } else {
                break;
            }
            if (!lx.accept('*')) {
                char d = lx.peek();
                if (!(d == 'x' || d == 'X')) break;  // allow juxtaposition like 4x1
            }
        }
        if (!any) throw ParseError("empty term at offset " + std::to_string(lx.i));
        t.coeff = mod(sign * coeff, p);
        if (t.coeff != 0) ex.terms.push_back(std::move(t));
    }
    return ex;
}

int eval_polynomial(const PolynomialExpr& expr, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) != expr.n) throw std::invalid_argument("variable count mismatch");
    const int p = expr.p;
    long long acc = 0;
    for (const auto& t : expr.terms) {
        long long v = t.coeff;
        for (int i = 0; i < expr.n && v != 0; ++i)
            if (t.exps[i] > 0) v = v * pow_mod(x[i], t.exps[i], p) % p;
        acc += v;
    }
    return mod(acc, p);
}

PFunction polynomial_function(const std::string& text, int p, int n) {
    PolynomialExpr ex = parse_polynomial(text, p, n);
    PFunction f = PFunction::from_fn(InnerProductSpace::dot(p, n), [&](const std::vector<int>& x) {
        return eval_polynomial(ex, x);
    });
    f.label = text;
    return f;
}

// ------------------------------------------------------------------ truth tables

PFunction read_truth_table(std::istream& in) {
    int p = 0, n = 0;
    std::string header;
    if (!std::getline(in, header)) throw ParseError("truth table: missing header");
    {
        std::istringstream hs(header);
        if (!(hs >> p >> n)) throw ParseError("truth table: header must be 'p n'");
        std::string extra;
        if (hs >> extra) throw ParseError("truth table: unexpected header token '" + extra + "'");
    }
    if (!is_prime(p) || p == 2 || p > kMaxPrime) throw ParseError("truth table: p must be an odd prime <= 31");
    if (n < 1) throw ParseError("truth table: n must be positive");
    std::uint64_t N = guarded_power(p, n);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<std::uint8_t> t;
    t.reserve(N);
    bool spaced = false;
    {
        std::istringstream bs(body);
        std::string tok;
        std::size_t count = 0;
        while (bs >> tok && count < 2) ++count;
        spaced = count > 1;
    }
    if (spaced) {
        std::istringstream bs(body);
        std::string tok;
        while (bs >> tok) {
            for (char c : tok)
                if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("truth table: bad value '" + tok + "'");
            long long v = std::stoll(tok);
            if (v >= p) throw ParseError("truth table: value " + tok + " out of range");
            t.push_back(static_cast<std::uint8_t>(v));
        }
    } else {
        for (char c : body) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            int v;
            if (std::isdigit(static_cast<unsigned char>(c)))
                v = c - '0';
            else if (std::isalpha(static_cast<unsigned char>(c)))
                v = std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
            else
                throw ParseError(std::string("truth table: bad character '") + c + "'");
            if (v >= p) throw ParseError(std::string("truth table: digit '") + c + "' out of range");
            t.push_back(static_cast<std::uint8_t>(v));
        }
    }
    if (t.size() != N)
        throw ParseError("truth table: expected " + std::to_string(N) + " values, found " + std::to_string(t.size()));
    PFunction f(InnerProductSpace::dot(p, n), std::move(t));
    f.label = "truth-table";
    return f;
}

PFunction load_truth_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open truth table '" + path + "'");
    PFunction f = read_truth_table(in);
    f.label = path;
    return f;
}

void write_truth_table(std::ostream& out, const PFunction& f) {
    out << f.p << " " << f.n << "\n";
    if (f.p <= 10) {
        for (auto v : f.table) out << static_cast<char>('0' + v);
    } else {
        for (std::size_t i = 0; i < f.table.size(); ++i) out << (i ? " " : "") << static_cast<int>(f.table[i]);
    }
    out << "\n";
}

// ------------------------------------------------------------------ constructions

PFunction quadratic_form(int p, const std::vector<int>& coeffs) {
    PrimeField F(p);
    const int n = static_cast<int>(coeffs.size());
    std::vector<int> d(coeffs);
    for (int& c : d) c = mod(c, p);
    PFunction f = PFunction::from_fn(InnerProductSpace::dot(p, n), [&](const std::vector<int>& x) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<long long>(d[i]) * x[i] * x[i];
        return mod(s, p);
    });
    std::ostringstream os;
    os << "quadratic(";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << d[i];
    os << ")";
    f.label = os.str();
    return f;
}

GmmfResult gmmf(const GmmfParams& params) {
    const int p = params.p, n1 = params.n1, n2 = params.n2;
    auto K = std::make_shared<const ExtField>(p, n2);
    const std::uint64_t q = K->order();
    const long long qm1 = static_cast<long long>(q) - 1;
    if (params.l < 1 || std::gcd(static_cast<long long>(params.l - 1), qm1) != 1)
        throw HypothesisError("gcd(l-1, p^n2 - 1) must be 1");
    if (params.family.size() != q) throw HypothesisError("family must have p^n2 members");
    GmmfResult res;
    for (long long e = 1; e <= qm1; ++e)
        if ((e * (params.l - 1)) % qm1 == 1 % qm1) {
            res.e = static_cast<int>(e);
            break;
        }

    std::vector<PlateauProfile> profs;
    std::vector<DualProfile> duals;
    for (std::uint64_t z = 0; z < q; ++z) {
        const PFunction& g = params.family[z];
        if (g.p != p || g.n != n1) throw HypothesisError("family member has the wrong shape");
        auto pr = classify_plateaued(g);
        if (!pr || pr->s != 0 || !pr->weakly_regular)
            throw HypothesisError("family member " + std::to_string(z) + " is not weakly regular bent");
        auto dp = dual_profile(g, *pr);
        if (!dp) throw HypothesisError("family member " + std::to_string(z) + " has no bent dual");
        res.family_types.push_back(pr->eps0);
        profs.push_back(*pr);
        duals.push_back(*dp);
    }

    InnerProductSpace space(p, {SpaceFactor{SpaceFactor::Kind::Dot, n1, nullptr},
                                SpaceFactor{SpaceFactor::Kind::Trace, n2, K},
                                SpaceFactor{SpaceFactor::Kind::Trace, n2, K}});
    const std::uint64_t N1 = ipow(p, n1);
    const std::uint64_t N = N1 * q * q;
    guarded_power(p, n1 + 2 * n2);
    std::vector<std::uint8_t> table(N);
    std::vector<int> trace_tab(q);
    for (std::uint64_t r = 0; r < q; ++r) trace_tab[r] = K->trace(K->from_index(r));
    std::vector<std::uint64_t> pow_l1(q), pow_e(q);
    for (std::uint64_t r = 0; r < q; ++r) {
        auto z = K->from_index(r);
        pow_l1[r] = (r == 0) ? 0 : K->index(K->pow(z, static_cast<std::uint64_t>(params.l - 1)));
        pow_e[r] = (r == 0) ? 0 : K->index(K->pow(z, static_cast<std::uint64_t>(res.e)));
    }
    std::vector<std::vector<std::uint64_t>> mul(q, std::vector<std::uint64_t>(q));
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b) mul[a][b] = K->index(K->mul(K->from_index(a), K->from_index(b)));
    for (std::uint64_t x = 0; x < N1; ++x)
        for (std::uint64_t y = 0; y < q; ++y)
            for (std::uint64_t z = 0; z < q; ++z)
                table[(x * q + y) * q + z] =
                    static_cast<std::uint8_t>((params.family[z].table[x] + trace_tab[mul[y][pow_l1[z]]]) % p);
    res.F = PFunction(space, std::move(table));
    {
        std::ostringstream os;
        os << "gmmf(p=" << p << ",n1=" << n1 << ",n2=" << n2 << ",l=" << params.l << ",mod=" << K->modulus_string() << ")";
        res.F.label = os.str();
    }

    auto prof = classify_plateaued(res.F);
    if (!prof || prof->s != 0) {
        res.notes.push_back("F is not bent");
        return res;
    }
    // F*(x,y,z) = f^{(y^e)*}(x) - Tr(y^e z);  B+(F) = V x W+(F) x K
    res.dual_formula_ok = true;
    res.sign_sets_ok = true;
    for (std::uint64_t x = 0; x < N1; ++x)
        for (std::uint64_t y = 0; y < q; ++y)
            for (std::uint64_t z = 0; z < q; ++z) {
                std::uint64_t r = (x * q + y) * q + z;
                std::uint64_t ye = pow_e[y];
                int want = mod(profs[ye].dual[x] - trace_tab[mul[ye][z]], p);
                if (prof->dual[r] != want) res.dual_formula_ok = false;
                if (prof->eps[r] != profs[pow_e[y]].eps0) res.sign_sets_ok = false;
            }
    if (!res.dual_formula_ok) res.notes.push_back("dual formula mismatch");
    if (!res.sign_sets_ok) res.notes.push_back("B+(F) structure mismatch");
    auto dprof = dual_profile(res.F, *prof);
    if (dprof) {
        res.dual_sign_sets_ok = true;
        for (std::uint64_t x = 0; x < N1; ++x)
            for (std::uint64_t y = 0; y < q; ++y)
                for (std::uint64_t z = 0; z < q; ++z) {
                    std::uint64_t r = (x * q + y) * q + z;
                    std::uint64_t mz = K->index(K->sub(K->zero(), K->from_index(z)));
                    if (dprof->eps_star[r] != duals[mz].eps0_star) res.dual_sign_sets_ok = false;
                }
        if (!res.dual_sign_sets_ok) res.notes.push_back("B+(F*) structure mismatch");
    } else {
        res.notes.push_back("dual of F is not bent");
    }
    return res;
}

PFunction mm_variant(int p, int n1, int n2, int s, const std::vector<PFunction>& family) {
    PrimeField F(p);
    const std::uint64_t Q = ipow(p, n2);
    if (family.size() != Q) throw HypothesisError("family must have p^n2 members");
    std::vector<std::string> bad;
    for (std::uint64_t z = 0; z < Q; ++z) {
        const PFunction& g = family[z];
        if (g.p != p || g.n != n1) throw HypothesisError("family member has the wrong shape");
        auto pr = classify_plateaued(g);
        if (!pr || pr->s != 0 || !pr->weakly_regular) bad.push_back("member " + std::to_string(z) + " is not weakly regular bent");
        auto l = lform_check(g);
        if (std::find(l.begin(), l.end(), 2) == l.end()) bad.push_back("member " + std::to_string(z) + " is not a 2-form");
        if (g.table[0] != 0) bad.push_back("member " + std::to_string(z) + " has f(0) != 0");
        for (int c = 2; c < p; ++c)
            if (family[scale_rank(z, c, p, n2)].table != g.table) {
                bad.push_back("member " + std::to_string(z) + " differs from its scalar multiple");
                break;
            }
    }
    if (!bad.empty()) {
        std::string msg = "family preconditions violated:";
        for (const auto& b : bad) msg += " " + b + ";";
        throw HypothesisError(msg);
    }
    const int n = n1 + 2 * n2 + s;
    const std::uint64_t N = guarded_power(p, n);
    const std::uint64_t S = ipow(p, s);
    const std::uint64_t N1 = ipow(p, n1);
    std::vector<int> yd(n2), zd(n2);
    std::vector<std::vector<int>> yz(Q * Q);
    std::vector<int> dotyz(Q * Q);
    for (std::uint64_t y = 0; y < Q; ++y) {
        rank_to_digits(y, p, n2, yd.data());
        for (std::uint64_t z = 0; z < Q; ++z) {
            rank_to_digits(z, p, n2, zd.data());
            long long d = 0;
            for (int i = 0; i < n2; ++i) d += static_cast<long long>(yd[i]) * zd[i];
            dotyz[y * Q + z] = mod(d, p);
        }
    }
    std::vector<std::uint8_t> table(N);
    for (std::uint64_t x = 0; x < N1; ++x)
        for (std::uint64_t y = 0; y < Q; ++y)
            for (std::uint64_t z = 0; z < Q; ++z) {
                int v = (family[z].table[x] + dotyz[y * Q + z]) % p;
                std::uint64_t base = ((x * Q + y) * Q + z) * S;
                std::fill_n(table.begin() + static_cast<std::ptrdiff_t>(base), S, static_cast<std::uint8_t>(v));
            }
    PFunction f(InnerProductSpace::dot(p, n), std::move(table));
    std::ostringstream os;
    os << "mm-variant(p=" << p << ",n1=" << n1 << ",n2=" << n2 << ",s=" << s << ")";
    f.label = os.str();
    return f;
}

PFunction two_level_quadratic(int p, int n1, int n2, int s, const std::vector<int>& u, const std::vector<int>& v) {
    if (static_cast<int>(u.size()) != n1 || static_cast<int>(v.size()) != n1)
        throw HypothesisError("coefficient vectors must have n1 entries");
    for (int c : u)
        if (mod(c, p) == 0) throw HypothesisError("coefficients of f^(0) must be nonzero");
    for (int c : v)
        if (mod(c, p) == 0) throw HypothesisError("coefficients of f^(z) must be nonzero");
    const std::uint64_t Q = ipow(p, n2);
    PFunction f0 = quadratic_form(p, u), f1 = quadratic_form(p, v);
    std::vector<PFunction> fam;
    fam.reserve(Q);
    for (std::uint64_t z = 0; z < Q; ++z) fam.push_back(z == 0 ? f0 : f1);
    PFunction f = mm_variant(p, n1, n2, s, fam);
    std::ostringstream os;
    os << "two-level(p=" << p << ",n1=" << n1 << ",n2=" << n2 << ",s=" << s << ",u=";
    for (int i = 0; i < n1; ++i) os << (i ? ":" : "") << mod(u[i], p);
    os << ",v=";
    for (int i = 0; i < n1; ++i) os << (i ? ":" : "") << mod(v[i], p);
    os << ")";
    f.label = os.str();
    return f;
}

PFunction example_function(int idx) {
    PFunction f;
    if (idx == 1)
        f = polynomial_function(kExample1Poly, 5, 6);
    else if (idx == 2)
        f = polynomial_function(kExample2Poly, 3, 6);
    else
        throw std::invalid_argument("example index must be 1 or 2");
    f.label = "example-" + std::to_string(idx);
    return f;
}

}  // namespace plateau
