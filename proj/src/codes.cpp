#include "plateau/codes.hpp"

#include "plateau/field_core.hpp"

#include <algorithm>
#include <unordered_set>

namespace plateau {

namespace {

int first_nonzero_digit(std::uint64_t r, int p, int n, std::vector<int>& buf) {
    buf.resize(n);
    rank_to_digits(r, p, n, buf.data());
    for (int d : buf)
        if (d) return d;
    return 0;
}

std::unordered_set<std::uint64_t> as_set(const DefiningSet& D) { return {D.ranks.begin(), D.ranks.end()}; }

}  // namespace

DefiningSet level_set(const PFunction& f, int i) {
    DefiningSet D{f.p, f.n, {}, "D_{f," + std::to_string(i) + "}"};
    for (std::uint64_t r = 0; r < f.size(); ++r)
        if (f(r) == i) D.ranks.push_back(r);
    return D;
}

bool scale_closed(const DefiningSet& D) {
    auto s = as_set(D);
    for (auto r : D.ranks)
        for (int a = 2; a < D.p; ++a)
            if (!s.count(scale_rank(r, a, D.p, D.n))) return false;
    return true;
}

DefiningSet orbit_representatives(const DefiningSet& D, const std::string& tag) {
    DefiningSet R{D.p, D.n, {}, tag};
    std::vector<int> buf;
    for (auto r : D.ranks)
        if (first_nonzero_digit(r, D.p, D.n, buf) == 1) R.ranks.push_back(r);
    return R;
}

DefiningSet pm_representatives(const DefiningSet& D, const std::string& tag) {
    DefiningSet R{D.p, D.n, {}, tag};
    std::vector<int> buf;
    for (auto r : D.ranks) {
        int d = first_nonzero_digit(r, D.p, D.n, buf);
        if (d != 0 && 2 * d < D.p) R.ranks.push_back(r);
    }
    return R;
}

namespace {

void validate_cover(const DefiningSet& D, const DefiningSet& reps, const std::vector<int>& scalars,
                    const char* what) {
    auto target = as_set(D);
    std::unordered_set<std::uint64_t> seen;
    for (auto r : reps.ranks)
        for (int a : scalars) {
            std::uint64_t x = scale_rank(r, a, D.p, D.n);
            if (!target.count(x))
                throw HypothesisError(std::string(what) + ": a multiple of a representative leaves the set");
            if (!seen.insert(x).second)
                throw HypothesisError(std::string(what) + ": representatives overlap");
        }
    if (seen.size() != target.size())
        throw HypothesisError(std::string(what) + ": representatives do not cover the set");
}

}  // namespace

void validate_orbit_cover(const DefiningSet& D, const DefiningSet& reps) {
    std::vector<int> sc;
    for (int a = 1; a < D.p; ++a) sc.push_back(a);
    validate_cover(D, reps, sc, "orbit cover");
}

void validate_pm_cover(const DefiningSet& D, const DefiningSet& reps) {
    validate_cover(D, reps, {1, D.p - 1}, "+- cover");
}

DefiningSets defining_sets(const PFunction& f, RepSelector sel) {
    const int p = f.p, n = f.n;
    PrimeField F(p);
    DefiningSets out;
    auto mk = [&](const char* tag) { return DefiningSet{p, n, {}, tag}; };
    out.complement_D0 = mk("V\\D_{f,0}");
    out.D0 = mk("D_{f,0}\\{0}");
    out.Dsq = mk("D_{f,sq}");
    out.Dnsq = mk("D_{f,nsq}");
    for (std::uint64_t r = 0; r < f.size(); ++r) {
        int v = f(r);
        if (v == 0) {
            if (r != 0) out.D0.ranks.push_back(r);
        } else {
            out.complement_D0.ranks.push_back(r);
            (F.eta(v) == 1 ? out.Dsq : out.Dnsq).ranks.push_back(r);
        }
    }
    auto orbit = [&](const DefiningSet& D, const char* tag, DefiningSet& dst) {
        if (!scale_closed(D)) {
            dst = mk(tag);
            out.warnings.push_back(D.tag + " is not closed under F_p^* scaling; no representatives");
            return;
        }
        dst = orbit_representatives(D, tag);
    };
    orbit(out.complement_D0, "M~", out.M_tilde);
    orbit(out.D0, "D~_{f,0}\\{0}", out.D0_rep);
    if (sel == RepSelector::Orbit) {
        orbit(out.Dsq, "D~_{f,sq}", out.Dsq_rep);
        orbit(out.Dnsq, "D~_{f,nsq}", out.Dnsq_rep);
    } else {
        auto pm = [&](const DefiningSet& D, int i, const char* tag, DefiningSet& dst) {
            DefiningSet Di = level_set(f, i);
            dst = pm_representatives(Di, tag);
            try {
                validate_pm_cover(Di, dst);
                validate_orbit_cover(D, dst);
            } catch (const HypothesisError& e) {
                out.warnings.push_back(std::string(tag) + " from D~_{f," + std::to_string(i) + "}: " + e.what());
                dst = mk(tag);
            }
        };
        pm(out.Dsq, F.smallest_square(), "D~_{f,sq}", out.Dsq_rep);
        pm(out.Dnsq, F.smallest_nonsquare(), "D~_{f,nsq}", out.Dnsq_rep);
    }
    return out;
}

DefiningSet custom_representatives(const DefiningSet& D, const std::vector<std::vector<int>>& vecs) {
    DefiningSet R{D.p, D.n, {}, "custom"};
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != D.n) throw ParseError("custom representative has wrong length");
        std::vector<int> d(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) d[i] = mod(v[i], D.p);
        R.ranks.push_back(digits_to_rank(d.data(), D.p, D.n));
    }
    validate_orbit_cover(D, R);
    return R;
}

namespace {

GeneratorMatrix build_f_code(const PFunction& f, bool punctured) {
    const int p = f.p, n = f.n;
    if (f.size() == 0 || f(0) != 0) throw HypothesisError("f(0) must be 0");
    GeneratorMatrix g;
    g.label_dim = n;
    g.provenance = punctured ? "C~_f" : "C_f";
    for (std::uint64_t r = 1; r < f.size(); ++r)
        if (!punctured || f(r) != 0) g.labels.push_back(r);
    const std::size_t m = g.labels.size();
    g.G = Matrix(p, n + 1, m);
    std::vector<int> x(n);
    for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t r = g.labels[j];
        g.G.at(0, j) = static_cast<std::uint8_t>(f(r));
        rank_to_digits(r, p, n, x.data());
        std::vector<int> qx = f.space.apply(x);
        for (int i = 0; i < n; ++i) g.G.at(i + 1, j) = static_cast<std::uint8_t>(qx[i]);
    }
    return g;
}

}  // namespace

GeneratorMatrix build_Cf(const PFunction& f) { return build_f_code(f, false); }
GeneratorMatrix build_Cf_punctured(const PFunction& f) { return build_f_code(f, true); }

GeneratorMatrix build_CD(const InnerProductSpace& space, const DefiningSet& D) {
    const int p = D.p, n = D.n;
    GeneratorMatrix g;
    g.label_dim = n;
    g.provenance = "C_{" + D.tag + "}";
    g.labels = D.ranks;
    g.G = Matrix(p, n, D.size());
    std::vector<int> x(n);
    for (std::size_t j = 0; j < D.size(); ++j) {
        rank_to_digits(D.ranks[j], p, n, x.data());
        std::vector<int> qx = space.apply(x);
        for (int i = 0; i < n; ++i) g.G.at(i, j) = static_cast<std::uint8_t>(qx[i]);
    }
    return g;
}

bool is_self_orthogonal(const Matrix& G) { return gram_matrix(G).is_zero(); }

bool is_lcd(const Matrix& G, std::size_t* eff_k) {
    Echelon e = rref(G);
    if (eff_k) *eff_k = e.basis.rows;
    if (e.basis.rows == 0) return true;
    return determinant(gram_matrix(e.basis)) != 0;
}

SoChecks so_sufficient_checks(const PFunction& f) {
    const int p = f.p, n = f.n;
    SoChecks c;
    c.f0_zero = f.size() > 0 && f(0) == 0;
    c.symmetric = true;
    for (std::uint64_t r = 0; r < f.size() && c.symmetric; ++r)
        if (f(neg_rank(r, p, n)) != f(r)) c.symmetric = false;
    long long s = 0;
    for (std::uint64_t r = 0; r < f.size(); ++r) s += static_cast<long long>(f(r)) * f(r);
    c.sum_i2_Ni = static_cast<int>(s % p);
    c.symmetric_criterion = p > 3 && c.f0_zero && c.symmetric && c.sum_i2_Ni == 0;

    c.l_a.assign(p, 0);
    bool all = true;
    for (int a = 1; a < p; ++a) {
        for (int l = 2; l <= p - 1 && !c.l_a[a]; l += 2) {
            int al = pow_mod(a, l, p);
            bool ok = true;
            for (std::uint64_t r = 0; r < f.size() && ok; ++r)
                if (f(scale_rank(r, a, p, n)) != al * f(r) % p) ok = false;
            if (ok) c.l_a[a] = l;
        }
        if (!c.l_a[a]) all = false;
    }
    c.even_level_criterion = p > 3 && c.f0_zero && all;
    return c;
}

SpherePacking sphere_packing(int p, std::size_t m, std::size_t k, std::size_t d) {
    auto ball = [&](std::size_t dd) {
        BigInt sum = 0, term = 1;
        std::size_t t = dd == 0 ? 0 : (dd - 1) / 2;
        for (std::size_t j = 0; j <= t && j <= m; ++j) {
            sum += term;
            term = term * BigInt(m - j) * (p - 1) / BigInt(j + 1);
        }
        return sum;
    };
    SpherePacking sp;
    sp.ball = ball(d);
    BigInt room = big_pow(p, static_cast<long long>(m - std::min(m, k)));
    sp.holds = room >= sp.ball;
    sp.equality = room == sp.ball;
    sp.k_plus_one_excluded = k + 1 <= m && big_pow(p, static_cast<long long>(m - k - 1)) < sp.ball;
    sp.d_plus_one_excluded = room < ball(d + 1);
    return sp;
}

bool minimality_flag(const WeightDistribution& wd) {
    auto lo = wd.min_distance();
    auto hi = wd.max_weight();
    if (!lo || !hi) return false;
    return static_cast<std::uint64_t>(wd.p) * *lo > static_cast<std::uint64_t>(wd.p - 1) * *hi;
}

CodeReport code_report(const GeneratorMatrix& g, int jobs) {
    CodeReport rep;
    rep.p = g.p();
    rep.length = g.length();
    rep.provenance = g.provenance;
    if (rep.length == 0) rep.warnings.push_back("empty defining set: degenerate zero-length code");
    rep.wd = weight_distribution(g.G, jobs);
    rep.dimension = matrix_rank(g.G);
    rep.min_distance = rep.wd.min_distance();
    rep.self_orthogonal = is_self_orthogonal(g.G);
    rep.lcd = is_lcd(g.G);
    rep.minimal = minimality_flag(rep.wd);
    if (rep.min_distance) rep.sphere_packing = sphere_packing(rep.p, rep.length, rep.dimension, *rep.min_distance);
    return rep;
}

}  // namespace plateau
