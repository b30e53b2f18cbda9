#include "plateau/derived.hpp"

#include "plateau/bigint.hpp"
#include "plateau/field_core.hpp"
#include "plateau/function_zoo.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace plateau {

std::optional<std::size_t> quantum_hamming_max_k(int p, std::size_t nq, std::size_t dq) {
    const std::size_t t = dq == 0 ? 0 : (dq - 1) / 2;
    BigInt sum = 0;
    const BigInt q2 = BigInt(p) * p - 1;
    BigInt term = 1;  // C(n,j)(p^2-1)^j
    for (std::size_t j = 0; j <= t && j <= nq; ++j) {
        if (j > 0) term = term * (nq - j + 1) / j * q2;
        sum += term;
    }
    std::size_t e = 0;
    BigInt pw = 1;
    while (pw < sum) {
        pw *= p;
        ++e;
    }
    if (e > nq) return std::nullopt;
    return nq - e;
}

namespace {

std::size_t first_positive(const std::vector<BigInt>& a) {
    for (std::size_t j = 1; j < a.size(); ++j)
        if (a[j] > 0) return j;
    return a.size();
}

std::string dstr(std::size_t d) { return d >= 5 ? ">=5" : std::to_string(d); }

Matrix single_row(const Matrix& a, std::size_t r) {
    Matrix m(a.p, 1, a.cols);
    for (std::size_t j = 0; j < a.cols; ++j) m.at(0, j) = a.at(r, j);
    return m;
}

Matrix rows_of(int p, int n, const std::vector<std::vector<int>>& rows) {
    Matrix m(p, rows.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<std::uint8_t>(mod(rows[i][j], p));
    return m;
}

std::vector<int> unit(int n, int i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    return e;
}

// Evaluates f on every nonzero vector of the row space of B; returns the first failure or an empty string.
template <class Pred>
std::string sweep_span(const PFunction& f, const Matrix& B, Pred ok) {
    const int p = f.p, n = f.n;
    const std::size_t r = B.rows;
    std::vector<int> coeff(r, 0), g(n);
    const std::uint64_t total = ipow(p, static_cast<int>(r));
    for (std::uint64_t c = 1; c < total; ++c) {
        rank_to_digits(c, p, static_cast<int>(r), coeff.data());
        std::fill(g.begin(), g.end(), 0);
        for (std::size_t i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) g[j] = (g[j] + coeff[i] * B.at(i, j)) % p;
        int v = f(digits_to_rank(g.data(), p, n));
        if (!ok(v)) {
            std::ostringstream os;
            os << "gamma=(";
            for (int j = 0; j < n; ++j) os << (j ? "," : "") << g[j];
            os << ") has f(gamma)=" << v;
            return os.str();
        }
    }
    return {};
}

std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int type_of(const PFunction& f) {
    auto prof = classify_plateaued(f);
    if (!prof) throw std::logic_error("construction is not plateaued");
    return prof->eps0;
}

void check_closed_form(const QuantumParams& q) {
    if (!q.closed_form) return;
    if (q.closed_form->first != q.length || q.closed_form->second != q.dimension || q.distance != 3)
        throw std::logic_error("emitted [[" + std::to_string(q.length) + "," + std::to_string(q.dimension) + "," +
                               std::to_string(q.distance) + "]] differs from the closed form [[" +
                               std::to_string(q.closed_form->first) + "," + std::to_string(q.closed_form->second) +
                               ",3]]");
}

std::size_t to_size(const BigInt& v) { return v.convert_to<std::size_t>(); }

}  // namespace

std::size_t checked_dual_distance(const Matrix& H, const WeightDistribution* wd_rowspace, std::vector<std::string>* log) {
    const std::size_t da = static_cast<std::size_t>(dual_distance_upto4(H));
    const std::size_t r = matrix_rank(H);
    std::optional<std::size_t> db;
    WeightDistribution local;
    const WeightDistribution* wd = wd_rowspace;
    if (!wd && static_cast<double>(r) * std::log(H.p) <= std::log(static_cast<double>(kEnumerationGuard)) + 1e-9) {
        local = weight_distribution(H);
        wd = &local;
    }
    if (wd) db = first_positive(pless_moments(*wd, r, 4));
    if (db && *db != da)
        throw std::logic_error("column search gives d=" + dstr(da) + " but power moments give d=" + dstr(*db));
    if (log)
        log->push_back("distance " + dstr(da) + " by column dependencies" +
                       (db ? ", " + dstr(*db) + " by power moments" : std::string(", power moments skipped (guard)")));
    if (da < 5) return da;
    // beyond the column search: enumerate the code itself
    Matrix C = null_space(H);
    WeightDistribution full = weight_distribution(C);
    auto d = full.min_distance();
    if (!d) throw std::logic_error("zero code has no minimum distance");
    if (log) log->push_back("distance " + std::to_string(*d) + " by enumeration");
    return *d;
}

QuantumParams steane_enlarge(const SteaneInput& in) {
    const Matrix& H1 = in.H1;
    const Matrix& H2 = in.H2;
    if (H1.cols != H2.cols) throw HypothesisError("C1 and C2 have different lengths");
    if (H1.p != H2.p) throw HypothesisError("C1 and C2 live over different fields");
    QuantumParams q;
    q.p = H1.p;
    const std::size_t m = H1.cols;
    Echelon e1 = rref(H1);
    const std::size_t r1 = e1.basis.rows, r2 = matrix_rank(H2);
    q.k1 = m - r1;
    q.k2 = m - r2;
    if (!gram_matrix(e1.basis).is_zero()) throw HypothesisError("C1^perp is not contained in C1 (C1^perp not self-orthogonal)");
    q.transcript.push_back("C1^perp <= C1: Gram of C1^perp generators is zero");
    if (!row_space_contains(H1, H2)) throw HypothesisError("C1 is not contained in C2 (C2^perp not inside C1^perp)");
    q.transcript.push_back("C1 <= C2: every C2^perp generator lies in the row space of C1^perp");
    if (q.k2 < q.k1 + 2)
        throw HypothesisError("k2 >= k1 + 2 fails: k1=" + std::to_string(q.k1) + ", k2=" + std::to_string(q.k2));
    q.chain = true;
    q.transcript.push_back("k1=" + std::to_string(q.k1) + ", k2=" + std::to_string(q.k2));
    q.d1 = checked_dual_distance(H1, in.wd_H1, &q.transcript);
    q.d2 = checked_dual_distance(H2, nullptr, &q.transcript);
    const std::size_t lifted = (q.d2 * static_cast<std::size_t>(q.p + 1) + q.p - 1) / q.p;
    q.length = m;
    q.dimension = q.k1 + q.k2 - m;
    q.distance = std::min(q.d1, lifted);
    q.pure = true;
    q.hamming_max_k = quantum_hamming_max_k(q.p, q.length, q.distance);
    return q;
}

QuantumParams steane_enlarge_generators(const Matrix& G1, const Matrix& G2) {
    return steane_enlarge({null_space(G1), null_space(G2), nullptr});
}

PFunction quadratic_instance(int p, int n, int s, int eps0, Constants* chosen) {
    if (n - s < 1) throw HypothesisError("need at least one active variable (s < n)");
    PrimeField F(p);
    for (int d = 1; d < p; ++d) {
        std::vector<int> c(n, 0);
        for (int i = 0; i < n - s; ++i) c[i] = 1;
        c[n - s - 1] = d;
        PFunction f = quadratic_form(p, c);
        if (type_of(f) == eps0) {
            if (chosen) chosen->push_back({"coefficients", vec_str(c)});
            return f;
        }
    }
    throw HypothesisError("no diagonal quadratic form of the requested type");
}

QuantumParams quantum_from_function(const PFunction& f) {
    auto prof = classify_plateaued(f);
    if (!prof) throw HypothesisError("f is not plateaued");
    auto dual = dual_profile(f, *prof);
    FamilyReport fam = family_F_check(f, *prof, dual);
    if (!fam.member) {
        std::string msg = "f is not in the family:";
        for (const auto& r : fam.reasons) msg += " " + r + ";";
        throw HypothesisError(msg);
    }
    const int p = f.p, n = f.n, s = prof->s;
    const bool even = (n + s) % 2 == 0;
    if (even && (s > n - 2 || n + s < (p == 3 ? 6 : 4)))
        throw HypothesisError(std::string("range: even n+s needs s <= n-2 and n+s >= ") + (p == 3 ? "6" : "4"));
    if (!even && (s > n - 1 || n + s < (p == 3 ? 5 : 3)))
        throw HypothesisError(std::string("range: odd n+s needs s <= n-1 and n+s >= ") + (p == 3 ? "5" : "3"));

    GeneratorMatrix G = build_Cf_punctured(f);
    WeightDistribution wd = spectral_weights_Cf(f, true);
    Matrix alpha = single_row(G.G, 0);
    for (std::size_t j = 0; j < alpha.cols; ++j)
        if (alpha.at(0, j) == 0) throw std::logic_error("alpha has a zero coordinate");
    QuantumParams q = steane_enlarge({G.G, alpha, &wd});
    q.source = "C1 = dual of C~_f, C2 = dual of span(alpha), alpha = f-row of C~_f";
    q.transcript.insert(q.transcript.begin(), "f=" + f.label + ", s=" + std::to_string(s) + ", eps0=" + std::to_string(prof->eps0));
    BigInt m = even ? BigInt(p - 1) * (big_pow(p, n - 1) - prof->eps0 * big_pow(p, (n + s) / 2 - 1))
                    : BigInt(p - 1) * big_pow(p, n - 1);
    q.closed_form = std::make_pair(to_size(m), to_size(m) - n - 2);
    check_closed_form(q);
    return q;
}

namespace {

struct Enlargement {
    PFunction f;
    Matrix Hbasis;  // rows spanning H
    DefiningSet D;
    Constants constants;
    std::vector<std::string> transcript;
};

QuantumParams enlarge_subcode(Enlargement& e) {
    const PFunction& f = e.f;
    Matrix Hperp = null_space(e.Hbasis);
    GeneratorMatrix GD = build_CD(f.space, e.D);
    Matrix GC = multiply(Hperp, GD.G);
    if (dual_distance_upto4(GC) < 2) throw std::logic_error("subcode has a zero coordinate: some x lies in H");
    e.transcript.push_back("no coordinate of C vanishes: d(C^perp) >= 2");
    if (!row_space_contains(GD.G, GC)) throw std::logic_error("C is not a subcode of the punctured code");
    e.transcript.push_back("C <= punctured code by row reduction");
    QuantumParams q = steane_enlarge({GD.G, GC, nullptr});
    q.transcript.insert(q.transcript.begin(), e.transcript.begin(), e.transcript.end());
    q.constants = e.constants;
    return q;
}

}  // namespace

QuantumParams quantum_ternary_zero_set(int n, int s, int eps0) {
    const int p = 3;
    const bool even = (n + s) % 2 == 0;
    if (s < 0) throw HypothesisError("s >= 0");
    if (even && (s > n - 4 || n + s < 6)) throw HypothesisError("range: even n+s needs 0 <= s <= n-4 and n+s >= 6");
    if (!even && (s > n - 3 || n + s < 5)) throw HypothesisError("range: odd n+s needs 0 <= s <= n-3 and n+s >= 5");
    PrimeField F(p);
    const int n1 = n - 2 - s, n2 = 1;
    Enlargement e;
    int v = 0;
    const int w = 1;
    for (int cand = 1; cand < p && !v; ++cand) {
        std::vector<int> u(n1, 1), vv(n1, 1);
        u[0] = cand;
        vv[0] = w;
        PFunction f = two_level_quadratic(p, n1, n2, s, u, vv);
        if (type_of(f) == eps0) {
            v = cand;
            e.f = f;
        }
    }
    if (!v) throw HypothesisError("no construction of the requested type");
    int c = 0;
    for (int cand = 1; cand < p && !c; ++cand)
        if (F.eta(cand) != F.eta(v * w)) c = cand;
    e.constants = {{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}, {"v", std::to_string(v)},
                   {"w", std::to_string(w)}, {"c", std::to_string(c)}};
    std::vector<int> alpha = unit(n, 0), beta = unit(n, n1);
    beta[n1 + n2] = mod(-c * v, p);
    e.Hbasis = rows_of(p, n, {alpha, beta});
    e.transcript.push_back("f=" + e.f.label + ", H = span{" + vec_str(alpha) + ", " + vec_str(beta) + "}");
    std::string bad = sweep_span(e.f, e.Hbasis, [](int val) { return val != 0; });
    if (!bad.empty()) throw std::logic_error("f vanishes on H: " + bad);
    e.transcript.push_back("f(gamma) != 0 for every nonzero gamma in H");
    e.D = defining_sets(e.f).D0_rep;
    QuantumParams q = enlarge_subcode(e);
    q.source = "C1 = dual of C~_{D_{f,0}\\{0}}, C2 = dual of the H^perp subcode";
    BigInt m = even ? (big_pow(3, n - 1) + 2 * eps0 * big_pow(3, (n + s) / 2 - 1) - 1) / 2 : (big_pow(3, n - 1) - 1) / 2;
    q.closed_form = std::make_pair(to_size(m), to_size(m) + 2 - 2 * n);
    check_closed_form(q);
    return q;
}

QuantumParams quantum_square_set(int p, int n, int s, int eps0, bool nsq) {
    if (s < 0) throw HypothesisError("s >= 0");
    const int shape = n - s;
    if (shape != 3 && shape != 4) throw HypothesisError("needs n = 4+s or n = 3+s");
    if (p == 3 && s < 1) throw HypothesisError("p=3 needs s >= 1");
    PrimeField F(p);
    const int target = nsq ? F.smallest_nonsquare() : F.smallest_square();
    Enlargement e;
    const int n1 = shape == 4 ? 2 : 1, n2 = 1;
    bool found = false;
    for (int cand = 1; cand < p && !found; ++cand) {
        std::vector<int> u, v;
        if (shape == 4) {
            int c1 = nsq ? F.smallest_square() : F.smallest_nonsquare();
            u = {c1, cand};
            v = {c1, 1};
        } else {
            u = {cand};
            v = {1};
        }
        PFunction f = two_level_quadratic(p, n1, n2, s, u, v);
        if (type_of(f) == eps0) {
            e.f = f;
            e.constants = {{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}, {"u", vec_str(u)},
                           {"v", vec_str(v)}, {"i", std::to_string(target)}};
            found = true;
        }
    }
    if (!found) throw HypothesisError("no construction of the requested type");
    std::vector<std::vector<int>> hb;
    if (shape == 4) {
        hb.push_back(unit(n, 0));
        for (int i = 3; i < n; ++i) hb.push_back(unit(n, i));
    } else {
        for (int i = 2; i < n; ++i) hb.push_back(unit(n, i));
    }
    e.Hbasis = rows_of(p, n, hb);
    e.transcript.push_back("f=" + e.f.label + ", dim H=" + std::to_string(hb.size()));
    std::string bad;
    if (shape == 4)
        bad = sweep_span(e.f, e.Hbasis, [&](int val) { return val == 0 || F.eta(val) != F.eta(target); });
    else
        bad = sweep_span(e.f, e.Hbasis, [](int val) { return val == 0; });
    if (!bad.empty()) throw std::logic_error("H condition fails: " + bad);
    e.transcript.push_back(shape == 4 ? std::string("f(gamma) outside the square class of i on H\\{0}")
                                      : std::string("f(gamma) = 0 on H"));
    DefiningSets sets = defining_sets(e.f, RepSelector::PlusMinus);
    e.D = nsq ? sets.Dnsq_rep : sets.Dsq_rep;
    QuantumParams q = enlarge_subcode(e);
    q.source = std::string("C1 = dual of C~_{D_{f,i}}, i ") + (nsq ? "nonsquare" : "square") +
               ", C2 = dual of the H^perp subcode";
    q.extrapolated = nsq;
    BigInt m;
    if (shape == 4)
        m = (big_pow(p, n - 1) - eps0 * big_pow(p, n - 3)) / 2;
    else
        m = (big_pow(p, n - 1) + (nsq ? -eps0 : eps0) * big_pow(p, n - 2)) / 2;
    q.closed_form = std::make_pair(to_size(m), to_size(m) - n - 2);
    check_closed_form(q);
    return q;
}

Matrix basis_gram(const Matrix& basis) { return gram_matrix(basis); }

std::size_t random_basis_gram_check(int p, int n, std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(0, p - 1);
    std::size_t ok = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Matrix a(p, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        do {
            for (auto& x : a.data) x = static_cast<std::uint8_t>(digit(rng));
        } while (matrix_rank(a) != static_cast<std::size_t>(n));
        Matrix g = basis_gram(a);
        if (g == transpose(g) && determinant(g) != 0) ++ok;
    }
    return ok;
}

namespace {

LcdReport finish_lcd(LcdReport r) {
    const Matrix& Gp = r.Gprime;
    Matrix gram = gram_matrix(Gp);
    r.gram_nonsingular = determinant(gram) != 0;
    r.gram_identity = gram == identity_matrix(Gp.p, Gp.rows);
    if (!r.gram_nonsingular) throw std::logic_error("G' G'^T is singular");
    r.transcript.push_back(std::string("G' G'^T nonsingular") + (r.gram_identity ? " (identity)" : ""));
    GeneratorMatrix g;
    g.G = Gp;
    g.provenance = r.source;
    r.code = code_report(g);
    if (!r.code.lcd) throw std::logic_error("code is not LCD");
    r.dual = dual_distribution(r.code, 4);
    r.dual_distance_columns = static_cast<std::size_t>(dual_distance_upto4(Gp));
    r.dual_distance_moments = first_positive(r.dual.pless);
    if (r.dual.min_distance && *r.dual.min_distance != r.dual_distance_moments)
        throw std::logic_error("MacWilliams and power moments disagree");
    if (r.dual_distance_columns != r.dual_distance_moments)
        throw std::logic_error("dual distance: columns give " + dstr(r.dual_distance_columns) + ", MacWilliams gives " +
                               dstr(r.dual_distance_moments));
    r.transcript.push_back("dual distance " + dstr(r.dual_distance_columns) + " by column dependencies and MacWilliams");
    if (Gp.cols <= 400) r.dual_lcd_direct = is_lcd(null_space(Gp));
    if (r.closed_form &&
        (r.closed_form->first != r.dual.length || r.closed_form->second != r.dual.dimension || r.dual_distance_columns != 3))
        throw std::logic_error("dual parameters differ from the closed form");
    return r;
}

void require_range(int n, int s, int p, bool lcd10) {
    const bool even = (n + s) % 2 == 0;
    if (s < 0) throw HypothesisError("s >= 0");
    if (lcd10) return;
    if (even && s > n - 4) throw HypothesisError("range: even n+s needs s <= n-4");
    if (!even && s > n - 3) throw HypothesisError("range: odd n+s needs s <= n-3");
    if (p == 3 && even && n + s < 6) throw HypothesisError("range: p=3, even n+s needs n+s >= 6");
    if (p == 3 && !even && n + s < 5) throw HypothesisError("range: p=3, odd n+s needs n+s >= 5");
}

}  // namespace

LcdReport lcd_from_function(const PFunction& f) {
    auto prof = classify_plateaued(f);
    if (!prof) throw HypothesisError("f is not plateaued");
    auto dual = dual_profile(f, *prof);
    FamilyReport fam = family_F_check(f, *prof, dual);
    if (!fam.member) throw HypothesisError("f is not in the family");
    const int p = f.p, n = f.n, s = prof->s;
    const bool even = (n + s) % 2 == 0;
    if (even && (s > n - 2 || n + s < (p == 3 ? 6 : 4)))
        throw HypothesisError(std::string("range: even n+s needs s <= n-2 and n+s >= ") + (p == 3 ? "6" : "4"));
    if (!even && (s > n - 1 || n + s < (p == 3 ? 5 : 3)))
        throw HypothesisError(std::string("range: odd n+s needs s <= n-1 and n+s >= ") + (p == 3 ? "5" : "3"));
    LcdReport r;
    r.source = "G' = [I, G~_f]";
    GeneratorMatrix G = build_Cf_punctured(f);
    r.block_self_orthogonal = is_self_orthogonal(G.G);
    if (!r.block_self_orthogonal) throw std::logic_error("C~_f is not self-orthogonal");
    r.H = identity_matrix(p, G.G.rows);
    r.Gprime = hconcat(r.H, G.G);
    r.transcript.push_back("f=" + f.label + ", s=" + std::to_string(s) + ", eps0=" + std::to_string(prof->eps0));
    BigInt m = even ? BigInt(p - 1) * (big_pow(p, n - 1) - prof->eps0 * big_pow(p, (n + s) / 2 - 1))
                    : BigInt(p - 1) * big_pow(p, n - 1);
    r.closed_form = std::make_pair(to_size(m) + n + 1, to_size(m));
    return finish_lcd(std::move(r));
}

LcdReport lcd_ternary_zero_set(int n, int s, int eps0) {
    const int p = 3;
    require_range(n, s, p, false);
    const int n1 = n - 2 - s, n2 = 1;
    LcdReport r;
    PFunction f;
    int u1 = 0;
    for (int cand = 1; cand < p && !u1; ++cand) {
        std::vector<int> u(n1, 1), v(n1, 1);
        u[0] = cand;
        PFunction g = two_level_quadratic(p, n1, n2, s, u, v);
        if (type_of(g) == eps0) {
            u1 = cand;
            f = g;
        }
    }
    if (!u1) throw HypothesisError("no construction of the requested type");
    r.constants = {{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}, {"u1", std::to_string(u1)}, {"v", "1"}};
    std::vector<std::vector<int>> basis;
    for (int i = 0; i < n1; ++i) basis.push_back(unit(n, i));
    for (int i = n1; i < n; ++i) {
        auto a = unit(n, i);
        a[0] = 1;
        basis.push_back(a);
    }
    Matrix A = rows_of(p, n, basis);
    for (std::size_t i = 0; i < A.rows; ++i) {
        std::vector<int> d(A.row(i), A.row(i) + n);
        if (f(digits_to_rank(d.data(), p, n)) == 0) throw std::logic_error("f vanishes on a basis vector");
    }
    r.transcript.push_back("f=" + f.label + "; f(alpha_j) != 0 for every basis vector");
    DefiningSet D = defining_sets(f).D0_rep;
    Matrix G = multiply(A, build_CD(f.space, D).G);
    r.block_self_orthogonal = is_self_orthogonal(G);
    if (!r.block_self_orthogonal) throw std::logic_error("C~_{D_{f,0}\\{0}} is not self-orthogonal");
    r.H = basis_gram(A);
    r.Gprime = hconcat(r.H, G);
    r.source = "G' = [H1, G~_{D_{f,0}\\{0}}]";
    const bool even = (n + s) % 2 == 0;
    BigInt m = even ? (big_pow(3, n - 1) + 2 * eps0 * big_pow(3, (n + s) / 2 - 1) - 1) / 2 : (big_pow(3, n - 1) - 1) / 2;
    r.closed_form = std::make_pair(to_size(m) + n, to_size(m));
    return finish_lcd(std::move(r));
}

LcdReport lcd_square_set(int p, int n, int s, int eps0) {
    require_range(n, s, p, false);
    PrimeField F(p);
    LcdReport r;
    PFunction f;
    Matrix A;
    bool found = false;
    for (int n2 = 1; !found && n - s - 2 * n2 >= 1; ++n2) {
        const int n1 = n - s - 2 * n2;
        if (n1 == 1) {
            for (int u1 = 1; u1 < p && !found; ++u1) {
                PFunction g = two_level_quadratic(p, 1, n2, s, {u1}, {1});
                if (type_of(g) != eps0) continue;
                const int v1 = 1;
                auto a1 = unit(n, 0);
                a1[1] = 1;
                a1[1 + n2] = mod(-v1, p);
                std::vector<std::vector<int>> basis{a1};
                for (int i = 1; i < n; ++i) basis.push_back(unit(n, i));
                A = rows_of(p, n, basis);
                f = g;
                r.constants = {{"n1", "1"}, {"n2", std::to_string(n2)}, {"u1", std::to_string(u1)}, {"v1", "1"}};
                found = true;
            }
        } else {
            const int u = F.smallest_nonsquare();
            PFunction g = two_level_quadratic(p, n1, n2, s, std::vector<int>(n1, u), std::vector<int>(n1, 1));
            if (type_of(g) != eps0) continue;
            std::vector<std::vector<int>> basis;
            for (int i = 0; i < n; ++i) basis.push_back(unit(n, i));
            A = rows_of(p, n, basis);
            f = g;
            r.constants = {{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}, {"u_i", std::to_string(u)},
                           {"v_i", "1"}, {"w_i", "1"}};
            found = true;
        }
    }
    if (!found) throw HypothesisError("no construction (*) instance of the requested type for this (p, n, s)");
    const int i_sq = F.smallest_square();
    for (std::size_t i = 0; i < A.rows; ++i) {
        std::vector<int> d(A.row(i), A.row(i) + n);
        int val = f(digits_to_rank(d.data(), p, n));
        if (val != 0 && F.eta(val) == 1) throw std::logic_error("f takes a square value on a basis vector");
    }
    r.transcript.push_back("f=" + f.label + "; f(alpha_j) is zero or a nonsquare for every basis vector");
    DefiningSet D = defining_sets(f, RepSelector::PlusMinus).Dsq_rep;
    r.constants.push_back({"i", std::to_string(i_sq)});
    Matrix G = multiply(A, build_CD(f.space, D).G);
    r.block_self_orthogonal = is_self_orthogonal(G);
    if (!r.block_self_orthogonal) throw std::logic_error("C~_{D_{f,sq}} is not self-orthogonal");
    r.H = basis_gram(A);
    r.Gprime = hconcat(r.H, G);
    r.source = "G' = [H2, G~_{D_{f,sq}}]";
    const bool even = (n + s) % 2 == 0;
    BigInt m = even ? (big_pow(p, n - 1) - eps0 * big_pow(p, (n + s) / 2 - 1)) / 2
                    : (big_pow(p, n - 1) + eps0 * big_pow(p, (n + s - 1) / 2)) / 2;
    r.closed_form = std::make_pair(to_size(m) + n, to_size(m));
    return finish_lcd(std::move(r));
}

}  // namespace plateau
