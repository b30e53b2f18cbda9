#include "plateau/oracles.hpp"

#include "plateau/parallel.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace plateau {

namespace {

struct Pt {
    bool zero = false;
    bool in_supp = false;
    int eps = 0;
    int fstar = 0;
};

Pt point_info(const PlateauProfile& prof, std::uint64_t r) {
    Pt q;
    q.zero = r == 0;
    q.in_supp = prof.supp[r] != 0;
    if (q.in_supp) {
        q.eps = prof.eps[r];
        q.fstar = prof.dual[r];
    }
    return q;
}

int d0(int x) { return x == 0 ? 1 : 0; }

struct Ctx {
    int p, n, s, eps0;
    PrimeField F;
    explicit Ctx(const PlateauProfile& prof) : p(prof.p), n(prof.n), s(prof.s), eps0(prof.eps0), F(prof.p) {}
    bool even() const { return (n + s) % 2 == 0; }
    BigRational P(int e) const { return rpow(p, e); }
    BigRational pstar() const { return BigRational(F.p_star()); }
};

using R = BigRational;

R cf_M(const Ctx& c, bool a_zero, bool b_zero, const Pt& beta) {
    if (a_zero) return b_zero ? c.P(c.n) : c.P(c.n - 1);
    if (!beta.in_supp) return c.P(c.n - 1);
    if (c.even()) return R(beta.eps * (d0(beta.fstar) * c.p - 1)) * c.P((c.n + c.s) / 2 - 1) + c.P(c.n - 1);
    return R(beta.eps * c.F.eta(beta.fstar)) * c.P((c.n + c.s - 3) / 2) * c.pstar() + c.P(c.n - 1);
}

R cf_N0(const Ctx& c, const Pt& a) {
    const int p = c.p, n = c.n, s = c.s, e0 = c.eps0;
    if (c.even()) {
        if (a.zero) return c.P(n - 1) + R(e0 * (p - 1)) * c.P((n + s) / 2 - 1);
        if (!a.in_supp) return R(e0 * (p - 1)) * c.P((n + s) / 2 - 2) + c.P(n - 2);
        return R((p - 1) * (a.eps * (d0(a.fstar) * p - 1) + e0)) * c.P((n + s) / 2 - 2) + c.P(n - 2);
    }
    if (a.zero) return c.P(n - 1);
    if (!a.in_supp) return c.P(n - 2);
    return R(a.eps * (p - 1) * c.F.eta(a.fstar)) * c.P((n + s - 5) / 2) * c.pstar() + c.P(n - 2);
}

R cf_Nsq(const Ctx& c, const Pt& a, bool sq) {
    const int p = c.p, n = c.n, s = c.s, e0 = c.eps0;
    const R h(p - 1, 2);
    const int sg = sq ? 1 : -1;
    if (c.even()) {
        if (a.zero) return h * (c.P(n - 1) - R(e0) * c.P((n + s) / 2 - 1));
        if (!a.in_supp) return h * (c.P(n - 2) - R(e0) * c.P((n + s) / 2 - 2));
        int eta = c.F.eta(a.fstar), dl = d0(a.fstar);
        if (sq) return h * (c.P(n - 2) + R(a.eps * (p * (eta - dl) + 1) - e0) * c.P((n + s) / 2 - 2));
        return h * (c.P(n - 2) - R(a.eps * (p * (eta + dl) - 1) + e0) * c.P((n + s) / 2 - 2));
    }
    if (a.zero) return h * (c.P(n - 1) + R(sg * e0) * c.P((n + s - 1) / 2));
    if (!a.in_supp) return h * (c.P(n - 2) + R(sg * e0) * c.P((n + s - 3) / 2));
    int em = c.F.eta(-a.fstar), dl = d0(a.fstar);
    if (sq) return h * (c.P(n - 2) + R(a.eps * (p * dl - em - 1) + e0) * c.P((n + s - 3) / 2));
    return h * (c.P(n - 2) - R(a.eps * (p * dl + em - 1) + e0) * c.P((n + s - 3) / 2));
}

R cf_Ni(const Ctx& c, int i, const Pt& a, int b) {
    const int p = c.p, n = c.n, s = c.s, e0 = c.eps0;
    if (a.zero) return R(0);
    const PrimeField& F = c.F;
    int b2q = F.mul(F.mul(b, b), F.inv(4 % p));
    if (c.even()) {
        if (!a.in_supp) return c.P(n - 2) - R(e0) * c.P((n + s) / 2 - 2);
        if (a.fstar == 0) return R(a.eps - e0) * c.P((n + s) / 2 - 2) + c.P(n - 2);
        int v = F.eta(F.add(b2q, F.mul(i, a.fstar)));
        return R(a.eps * p * v + (a.eps - e0)) * c.P((n + s) / 2 - 2) + c.P(n - 2);
    }
    if (!a.in_supp) return R(e0 * F.eta(i)) * c.P((n + s - 3) / 2) + c.P(n - 2);
    if (a.fstar == 0) return R((e0 - a.eps) * F.eta(i)) * c.P((n + s - 3) / 2) + c.P(n - 2);
    int v = a.eps * F.eta(-a.fstar) * (d0(F.add(F.mul(i, a.fstar), b2q)) * p - 1) + (e0 - a.eps) * F.eta(i);
    return R(v) * c.P((n + s - 3) / 2) + c.P(n - 2);
}

// H[v*p + l] = #{x : f(x) = v, <q,x> = l} where q = Q*vec
void histogram(const PFunction& f, std::uint64_t vec, std::vector<std::uint64_t>& H) {
    const int p = f.p, n = f.n;
    std::vector<int> q(n), d(n, 0);
    rank_to_digits(vec, p, n, q.data());
    if (!f.space.is_standard()) q = f.space.apply(q);
    H.assign(static_cast<std::size_t>(p) * p, 0);
    int L = 0;
    const std::uint64_t N = f.size();
    for (std::uint64_t x = 0; x < N; ++x) {
        ++H[static_cast<std::size_t>(f.table[x]) * p + L];
        int i = n - 1;
        // a digit wrapping from p-1 to 0 changes <q,x> by -(p-1)q_i = q_i mod p
        while (i >= 0 && d[i] == p - 1) {
            d[i] = 0;
            L += q[i];
            if (L >= p) L -= p;
            --i;
        }
        if (i >= 0) {
            ++d[i];
            L += q[i];
            if (L >= p) L -= p;
        }
    }
}

std::string fmt_rank(std::uint64_t r, int p, int n) {
    std::vector<int> d(n);
    rank_to_digits(r, p, n, d.data());
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

struct Local {
    std::array<std::uint64_t, 5> queries{}, mism{};
    std::array<std::vector<std::string>, 5> first;
};

void note(Local& loc, int idx, const std::string& what, std::uint64_t got, const R& want) {
    ++loc.mism[idx];
    if (loc.first[idx].size() < 5) {
        std::ostringstream os;
        os << what << ": count " << got << " closed form " << want.str();
        loc.first[idx].push_back(os.str());
    }
}

}  // namespace

BigRational closed_form_M(const PlateauProfile& prof, int a, std::uint64_t b) {
    Ctx c(prof);
    a = mod(a, prof.p);
    Pt beta;
    if (a != 0) beta = point_info(prof, scale_rank(b, mod(-static_cast<long long>(c.F.inv(a)), prof.p), prof.p, prof.n));
    return cf_M(c, a == 0, b == 0, beta);
}

BigRational closed_form_N0(const PlateauProfile& prof, std::uint64_t a) { return cf_N0(Ctx(prof), point_info(prof, a)); }

BigRational closed_form_Nsq(const PlateauProfile& prof, std::uint64_t a, bool square) {
    return cf_Nsq(Ctx(prof), point_info(prof, a), square);
}

BigRational closed_form_Ni(const PlateauProfile& prof, int i, std::uint64_t a, int b) {
    return cf_Ni(Ctx(prof), mod(i, prof.p), point_info(prof, a), mod(b, prof.p));
}

std::uint64_t count_M(const PFunction& f, int a, std::uint64_t b) {
    std::vector<int> bd(f.n), x(f.n);
    rank_to_digits(b, f.p, f.n, bd.data());
    std::uint64_t cnt = 0;
    for (std::uint64_t r = 0; r < f.size(); ++r) {
        rank_to_digits(r, f.p, f.n, x.data());
        if (mod(static_cast<long long>(a) * f.table[r] + f.space.inner(bd, x), f.p) == 0) ++cnt;
    }
    return cnt;
}

static std::uint64_t count_level(const PFunction& f, std::uint64_t a, int b, const std::function<bool(int)>& lvl) {
    std::vector<int> ad(f.n), x(f.n);
    rank_to_digits(a, f.p, f.n, ad.data());
    std::uint64_t cnt = 0;
    for (std::uint64_t r = 0; r < f.size(); ++r) {
        if (!lvl(f.table[r])) continue;
        rank_to_digits(r, f.p, f.n, x.data());
        if (f.space.inner(ad, x) == mod(b, f.p)) ++cnt;
    }
    return cnt;
}

std::uint64_t count_N0(const PFunction& f, std::uint64_t a) {
    return count_level(f, a, 0, [](int v) { return v == 0; });
}

std::uint64_t count_Nsq(const PFunction& f, std::uint64_t a, bool square) {
    PrimeField F(f.p);
    return count_level(f, a, 0, [&](int v) { return F.eta(v) == (square ? 1 : -1); });
}

std::uint64_t count_Ni(const PFunction& f, int i, std::uint64_t a, int b) {
    int ii = mod(i, f.p);
    return count_level(f, a, b, [&](int v) { return v == ii; });
}

bool oracle_exhaustive_by_default(int p, int n) { return ipow(p, n + 1) <= 19683; }

std::vector<OracleTally> exp_sum_oracles(const PFunction& f, const PlateauProfile& prof, const FamilyReport& fam,
                                         const OracleOptions& opt) {
    const int p = f.p, n = f.n;
    const std::uint64_t N = f.size();
    Ctx c(prof);
    const bool exhaustive = opt.force_exhaustive || oracle_exhaustive_by_default(p, n) || N <= opt.sample_vectors;
    std::vector<std::uint64_t> vecs;
    if (exhaustive) {
        vecs.resize(N);
        for (std::uint64_t r = 0; r < N; ++r) vecs[r] = r;
    } else {
        for (std::size_t k = 0; k < opt.sample_vectors; ++k) vecs.push_back(k * N / opt.sample_vectors);
    }
    const bool in_F = fam.member && !prof.balanced;
    const bool t22 = in_F && fam.t == 2 && fam.t_prime == 2;

    const std::size_t nchunks = 64;
    std::vector<Local> locals(nchunks);
    parallel_chunks(vecs.size(), nchunks, opt.jobs, [&](std::size_t ci, std::uint64_t b, std::uint64_t e) {
        Local& loc = locals[ci];
        std::vector<std::uint64_t> H;
        std::map<std::array<int, 7>, R> memo;
        auto cached = [&](std::array<int, 7> key, const std::function<R()>& fn) -> const R& {
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(key, fn()).first;
            return it->second;
        };
        for (std::uint64_t k = b; k < e; ++k) {
            const std::uint64_t v = vecs[k];
            histogram(f, v, H);
            Pt pv = point_info(prof, v);
            // M_{a,v}
            for (int a = 0; a < p; ++a) {
                std::uint64_t got = 0;
                for (int val = 0; val < p; ++val) got += H[val * p + mod(-static_cast<long long>(a) * val, p)];
                Pt beta;
                if (a != 0) beta = point_info(prof, scale_rank(v, mod(-static_cast<long long>(c.F.inv(a)), p), p, n));
                std::array<int, 7> key{10, a == 0, v == 0, beta.in_supp, beta.eps, beta.fstar, 0};
                const R& want = cached(key, [&] { return cf_M(c, a == 0, v == 0, beta); });
                ++loc.queries[0];
                if (R(got) != want) note(loc, 0, "M a=" + std::to_string(a) + " b=" + fmt_rank(v, p, n), got, want);
            }
            if (!in_F) continue;
            std::array<int, 7> base{0, pv.zero, pv.in_supp, pv.eps, pv.fstar, 0, 0};
            {
                std::uint64_t got = H[0];
                auto key = base;
                key[0] = 11;
                const R& want = cached(key, [&] { return cf_N0(c, pv); });
                ++loc.queries[1];
                if (R(got) != want) note(loc, 1, "N0 a=" + fmt_rank(v, p, n), got, want);
            }
            for (int sq = 0; sq < 2; ++sq) {
                std::uint64_t got = 0;
                for (int val = 1; val < p; ++val)
                    if (c.F.eta(val) == (sq == 0 ? 1 : -1)) got += H[val * p];
                auto key = base;
                key[0] = 12;
                key[5] = sq;
                const R& want = cached(key, [&] { return cf_Nsq(c, pv, sq == 0); });
                ++loc.queries[2];
                if (R(got) != want)
                    note(loc, 2, std::string(sq == 0 ? "Nsq" : "Nnsq") + " a=" + fmt_rank(v, p, n), got, want);
            }
            if (!t22) continue;
            for (int i = 1; i < p; ++i)
                for (int bb = 1; bb < p; ++bb) {
                    std::uint64_t got = H[i * p + bb];
                    auto key = base;
                    key[0] = 13;
                    key[5] = i;
                    key[6] = bb;
                    const R& want = cached(key, [&] { return cf_Ni(c, i, pv, bb); });
                    ++loc.queries[3];
                    if (R(got) != want)
                        note(loc, 3,
                             "N(i=" + std::to_string(i) + ",a=" + fmt_rank(v, p, n) + ",b=" + std::to_string(bb) + ")",
                             got, want);
                }
        }
    });

    const char* names[4] = {"exp-sum M(a,b)", "exp-sum N(0,a)", "exp-sum N(sq/nsq,a)", "exp-sum N(i,a,b)"};
    std::vector<OracleTally> out(4);
    for (int k = 0; k < 4; ++k) {
        out[k].name = names[k];
        out[k].exhaustive = exhaustive;
        for (const auto& loc : locals) {
            out[k].queries += loc.queries[k];
            out[k].mismatches += loc.mism[k];
            for (const auto& s : loc.first[k])
                if (out[k].first_mismatches.size() < 5) out[k].first_mismatches.push_back(s);
        }
    }
    if (!in_F) {
        for (int k = 1; k < 4; ++k) {
            out[k].skipped = true;
            out[k].note = "function is not in the family";
        }
    } else if (!t22) {
        out[3].skipped = true;
        out[3].note = "requires t = t' = 2";
    }
    return out;
}

std::vector<OracleTally> value_oracles(const PFunction& f, const PlateauProfile& prof,
                                       const std::optional<DualProfile>& dual, const FamilyReport& fam, int jobs) {
    std::vector<OracleTally> out;
    auto cmp = [](OracleTally& t, const std::vector<std::uint64_t>& got, const std::vector<BigRational>& want,
                  const std::string& what) {
        for (std::size_t j = 0; j < got.size(); ++j) {
            ++t.queries;
            if (BigRational(got[j]) != want[j]) {
                ++t.mismatches;
                if (t.first_mismatches.size() < 5)
                    t.first_mismatches.push_back(what + " j=" + std::to_string(j) + ": count " +
                                                 std::to_string(got[j]) + " closed form " + want[j].str());
            }
        }
    };
    {
        OracleTally t;
        t.name = "value distribution of f";
        if (prof.balanced) {
            t.skipped = true;
            t.note = "balanced";
        } else {
            cmp(t, value_distribution(f), closed_form_N(prof.p, prof.n, prof.s, prof.eps0, *prof.j0), "N_j(f)");
        }
        out.push_back(t);
    }
    {
        OracleTally t4, t5;
        t4.name = "value distribution of f*";
        t5.name = "split distribution c_j, d_j of f*";
        if (!dual) {
            t4.skipped = t5.skipped = true;
            t4.note = t5.note = "dual not bent relative to the support";
        } else {
            auto dd = dual_value_distribution(prof);
            int j0 = f.table[0];
            cmp(t4, dd.N, closed_form_dual_N(prof.p, prof.n, prof.s, dual->eps0_star, j0), "N_j(f*)");
            std::vector<BigRational> c, d;
            closed_form_cd(prof.p, prof.n, prof.s, dual->eps0_star, prof.k, j0, c, d);
            cmp(t5, dd.c, c, "c_j");
            cmp(t5, dd.d, d, "d_j");
        }
        out.push_back(t4);
        out.push_back(t5);
    }
    {
        OracleTally t;
        t.name = "partial sums S0, S1";
        if (!dual || !fam.member) {
            t.skipped = true;
            t.note = "function is not in the family";
        } else {
            WalshSpectrum S0, S1;
            partial_walsh_sums_all(f, *dual, S0, S1, jobs);
            for (std::uint64_t a = 0; a < f.size(); ++a) {
                PartialSums want = closed_form_partial_sums(prof, a);
                t.queries += 2;
                bool bad0 = S0.value(a) != want.S0, bad1 = S1.value(a) != want.S1;
                t.mismatches += bad0 + bad1;
                if ((bad0 || bad1) && t.first_mismatches.size() < 5)
                    t.first_mismatches.push_back("alpha=" + fmt_rank(a, f.p, f.n) + " S0=" + S0.value(a).to_string() +
                                                 " S1=" + S1.value(a).to_string());
            }
        }
        out.push_back(t);
    }
    return out;
}

}  // namespace plateau
