#include "plateau/spectral.hpp"

#include "plateau/parallel.hpp"

#include <numeric>
#include <stdexcept>

namespace plateau {

BigRational rpow(int p, int e) {
    if (e >= 0) return BigRational(big_pow(p, e));
    return BigRational(BigInt(1), big_pow(p, -e));
}

// ------------------------------------------------------------------ PFunction

PFunction::PFunction(int p_, int n_)
    : p(p_), n(n_), space(InnerProductSpace::dot(p_, n_)), table(guarded_power(p_, n_), 0) {}

PFunction::PFunction(InnerProductSpace sp, std::vector<std::uint8_t> t)
    : p(sp.p()), n(sp.dim()), space(std::move(sp)), table(std::move(t)) {
    if (table.size() != guarded_power(p, n)) throw std::invalid_argument("table length must be p^n");
    for (auto v : table)
        if (v >= p) throw std::invalid_argument("table value out of range");
}

PFunction PFunction::from_fn(const InnerProductSpace& space, const std::function<int(const std::vector<int>&)>& fn) {
    int p = space.p(), n = space.dim();
    std::uint64_t N = guarded_power(p, n);
    std::vector<std::uint8_t> t(N);
    std::vector<int> d(n);
    for (std::uint64_t r = 0; r < N; ++r) {
        rank_to_digits(r, p, n, d.data());
        t[r] = static_cast<std::uint8_t>(mod(fn(d), p));
    }
    return PFunction(space, std::move(t));
}

// ------------------------------------------------------------------ spectrum

WalshSpectrum::WalshSpectrum(int p, int n, std::vector<long long> coords)
    : p_(p), n_(n), size_(ipow(p, n)), coords_(std::move(coords)) {
    if (coords_.size() != size_ * (p - 1)) throw std::invalid_argument("spectrum size mismatch");
}

CycInt WalshSpectrum::value(std::uint64_t r) const {
    const long long* c = raw(r);
    std::vector<BigInt> v(c, c + p_ - 1);
    return CycInt(p_, std::move(v));
}

bool WalshSpectrum::is_zero(std::uint64_t r) const {
    const long long* c = raw(r);
    for (int i = 0; i < p_ - 1; ++i)
        if (c[i] != 0) return false;
    return true;
}

WalshSpectrum masked_transform(int p, int n, const InnerProductSpace& space, const std::vector<std::int16_t>& exps,
                               int jobs) {
    const std::uint64_t N = guarded_power(p, n);
    if (exps.size() != N) throw std::invalid_argument("exponent table length must be p^n");
    const std::uint64_t P = static_cast<std::uint64_t>(p);
    // group ring Z[C_p] per point: a[r*p + j] is the coefficient of xi^j
    std::vector<long long> a(N * P, 0);
    for (std::uint64_t r = 0; r < N; ++r)
        if (exps[r] >= 0) a[r * P + static_cast<std::uint64_t>(exps[r] % p)] = 1;

    std::uint64_t stride = N;
    for (int axis = 0; axis < n; ++axis) {
        stride /= P;
        const std::uint64_t lines = N / P;
        parallel_chunks(lines, 64, jobs, [&](std::size_t, std::uint64_t b, std::uint64_t e) {
            std::vector<long long> in(P * P), out(P * P);
            for (std::uint64_t L = b; L < e; ++L) {
                std::uint64_t base = (L / stride) * stride * P + (L % stride);
                for (std::uint64_t c = 0; c < P; ++c)
                    std::copy_n(&a[(base + c * stride) * P], P, &in[c * P]);
                std::fill(out.begin(), out.end(), 0);
                for (std::uint64_t al = 0; al < P; ++al) {
                    long long* o = &out[al * P];
                    for (std::uint64_t c = 0; c < P; ++c) {
                        std::uint64_t shift = (al * c) % P;
                        const long long* x = &in[c * P];
                        for (std::uint64_t j = 0; j < P; ++j) o[(j + P - shift) % P] += x[j];
                    }
                }
                for (std::uint64_t c = 0; c < P; ++c)
                    std::copy_n(&out[c * P], P, &a[(base + c * stride) * P]);
            }
        });
    }

    std::vector<long long> coords(N * (P - 1));
    for (std::uint64_t r = 0; r < N; ++r) {
        std::uint64_t src = space.is_standard() ? r : space.apply_rank(r);
        for (std::uint64_t j = 1; j < P; ++j) coords[r * (P - 1) + j - 1] = a[src * P + j] - a[src * P];
    }
    return WalshSpectrum(p, n, std::move(coords));
}

static std::vector<std::int16_t> exps_of(const PFunction& f) {
    return std::vector<std::int16_t>(f.table.begin(), f.table.end());
}

WalshSpectrum walsh_transform(const PFunction& f, int jobs) {
    return masked_transform(f.p, f.n, f.space, exps_of(f), jobs);
}

WalshSpectrum walsh_transform_naive(const PFunction& f) {
    const int p = f.p, n = f.n;
    const std::uint64_t N = guarded_power(p, n);
    std::vector<int> digits(N * n);
    for (std::uint64_t r = 0; r < N; ++r) rank_to_digits(r, p, n, &digits[r * n]);
    std::vector<long long> coords(N * (p - 1));
    std::vector<long long> acc(p);
    for (std::uint64_t al = 0; al < N; ++al) {
        std::vector<int> q = f.space.apply(std::vector<int>(&digits[al * n], &digits[al * n] + n));
        std::fill(acc.begin(), acc.end(), 0);
        for (std::uint64_t x = 0; x < N; ++x) {
            long long ip = 0;
            for (int i = 0; i < n; ++i) ip += static_cast<long long>(q[i]) * digits[x * n + i];
            acc[mod(static_cast<long long>(f.table[x]) - ip, p)] += 1;
        }
        for (int j = 1; j < p; ++j) coords[al * (p - 1) + j - 1] = acc[j] - acc[0];
    }
    return WalshSpectrum(p, n, std::move(coords));
}

// ------------------------------------------------------------------ classification

std::vector<std::uint64_t> PlateauProfile::plus_set() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < eps.size(); ++r)
        if (eps[r] > 0) out.push_back(r);
    return out;
}

std::vector<std::uint64_t> PlateauProfile::minus_set() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < eps.size(); ++r)
        if (eps[r] < 0) out.push_back(r);
    return out;
}

std::string PlateauProfile::type_string() const {
    if (balanced) return "balanced";
    return eps0 > 0 ? "(+)" : "(-)";
}

std::optional<PlateauProfile> classify_plateaued(const WalshSpectrum& W, const InnerProductSpace& space) {
    const int p = W.p(), n = W.n();
    const std::uint64_t N = W.size();
    std::uint64_t first = N;
    for (std::uint64_t r = 0; r < N; ++r)
        if (!W.is_zero(r)) {
            first = r;
            break;
        }
    if (first == N) return std::nullopt;
    const CycInt w0 = W.value(first);
    auto nrm_opt = (w0 * w0.conj()).as_integer();
    if (!nrm_opt) return std::nullopt;
    const BigInt nrm = *nrm_opt;
    int e = 0;
    BigInt pw = 1;
    while (pw < nrm) {
        pw *= p;
        ++e;
    }
    if (pw != nrm) return std::nullopt;
    int s = e - n;
    if (s < 0 || s > n) return std::nullopt;

    PlateauRecognizer rec(p, e);
    PlateauProfile prof;
    prof.p = p;
    prof.n = n;
    prof.s = s;
    prof.space = space;
    prof.supp.assign(N, 0);
    prof.dual.assign(N, -1);
    prof.eps.assign(N, 0);
    for (std::uint64_t r = 0; r < N; ++r) {
        if (W.is_zero(r)) continue;
        auto m = rec.match(W.raw(r));
        if (!m) return std::nullopt;
        prof.supp[r] = 1;
        prof.dual[r] = static_cast<std::int8_t>(m->j);
        prof.eps[r] = static_cast<std::int8_t>(m->eps);
        ++prof.supp_size;
        if (m->eps > 0) ++prof.k;
    }
    if (prof.supp_size != ipow(p, n - s)) return std::nullopt;
    prof.balanced = prof.supp[0] == 0;
    if (!prof.balanced) {
        prof.eps0 = prof.eps[0];
        prof.j0 = prof.dual[0];
    }
    prof.weakly_regular = prof.k == 0 || prof.k == prof.supp_size;
    return prof;
}

std::optional<PlateauProfile> classify_plateaued(const PFunction& f, int jobs) {
    return classify_plateaued(walsh_transform(f, jobs), f.space);
}

WalshSpectrum reconstruct_spectrum(const PlateauProfile& prof) {
    const int p = prof.p;
    const std::uint64_t N = prof.supp.size();
    PlateauRecognizer rec(p, prof.n + prof.s);
    std::vector<std::vector<long long>> vals(2 * p);
    for (int e = 0; e < 2; ++e)
        for (int j = 0; j < p; ++j) {
            const CycInt v = rec.value(e == 0 ? 1 : -1, j);
            for (const auto& c : v.coords()) vals[e * p + j].push_back(c.convert_to<long long>());
        }
    std::vector<long long> coords(N * (p - 1), 0);
    for (std::uint64_t r = 0; r < N; ++r) {
        if (!prof.supp[r]) continue;
        const auto& v = vals[(prof.eps[r] > 0 ? 0 : 1) * p + prof.dual[r]];
        std::copy(v.begin(), v.end(), coords.begin() + static_cast<std::ptrdiff_t>(r * (p - 1)));
    }
    return WalshSpectrum(p, prof.n, std::move(coords));
}

// ------------------------------------------------------------------ dual

std::vector<std::uint64_t> DualProfile::plus_set() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < plus_mask.size(); ++r)
        if (plus_mask[r]) out.push_back(r);
    return out;
}

std::vector<std::uint64_t> DualProfile::minus_set() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < plus_mask.size(); ++r)
        if (!plus_mask[r]) out.push_back(r);
    return out;
}

WalshSpectrum dual_transform(const PlateauProfile& prof, int jobs) {
    std::vector<std::int16_t> exps(prof.dual.begin(), prof.dual.end());
    return masked_transform(prof.p, prof.n, prof.space, exps, jobs);
}

std::optional<DualProfile> dual_profile(const PFunction& f, const PlateauProfile& prof, int jobs) {
    WalshSpectrum W = dual_transform(prof, jobs);
    const int p = prof.p, n = prof.n;
    const std::uint64_t N = W.size();
    PlateauRecognizer rec(p, n - prof.s);
    DualProfile d;
    d.dual_of_dual.assign(N, 0);
    d.eps_star.assign(N, 0);
    d.plus_mask.assign(N, 0);
    for (std::uint64_t r = 0; r < N; ++r) {
        auto m = rec.match(W.raw(r));
        if (!m) return std::nullopt;
        d.dual_of_dual[r] = static_cast<std::int8_t>(m->j);
        d.eps_star[r] = static_cast<std::int8_t>(m->eps);
        if (m->eps > 0) {
            d.plus_mask[r] = 1;
            ++d.plus_count;
        }
    }
    d.eps0_star = d.eps_star[0];
    d.double_dual_ok = true;
    for (std::uint64_t r = 0; r < N && d.double_dual_ok; ++r)
        if (d.dual_of_dual[r] != f.table[neg_rank(r, p, n)]) d.double_dual_ok = false;
    if (!d.double_dual_ok) return std::nullopt;
    return d;
}

// ------------------------------------------------------------------ family membership

static bool scale_closed_mask(const std::vector<std::uint8_t>& mask, int p, int n) {
    int g = PrimeField(p).primitive_root();
    for (std::uint64_t r = 0; r < mask.size(); ++r)
        if (mask[r] != mask[scale_rank(r, g, p, n)]) return false;
    return true;
}

std::vector<int> homogeneity_exponents(const std::vector<std::int8_t>& table, int p, int n,
                                       const std::vector<std::uint8_t>* mask, bool mask_value, int lo,
                                       bool require_gcd) {
    const std::uint64_t N = table.size();
    PrimeField F(p);
    std::vector<std::uint64_t> pts;
    for (std::uint64_t r = 0; r < N; ++r)
        if (!mask || ((*mask)[r] != 0) == mask_value) pts.push_back(r);
    // a primitive root suffices when the point set is closed under scaling
    bool closed = true;
    {
        std::vector<std::uint8_t> in(N, 0);
        for (auto r : pts) in[r] = 1;
        closed = scale_closed_mask(in, p, n);
    }
    std::vector<int> scalars;
    if (closed)
        scalars.push_back(F.primitive_root());
    else
        for (int a = 2; a < p; ++a) scalars.push_back(a);

    std::vector<int> out;
    for (int e = lo; e <= p - 1; ++e) {
        if (require_gcd && std::gcd(e - 1, p - 1) != 1) continue;
        bool ok = true;
        for (int a : scalars) {
            int ae = F.pow(a, e);
            for (auto r : pts) {
                int fx = table[r];
                int fax = table[scale_rank(r, a, p, n)];
                if (fx < 0 || fax < 0 || fax != F.mul(ae, fx)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) out.push_back(e);
    }
    return out;
}

static std::vector<std::int8_t> as_i8(const std::vector<std::uint8_t>& t) {
    return std::vector<std::int8_t>(t.begin(), t.end());
}

FamilyReport family_F_check(const PFunction& f, const PlateauProfile& prof, const std::optional<DualProfile>& dual) {
    FamilyReport rep;
    rep.f0_zero = f.table[0] == 0;
    if (!rep.f0_zero) rep.reasons.push_back("(1) f(0) != 0");
    rep.dual_bent = dual.has_value() && dual->plus_mask.size() == prof.supp.size();
    if (!rep.dual_bent) {
        rep.reasons.push_back("(2) dual is not bent relative to the Walsh support (or f** != f(-x))");
        rep.reasons.push_back("(3),(4) not checkable without a dual profile");
        return rep;
    }
    const int p = f.p, n = f.n;
    std::vector<std::uint8_t> minus(dual->plus_mask.size());
    for (std::size_t i = 0; i < minus.size(); ++i) minus[i] = !dual->plus_mask[i];
    rep.scale_closed = scale_closed_mask(dual->plus_mask, p, n);
    if (!rep.scale_closed) rep.reasons.push_back("(3) B+(f*)/B-(f*) not closed under F_p^* scaling");
    auto tab = as_i8(f.table);
    rep.t_all = homogeneity_exponents(tab, p, n, &dual->plus_mask, true, 2, true);
    rep.t_prime_all = homogeneity_exponents(tab, p, n, &dual->plus_mask, false, 2, true);
    if (!rep.t_all.empty()) rep.t = rep.t_all.front();
    if (!rep.t_prime_all.empty()) rep.t_prime = rep.t_prime_all.front();
    rep.exponents_found = rep.t && rep.t_prime;
    if (!rep.t) rep.reasons.push_back("(4) no exponent t on B+(f*)");
    if (!rep.t_prime) rep.reasons.push_back("(4) no exponent t' on B-(f*)");
    rep.member = rep.f0_zero && rep.dual_bent && rep.scale_closed && rep.exponents_found;
    return rep;
}

std::vector<int> lform_check(const PFunction& f) {
    return homogeneity_exponents(as_i8(f.table), f.p, f.n, nullptr, true, 1, false);
}

// ------------------------------------------------------------------ value distributions

std::vector<std::uint64_t> value_distribution(const PFunction& f) {
    std::vector<std::uint64_t> out(f.p, 0);
    for (auto v : f.table) ++out[v];
    return out;
}

static int delta0(int x) { return x == 0 ? 1 : 0; }

std::vector<BigRational> closed_form_N(int p, int n, int s, int eps0, int j0) {
    PrimeField F(p);
    std::vector<BigRational> out;
    for (int j = 0; j < p; ++j) {
        int dj = mod(j - j0, p);
        if ((n + s) % 2 == 0)
            out.push_back(rpow(p, n - 1) + BigRational(eps0 * (delta0(dj) * p - 1)) * rpow(p, (n + s) / 2 - 1));
        else
            out.push_back(rpow(p, n - 1) + BigRational(eps0 * F.eta(dj)) * rpow(p, (n + s - 1) / 2));
    }
    return out;
}

DualDistribution dual_value_distribution(const PlateauProfile& prof) {
    DualDistribution d;
    d.N.assign(prof.p, 0);
    d.c.assign(prof.p, 0);
    d.d.assign(prof.p, 0);
    for (std::uint64_t r = 0; r < prof.supp.size(); ++r) {
        if (!prof.supp[r]) continue;
        int j = prof.dual[r];
        ++d.N[j];
        if (prof.eps[r] > 0)
            ++d.c[j];
        else
            ++d.d[j];
    }
    return d;
}

std::vector<BigRational> closed_form_dual_N(int p, int n, int s, int eps0_star, int j0) {
    PrimeField F(p);
    std::vector<BigRational> out;
    for (int j = 0; j < p; ++j) {
        int dj = mod(j - j0, p);
        if ((n + s) % 2 == 0)
            out.push_back(rpow(p, n - s - 1) +
                          BigRational(eps0_star * (delta0(dj) * p - 1)) * rpow(p, (n - s) / 2 - 1));
        else
            out.push_back(rpow(p, n - s - 1) + BigRational(eps0_star * F.eta(dj)) * rpow(p, (n - s - 1) / 2));
    }
    return out;
}

void closed_form_cd(int p, int n, int s, int eps0_star, std::uint64_t k, int j0, std::vector<BigRational>& c,
                    std::vector<BigRational>& d) {
    PrimeField F(p);
    c.clear();
    d.clear();
    BigRational kp{BigInt(k), BigInt(p)};
    for (int j = 0; j < p; ++j) {
        int dj = mod(j - j0, p);
        if ((n + s) % 2 == 0) {
            BigRational t = BigRational(delta0(dj) * p - 1) * rpow(p, (n - s) / 2 - 1);
            c.push_back(kp + BigRational(eps0_star + 1, 2) * t);
            d.push_back(rpow(p, n - s - 1) - kp + BigRational(eps0_star - 1, 2) * t);
        } else {
            BigRational t = BigRational(F.eta(dj)) * rpow(p, (n - s - 1) / 2);
            int e1 = F.eta(-1);
            c.push_back(kp + BigRational(eps0_star + e1, 2) * t);
            d.push_back(rpow(p, n - s - 1) - kp + BigRational(eps0_star - e1, 2) * t);
        }
    }
}

// ------------------------------------------------------------------ partial sums

PartialSums partial_walsh_sums(const PFunction& f, const DualProfile& dual, std::uint64_t alpha) {
    const int p = f.p, n = f.n;
    std::vector<int> a(n), x(n);
    rank_to_digits(alpha, p, n, a.data());
    std::vector<long long> s0(p, 0), s1(p, 0);
    for (std::uint64_t r = 0; r < f.size(); ++r) {
        rank_to_digits(r, p, n, x.data());
        int e = mod(f.table[r] + f.space.inner(a, x), p);
        if (dual.plus_mask[r])
            ++s0[e];
        else
            ++s1[e];
    }
    return PartialSums{CycInt::from_group_ring(p, s0), CycInt::from_group_ring(p, s1)};
}

void partial_walsh_sums_all(const PFunction& f, const DualProfile& dual, WalshSpectrum& S0, WalshSpectrum& S1,
                            int jobs) {
    const int p = f.p, n = f.n;
    const std::uint64_t N = f.size();
    std::vector<std::int16_t> e0(N, -1), e1(N, -1);
    for (std::uint64_t r = 0; r < N; ++r) (dual.plus_mask[r] ? e0 : e1)[r] = f.table[r];
    auto flip = [&](const WalshSpectrum& W) {
        // S(alpha) = transform at -alpha
        std::vector<long long> c(N * (p - 1));
        for (std::uint64_t r = 0; r < N; ++r) {
            const long long* src = W.raw(neg_rank(r, p, n));
            std::copy(src, src + p - 1, c.begin() + static_cast<std::ptrdiff_t>(r * (p - 1)));
        }
        return WalshSpectrum(p, n, std::move(c));
    };
    S0 = flip(masked_transform(p, n, f.space, e0, jobs));
    S1 = flip(masked_transform(p, n, f.space, e1, jobs));
}

PartialSums closed_form_partial_sums(const PlateauProfile& prof, std::uint64_t alpha) {
    const int p = prof.p;
    if (!prof.supp[alpha]) return PartialSums{CycInt::zero(p), CycInt::zero(p)};
    PlateauRecognizer rec(p, prof.n + prof.s);
    CycInt base = rec.value(1, prof.dual[alpha]);
    int e = prof.eps[alpha];
    int sign = prof.even() ? 1 : PrimeField(p).eta(-1);
    return PartialSums{base * BigInt((e + sign) / 2), base * BigInt((e - sign) / 2)};
}

// ------------------------------------------------------------------ orbit exponents

OrbitReport orbit_exponents(const PFunction& f, const PlateauProfile& prof, const std::optional<DualProfile>& dual) {
    OrbitReport rep;
    const int p = prof.p, n = prof.n;
    const std::uint64_t N = prof.supp.size();
    std::vector<std::uint8_t> cls(N);
    for (std::uint64_t r = 0; r < N; ++r) cls[r] = static_cast<std::uint8_t>(prof.supp[r] ? (prof.eps[r] > 0 ? 1 : 2) : 0);
    rep.closure_ok = true;
    PrimeField F(p);
    for (int a = 2; a < p && rep.closure_ok; ++a)
        for (std::uint64_t r = 0; r < N; ++r)
            if (cls[r] != cls[scale_rank(r, a, p, n)]) {
                rep.closure_ok = false;
                break;
            }
    if (!rep.closure_ok) rep.violations.push_back("B+(f), B-(f) or the non-support is not closed under scaling");

    std::vector<std::uint8_t> plus(N);
    std::vector<std::uint8_t> minus(N);
    for (std::uint64_t r = 0; r < N; ++r) {
        plus[r] = cls[r] == 1;
        minus[r] = cls[r] == 2;
    }
    rep.h_all = homogeneity_exponents(prof.dual, p, n, &plus, true, 2, true);
    rep.h_prime_all = homogeneity_exponents(prof.dual, p, n, &minus, true, 2, true);
    if (!rep.h_all.empty()) rep.h = rep.h_all.front();
    if (!rep.h_prime_all.empty()) rep.h_prime = rep.h_prime_all.front();
    if (!rep.h) rep.violations.push_back("no exponent h on B+(f)");
    if (!rep.h_prime) rep.violations.push_back("no exponent h' on B-(f)");

    rep.symmetric = true;
    for (std::uint64_t r = 0; r < N; ++r)
        if (f.table[r] != f.table[neg_rank(r, p, n)]) {
            rep.symmetric = false;
            break;
        }
    if (!rep.symmetric) rep.violations.push_back("f(x) != f(-x)");
    rep.dual_zero_ok = prof.j0 && *prof.j0 == 0;
    if (!rep.dual_zero_ok) rep.violations.push_back("f*(0) != 0");
    if (dual && !prof.balanced) {
        bool same = p % 4 == 1 || (prof.n + prof.s) % 2 == 0;
        rep.type_relation_ok = same ? (prof.eps0 == dual->eps0_star) : (prof.eps0 != dual->eps0_star);
        if (!*rep.type_relation_ok) rep.violations.push_back("type relation between f and f* violated");
    }
    return rep;
}

}  // namespace plateau
