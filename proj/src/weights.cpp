#include "plateau/codes.hpp"

#include "plateau/field_core.hpp"
#include "plateau/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace plateau {

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& [w, a] : A) t += a;
    return t;
}

BigInt WeightDistribution::at(std::size_t w) const {
    auto it = A.find(w);
    return it == A.end() ? BigInt(0) : it->second;
}

std::optional<std::size_t> WeightDistribution::min_distance() const {
    for (const auto& [w, a] : A)
        if (w > 0 && a > 0) return w;
    return std::nullopt;
}

std::optional<std::size_t> WeightDistribution::max_weight() const {
    for (auto it = A.rbegin(); it != A.rend(); ++it)
        if (it->first > 0 && it->second > 0) return it->first;
    return std::nullopt;
}

std::string WeightDistribution::enumerator() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, a] : A) {
        if (a == 0) continue;
        if (!first) os << '+';
        first = false;
        if (w == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a;
        os << 'z';
        if (w != 1) os << '^' << w;
    }
    return first ? "0" : os.str();
}

WeightDistribution weight_distribution(const Matrix& G, int jobs) {
    Echelon e = rref(G);
    const Matrix& B = e.basis;
    const int p = G.p;
    const std::size_t k = B.rows, m = G.cols;
    WeightDistribution wd{p, m, {}};
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= p;
        if (total > kEnumerationGuard)
            throw GuardError("enumeration guard: p^k exceeds 5^8 (k=" + std::to_string(k) + ")");
    }
    const std::size_t nchunks = 64;
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> parts(nchunks);
    parallel_chunks(total, nchunks, jobs, [&](std::size_t c, std::uint64_t b, std::uint64_t end) {
        std::vector<std::uint64_t> hist(m + 1, 0);
        std::vector<std::uint8_t> cw(m, 0);
        std::vector<int> digit(k, 0);
        const std::uint8_t P = static_cast<std::uint8_t>(p);
        auto add_row = [&](std::size_t i) {
            const std::uint8_t* r = B.row(i);
            std::uint8_t* x = cw.data();
            for (std::size_t j = 0; j < m; ++j) {
                std::uint8_t v = static_cast<std::uint8_t>(x[j] + r[j]);
                x[j] = v >= P ? static_cast<std::uint8_t>(v - P) : v;
            }
        };
        std::uint64_t t = b;
        for (std::size_t i = k; i-- > 0;) {
            digit[i] = static_cast<int>(t % p);
            t /= p;
            for (int a = 0; a < digit[i]; ++a) add_row(i);
        }
        for (std::uint64_t msg = b; msg < end; ++msg) {
            std::size_t w = 0;
            for (std::size_t j = 0; j < m; ++j) w += cw[j] != 0;
            ++hist[w];
            if (msg + 1 == end) break;
            for (std::size_t i = k; i-- > 0;) {
                add_row(i);
                if (++digit[i] < p) break;
                digit[i] = 0;
            }
        }
        for (std::size_t w = 0; w <= m; ++w)
            if (hist[w]) parts[c].emplace_back(w, hist[w]);
    });
    std::vector<std::uint64_t> merged(m + 1, 0);
    for (const auto& part : parts)
        for (const auto& [w, cnt] : part) merged[w] += cnt;
    for (std::size_t w = 0; w <= m; ++w)
        if (merged[w]) wd.A[w] = merged[w];
    return wd;
}

namespace {

long long coord_sum(const WalshSpectrum& W, std::uint64_t r) {
    const long long* c = W.raw(r);
    long long s = 0;
    for (int j = 0; j < W.p() - 1; ++j) s += c[j];
    return s;
}

// #{x in S : <alpha,x> = 0} from the masked transform of the indicator of S
std::uint64_t zero_count(const WalshSpectrum& T, std::uint64_t alpha, std::uint64_t size) {
    long long v = static_cast<long long>(size) - coord_sum(T, alpha);
    if (v % T.p() != 0 || v < 0) throw std::logic_error("non-integral zero count from spectrum");
    return static_cast<std::uint64_t>(v / T.p());
}

}  // namespace

WeightDistribution spectral_weights_Cf(const PFunction& f, bool punctured, int jobs) {
    const int p = f.p, n = f.n;
    if (f(0) != 0) throw HypothesisError("f(0) must be 0");
    const std::uint64_t P = f.size(), Pp = P / p;
    WalshSpectrum W = walsh_transform(f, jobs);
    WalshSpectrum T;
    std::uint64_t N0 = 0;
    if (punctured) {
        std::vector<std::int16_t> exps(P, -1);
        for (std::uint64_t r = 0; r < P; ++r)
            if (f(r) == 0) {
                exps[r] = 0;
                ++N0;
            }
        T = masked_transform(p, n, f.space, exps, jobs);
    }
    const std::uint64_t m = punctured ? P - N0 : P - 1;
    std::vector<std::uint64_t> hist(m + 1, 0);
    hist[0] += 1;
    for (std::uint64_t alpha = 0; alpha < P; ++alpha) {
        // a = 0, b = alpha != 0
        if (alpha != 0) {
            std::uint64_t w = punctured ? (P - N0) - (Pp - zero_count(T, alpha, N0)) : P - Pp;
            ++hist[w];
        }
        // a != 0, b = -a alpha: M_{a,b} = #{x : f(x) = <alpha,x>}
        long long s = coord_sum(W, alpha);
        long long M = static_cast<long long>(Pp) - s / p;
        if (s % p != 0) throw std::logic_error("non-integral M from spectrum");
        std::uint64_t w = punctured ? (P - N0) - (M - zero_count(T, alpha, N0)) : P - M;
        hist[w] += p - 1;
    }
    WeightDistribution wd{p, m, {}};
    for (std::uint64_t w = 0; w <= m; ++w)
        if (hist[w]) wd.A[w] = hist[w];
    return wd;
}

WeightDistribution spectral_weights_CD(const InnerProductSpace& space, const DefiningSet& D, int jobs) {
    const int p = D.p, n = D.n;
    const std::uint64_t P = guarded_power(p, n);
    std::vector<std::int16_t> exps(P, -1);
    for (auto r : D.ranks) exps[r] = 0;
    WalshSpectrum T = masked_transform(p, n, space, exps, jobs);
    const std::uint64_t m = D.size();
    std::vector<std::uint64_t> hist(m + 1, 0);
    for (std::uint64_t b = 0; b < P; ++b) ++hist[m - zero_count(T, b, m)];
    // the map b -> codeword is injective only when D spans; fold multiplicity out
    std::uint64_t zero = hist[0];
    WeightDistribution wd{p, m, {}};
    for (std::uint64_t w = 0; w <= m; ++w)
        if (hist[w]) wd.A[w] = hist[w] / zero;
    return wd;
}

WeightDistribution macwilliams(const WeightDistribution& wd, std::size_t k, std::size_t max_j) {
    const std::size_t m = wd.length;
    const long long q = wd.p;
    const std::size_t jmax = std::min(m, max_j);
    std::vector<BigInt> acc(jmax + 1, BigInt(0));
    for (const auto& [w, Aw] : wd.A) {
        if (Aw == 0) continue;
        BigInt prev = 1;
        BigInt cur = BigInt((q - 1) * static_cast<long long>(m)) - BigInt(q * static_cast<long long>(w));
        acc[0] += Aw;
        if (jmax >= 1) acc[1] += Aw * cur;
        for (std::size_t j = 1; j < jmax; ++j) {
            BigInt coef = BigInt(static_cast<long long>(j) + (q - 1) * static_cast<long long>(m - j) -
                                 q * static_cast<long long>(w));
            BigInt next = coef * cur - BigInt((q - 1) * static_cast<long long>(m - j + 1)) * prev;
            next /= static_cast<long long>(j + 1);
            prev = std::move(cur);
            cur = std::move(next);
            acc[j + 1] += Aw * cur;
        }
    }
    BigInt size = big_pow(q, static_cast<long long>(k));
    WeightDistribution out{wd.p, m, {}};
    for (std::size_t j = 0; j <= jmax; ++j) {
        if (acc[j] == 0) continue;
        if (acc[j] < 0 || acc[j] % size != 0)
            throw std::logic_error("MacWilliams produced a non-integral or negative count at weight " +
                                   std::to_string(j));
        out.A[j] = acc[j] / size;
    }
    if (jmax == m && out.total() != big_pow(q, static_cast<long long>(m - k)))
        throw std::logic_error("MacWilliams total differs from p^(m-k)");
    return out;
}

std::vector<BigInt> pless_moments(const WeightDistribution& wd, std::size_t k, std::size_t r) {
    const std::size_t m = wd.length;
    r = std::min(r, m);
    std::vector<BigInt> dual(r + 1);
    dual[0] = 1;
    for (std::size_t nu = 1; nu <= r; ++nu) {
        BigInt lhs = 0;
        for (const auto& [w, a] : wd.A)
            if (w + nu <= m) lhs += binomial(static_cast<long long>(m - w), static_cast<long long>(nu)) * a;
        BigRational v = BigRational(lhs) * rpow(wd.p, static_cast<int>(nu) - static_cast<int>(k));
        for (std::size_t j = 0; j < nu; ++j)
            v -= BigRational(binomial(static_cast<long long>(m - j), static_cast<long long>(nu - j)) * dual[j]);
        if (denominator(v) != 1 || v < 0) throw std::logic_error("power moments gave a non-integral count");
        dual[nu] = numerator(v);
    }
    return dual;
}

DualReport dual_distribution(const CodeReport& rep, std::size_t max_j) {
    DualReport d;
    d.length = rep.length;
    d.dimension = rep.length - rep.dimension;
    d.wd = macwilliams(rep.wd, rep.dimension, max_j);
    d.max_weight_computed = std::min(rep.length, max_j);
    d.pless = pless_moments(rep.wd, rep.dimension, std::min<std::size_t>(5, d.max_weight_computed));
    d.pless_agrees = true;
    for (std::size_t j = 0; j < d.pless.size(); ++j)
        if (d.pless[j] != d.wd.at(j)) d.pless_agrees = false;
    d.min_distance = d.wd.min_distance();
    if (d.min_distance) d.sphere_packing = sphere_packing(rep.p, d.length, d.dimension, *d.min_distance);
    return d;
}

namespace {

class PointSet {
public:
    explicit PointSet(std::uint64_t universe) {
        if (universe <= (std::uint64_t{1} << 30)) bits_.assign((universe + 63) / 64, 0);
    }
    bool insert(std::uint64_t x) {
        if (!bits_.empty()) {
            std::uint64_t& w = bits_[x >> 6];
            std::uint64_t b = std::uint64_t{1} << (x & 63);
            bool fresh = !(w & b);
            w |= b;
            return fresh;
        }
        return set_.insert(x).second;
    }
    bool contains(std::uint64_t x) const {
        if (!bits_.empty()) return bits_[x >> 6] >> (x & 63) & 1;
        return set_.count(x) != 0;
    }

private:
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::uint64_t> set_;
};

}  // namespace

int dual_distance_upto4(const Matrix& G) {
    const int p = G.p;
    const std::size_t k = G.rows, m = G.cols;
    if (m == 0) return 5;
    double bits = static_cast<double>(k) * std::log2(static_cast<double>(p));
    if (bits > 62) throw GuardError("dual distance search: column space too large");
    const std::uint64_t universe = ipow(p, static_cast<unsigned>(k));
    std::vector<int> inv(p, 0);
    for (int a = 1; a < p; ++a) inv[a] = inv_mod(a, p);

    auto normalize = [&](std::vector<int>& v) -> std::uint64_t {
        int lead = 0;
        for (int x : v)
            if (x) {
                lead = x;
                break;
            }
        std::uint64_t r = 0;
        for (int& x : v) {
            x = x * inv[lead] % p;
            r = r * p + x;
        }
        return r;
    };

    std::vector<std::vector<int>> pts;
    PointSet cols(universe);
    std::vector<int> v(k);
    for (std::size_t j = 0; j < m; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < k; ++i) {
            v[i] = G.at(i, j);
            zero = zero && v[i] == 0;
        }
        if (zero) return 1;
        std::uint64_t r = normalize(v);
        if (!cols.insert(r)) return 2;
        pts.push_back(v);
    }
    const std::size_t P = pts.size();
    std::vector<int> w(k);
    for (std::size_t a = 0; a < P; ++a)
        for (std::size_t b = a + 1; b < P; ++b)
            for (int c = 1; c < p; ++c) {
                for (std::size_t i = 0; i < k; ++i) w[i] = (pts[a][i] + c * pts[b][i]) % p;
                if (cols.contains(normalize(w))) return 3;
            }
    PointSet combos(universe);
    for (std::size_t a = 0; a < P; ++a)
        for (std::size_t b = a + 1; b < P; ++b)
            for (int c = 1; c < p; ++c) {
                for (std::size_t i = 0; i < k; ++i) w[i] = (pts[a][i] + c * pts[b][i]) % p;
                if (!combos.insert(normalize(w))) return 4;
            }
    return 5;
}

}  // namespace plateau
