#include "plateau/cyclotomic.hpp"

#include "plateau/field_core.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace plateau {

BigInt big_pow(long long base, long long exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent in big_pow");
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string to_string(const BigInt& v) { return v.str(); }

CycInt::CycInt(int p) : p_(p), c_(static_cast<std::size_t>(p - 1)) {}

CycInt::CycInt(int p, std::vector<BigInt> coords) : p_(p), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != p - 1) throw std::invalid_argument("CycInt needs p-1 coordinates");
}

CycInt CycInt::integer(int p, const BigInt& c) {
    CycInt r(p);
    for (auto& x : r.c_) x = -c;
    return r;
}

CycInt CycInt::xi_pow(int p, long long j) {
    int e = mod(j, p);
    if (e == 0) return integer(p, 1);
    CycInt r(p);
    r.c_[e - 1] = 1;
    return r;
}

CycInt CycInt::from_group_ring(int p, const std::vector<long long>& c) {
    CycInt r(p);
    for (int j = 1; j < p; ++j) r.c_[j - 1] = c[j] - c[0];
    return r;
}

void CycInt::check(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("cyclotomic modulus mismatch");
}

bool CycInt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

std::optional<BigInt> CycInt::as_integer() const {
    for (const auto& x : c_)
        if (x != c_[0]) return std::nullopt;
    return BigInt(-c_[0]);
}

BigInt CycInt::coordinate_sum() const {
    BigInt s = 0;
    for (const auto& x : c_) s += x;
    return s;
}

CycInt CycInt::operator+(const CycInt& o) const {
    CycInt r = *this;
    r += o;
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
    check(o);
    CycInt r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check(o);
    std::vector<BigInt> acc(static_cast<std::size_t>(p_));
    for (int i = 1; i < p_; ++i) {
        if (c_[i - 1] == 0) continue;
        for (int j = 1; j < p_; ++j) {
            if (o.c_[j - 1] == 0) continue;
            acc[(i + j) % p_] += c_[i - 1] * o.c_[j - 1];
        }
    }
    CycInt r(p_);
    for (int j = 1; j < p_; ++j) r.c_[j - 1] = acc[j] - acc[0];
    return r;
}

CycInt CycInt::operator*(const BigInt& k) const {
    CycInt r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

CycInt CycInt::galois(int t) const {
    t = mod(t, p_);
    if (t == 0) throw std::invalid_argument("Galois automorphism index must be nonzero");
    CycInt r(p_);
    for (int j = 1; j < p_; ++j) r.c_[(static_cast<long long>(t) * j) % p_ - 1] = c_[j - 1];
    return r;
}

BigInt CycInt::norm_squared() const {
    CycInt n = (*this) * conj();
    auto v = n.as_integer();
    if (!v) throw std::logic_error("W*conj(W) is not rational");
    return *v;
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 1; j < p_; ++j) {
        const BigInt& c = c_[j - 1];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "");
        first = false;
        os << c.str() << "*xi^" << j;
    }
    if (first) os << "0";
    return os.str();
}

CycInt gauss_sum(int p) {
    PrimeField F(p);
    CycInt g(p);
    std::vector<BigInt> c(p - 1);
    for (int y = 1; y < p; ++y) c[y - 1] = F.eta(y);
    return CycInt(p, c);
}

PlateauRecognizer::PlateauRecognizer(int p, int N) : p_(p), N_(N) {
    if (N < 0) throw std::invalid_argument("negative plateau exponent");
    CycInt base;
    if (N % 2 == 0)
        base = CycInt::integer(p, big_pow(p, N / 2));
    else
        base = gauss_sum(p) * BigInt(big_pow(p, (N - 1) / 2));
    targets_.reserve(2 * p);
    for (int e = 0; e < 2; ++e)
        for (int j = 0; j < p; ++j) {
            CycInt t = base * CycInt::xi_pow(p, j);
            if (e == 1) t = -t;
            targets_.push_back(t);
        }
    small_ok_ = true;
    for (const auto& t : targets_)
        for (const auto& c : t.coords())
            if (abs(c) > BigInt(std::numeric_limits<long long>::max() / 4)) small_ok_ = false;
    if (small_ok_) {
        for (const auto& t : targets_) {
            std::vector<long long> v;
            for (const auto& c : t.coords()) v.push_back(c.convert_to<long long>());
            small_.push_back(std::move(v));
        }
    }
}

CycInt PlateauRecognizer::value(int eps, int j) const { return targets_.at((eps > 0 ? 0 : 1) * p_ + mod(j, p_)); }

std::optional<PlateauValue> PlateauRecognizer::match(const CycInt& W) const {
    if (W.p() != p_) throw std::invalid_argument("cyclotomic modulus mismatch");
    for (int e = 0; e < 2; ++e)
        for (int j = 0; j < p_; ++j)
            if (targets_[e * p_ + j] == W) return PlateauValue{e == 0 ? 1 : -1, j};
    return std::nullopt;
}

std::optional<PlateauValue> PlateauRecognizer::match(const long long* coords) const {
    if (!small_ok_) {
        std::vector<BigInt> c(coords, coords + p_ - 1);
        return match(CycInt(p_, c));
    }
    for (int e = 0; e < 2; ++e)
        for (int j = 0; j < p_; ++j) {
            const auto& t = small_[e * p_ + j];
            bool eq = true;
            for (int i = 0; i < p_ - 1 && eq; ++i) eq = t[i] == coords[i];
            if (eq) return PlateauValue{e == 0 ? 1 : -1, j};
        }
    return std::nullopt;
}

std::optional<PlateauValue> recognize_plateau_value(const CycInt& W, int p, int n, int s) {
    return PlateauRecognizer(p, n + s).match(W);
}

}  // namespace plateau
