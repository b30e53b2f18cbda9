#include "plateau/field_core.hpp"

#include <numeric>
#include <sstream>

namespace plateau {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int mod(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int pow_mod(long long a, long long e, int p) {
    long long b = mod(a, p), r = 1 % p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

int inv_mod(int a, int p) {
    a = mod(a, p);
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    return pow_mod(a, p - 2, p);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint64_t guarded_power(int p, int n) {
    if (n < 0) throw GuardError("negative dimension");
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        r *= static_cast<std::uint64_t>(p);
        if (r > kMaxTableSize)
            throw GuardError("table size " + std::to_string(p) + "^" + std::to_string(n) +
                             " exceeds the 2^24 limit");
    }
    return r;
}

PrimeField::PrimeField(int p) : p_(p) {
    if (!is_prime(p) || p == 2) throw GuardError("modulus must be an odd prime, got " + std::to_string(p));
    if (p > kMaxPrime) throw GuardError("prime " + std::to_string(p) + " exceeds the limit 31");
    inv_.assign(p, 0);
    eta_.assign(p, -1);
    eta_[0] = 0;
    for (int a = 1; a < p; ++a) {
        inv_[a] = pow_mod(a, p - 2, p);
        eta_[(a * a) % p] = 1;
    }
    for (int a = 1; a < p; ++a) (eta_[a] == 1 ? sq_ : nsq_).push_back(a);
    for (int a = 2; a < p && g_ == 0; ++a) {
        bool prim = true;
        for (int q = 2; q < p; ++q)
            if ((p - 1) % q == 0 && is_prime(q) && pow_mod(a, (p - 1) / q, p) == 1) prim = false;
        if (prim) g_ = a;
    }
    if (g_ == 0) g_ = p == 3 ? 2 : 1;
}

int PrimeField::inv(int a) const {
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    return inv_[a];
}

int quadratic_character(int a, int p) { return PrimeField(p).eta(a); }

std::uint64_t FpVector::rank() const { return digits_to_rank(digits.data(), p, static_cast<int>(digits.size())); }

FpVector FpVector::from_rank(int p, int n, std::uint64_t r) {
    FpVector v{p, std::vector<int>(n)};
    rank_to_digits(r, p, n, v.digits.data());
    return v;
}

FpVector FpVector::unit(int p, int n, int i) {
    FpVector v{p, std::vector<int>(n, 0)};
    v.digits.at(i) = 1;
    return v;
}

bool FpVector::is_zero() const {
    for (int d : digits)
        if (d) return false;
    return true;
}

void rank_to_digits(std::uint64_t r, int p, int n, int* out) {
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<int>(r % p);
        r /= p;
    }
}

std::uint64_t digits_to_rank(const int* d, int p, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) r = r * p + static_cast<std::uint64_t>(d[i]);
    return r;
}

std::uint64_t scale_rank(std::uint64_t r, int c, int p, int n) {
    std::uint64_t out = 0, pw = 1;
    for (int i = 0; i < n; ++i) {
        out += pw * static_cast<std::uint64_t>((static_cast<int>(r % p) * c) % p);
        r /= p;
        pw *= p;
    }
    return out;
}

std::uint64_t neg_rank(std::uint64_t r, int p, int n) { return scale_rank(r, p - 1, p, n); }

// ---------------------------------------------------------------- ExtField

static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    // m monic
    int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = a[i];
        if (!c) continue;
        for (int j = 0; j <= dm; ++j) a[i - dm + j] = mod(a[i - dm + j] - static_cast<long long>(c) * m[j], p);
    }
    a.resize(dm);
    return a;
}

bool ExtField::is_irreducible(int p, const std::vector<int>& monic) {
    int m = static_cast<int>(monic.size()) - 1;
    if (m < 1 || monic.back() != 1) return false;
    if (m == 1) return true;
    // trial division by every monic polynomial of degree 1..m/2
    for (int d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = ipow(p, d);
        for (std::uint64_t c = 0; c < count; ++c) {
            std::vector<int> q(d + 1, 0);
            std::uint64_t t = c;
            for (int i = 0; i < d; ++i) {
                q[i] = static_cast<int>(t % p);
                t /= p;
            }
            q[d] = 1;
            auto r = poly_mod(monic, q, p);
            bool zero = true;
            for (int v : r)
                if (v) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<int> ExtField::smallest_irreducible(int p, int m) {
    std::uint64_t count = ipow(p, m);
    for (std::uint64_t c = 0; c < count; ++c) {
        std::vector<int> poly(m + 1, 0);
        std::uint64_t t = c;
        for (int i = 0; i < m; ++i) {
            poly[i] = static_cast<int>(t % p);
            t /= p;
        }
        poly[m] = 1;
        if (is_irreducible(p, poly)) return poly;
    }
    throw std::logic_error("no irreducible polynomial found");
}

ExtField::ExtField(int p, int m) : ExtField(p, smallest_irreducible(p, m)) {}

ExtField::ExtField(int p, std::vector<int> modulus) : p_(p), m_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
    PrimeField check(p);
    if (m_ < 1 || m_ > 4) throw GuardError("extension degree must be in [1,4]");
    for (int& c : modulus_) c = mod(c, p);
    if (!is_irreducible(p, modulus_)) throw std::invalid_argument("reduction polynomial " + modulus_string() + " is not irreducible");
}

std::string ExtField::modulus_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = m_; i >= 0; --i) {
        int c = modulus_[i];
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

std::uint64_t ExtField::order() const { return ipow(p_, m_); }

ExtField::Elem ExtField::one() const { return constant(1); }

ExtField::Elem ExtField::constant(int c) const {
    Elem e(m_, 0);
    e[0] = mod(c, p_);
    return e;
}

ExtField::Elem ExtField::generator() const {
    if (m_ == 1) return constant(mod(-modulus_[0], p_));
    Elem e(m_, 0);
    e[1] = 1;
    return e;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem c(m_);
    for (int i = 0; i < m_; ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
    Elem c(m_);
    for (int i = 0; i < m_; ++i) c[i] = mod(a[i] - b[i], p_);
    return c;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    std::vector<int> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    if (m_ == 1) return prod;
    return poly_mod(prod, modulus_, p_);
}

ExtField::Elem ExtField::pow(const Elem& a, std::uint64_t e) const {
    Elem r = one(), b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int ExtField::trace(const Elem& a) const {
    Elem acc = a, cur = a;
    for (int i = 1; i < m_; ++i) {
        cur = frobenius(cur);
        acc = add(acc, cur);
    }
    for (int i = 1; i < m_; ++i)
        if (acc[i] != 0) throw std::logic_error("trace left the prime field");
    return acc[0];
}

std::uint64_t ExtField::index(const Elem& a) const { return digits_to_rank(a.data(), p_, m_); }

ExtField::Elem ExtField::from_index(std::uint64_t r) const {
    Elem e(m_);
    rank_to_digits(r, p_, m_, e.data());
    return e;
}

int trace(const ExtField& F, const ExtField::Elem& x) { return F.trace(x); }

// ---------------------------------------------------------------- InnerProductSpace

InnerProductSpace InnerProductSpace::dot(int p, int n) {
    return InnerProductSpace(p, {SpaceFactor{SpaceFactor::Kind::Dot, n, nullptr}});
}

InnerProductSpace::InnerProductSpace(int p, std::vector<SpaceFactor> factors) : p_(p), factors_(std::move(factors)) {
    PrimeField check(p);
    n_ = 0;
    for (auto& f : factors_) {
        if (f.kind == SpaceFactor::Kind::Trace) {
            if (!f.field || f.field->p() != p) throw std::invalid_argument("trace factor needs a field over F_p");
            f.dim = f.field->degree();
        }
        if (f.dim < 0) throw std::invalid_argument("negative factor dimension");
        n_ += f.dim;
    }
    gram_.assign(static_cast<std::size_t>(n_) * n_, 0);
    int off = 0;
    standard_ = true;
    for (const auto& f : factors_) {
        if (f.kind == SpaceFactor::Kind::Dot) {
            for (int i = 0; i < f.dim; ++i) gram_[static_cast<std::size_t>(off + i) * n_ + off + i] = 1;
        } else {
            const ExtField& F = *f.field;
            for (int i = 0; i < f.dim; ++i)
                for (int j = 0; j < f.dim; ++j) {
                    ExtField::Elem a = F.zero(), b = F.zero();
                    a[i] = 1;
                    b[j] = 1;
                    int v = F.trace(F.mul(a, b));
                    gram_[static_cast<std::size_t>(off + i) * n_ + off + j] = v;
                    if (v != (i == j ? 1 : 0)) standard_ = false;
                }
        }
        off += f.dim;
    }
}

int InnerProductSpace::inner(const std::vector<int>& a, const std::vector<int>& b) const {
    if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
        throw std::invalid_argument("dimension mismatch in inner product");
    long long s = 0;
    if (standard_) {
        for (int i = 0; i < n_; ++i) s += static_cast<long long>(a[i]) * b[i];
    } else {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s += static_cast<long long>(a[i]) * gram(i, j) * b[j];
    }
    return mod(s, p_);
}

int InnerProductSpace::inner(const FpVector& a, const FpVector& b) const {
    if (a.p != p_ || b.p != p_) throw std::invalid_argument("modulus mismatch in inner product");
    return inner(a.digits, b.digits);
}

std::vector<int> InnerProductSpace::apply(const std::vector<int>& a) const {
    std::vector<int> out(n_, 0);
    for (int i = 0; i < n_; ++i) {
        long long s = 0;
        for (int j = 0; j < n_; ++j) s += static_cast<long long>(gram(i, j)) * a[j];
        out[i] = mod(s, p_);
    }
    return out;
}

std::uint64_t InnerProductSpace::apply_rank(std::uint64_t a) const {
    if (standard_) return a;
    std::vector<int> d(n_);
    rank_to_digits(a, p_, n_, d.data());
    auto q = apply(d);
    return digits_to_rank(q.data(), p_, n_);
}

bool InnerProductSpace::nondegenerate_exhaustive() const {
    std::uint64_t size = guarded_power(p_, n_);
    std::vector<int> a(n_);
    for (std::uint64_t r = 1; r < size; ++r) {
        rank_to_digits(r, p_, n_, a.data());
        auto q = apply(a);
        bool zero = true;
        for (int v : q)
            if (v) zero = false;
        if (zero) return false;
    }
    return true;
}

std::string InnerProductSpace::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " x ";
        const auto& f = factors_[i];
        if (f.kind == SpaceFactor::Kind::Dot)
            os << "F_" << p_ << "^" << f.dim << "(dot)";
        else
            os << "GF(" << p_ << "^" << f.dim << ")[" << f.field->modulus_string() << "](trace)";
    }
    return os.str();
}

int inner_product(const FpVector& a, const FpVector& b, const InnerProductSpace& space) { return space.inner(a, b); }

}  // namespace plateau
