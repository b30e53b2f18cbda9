#include "plateau/linalg.hpp"

#include "plateau/field_core.hpp"

#include <sstream>
#include <stdexcept>

namespace plateau {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
    if (a.p != b.p) throw std::invalid_argument("matrix fields differ");
}

// r_dst += c * r_src over F_p
void axpy(std::uint8_t* dst, const std::uint8_t* src, int c, std::size_t len, int p) {
    if (c == 0) return;
    for (std::size_t j = 0; j < len; ++j) dst[j] = static_cast<std::uint8_t>((dst[j] + c * src[j]) % p);
}

}  // namespace

void Matrix::append_row(const std::vector<std::uint8_t>& r) {
    if (rows == 0 && cols == 0) cols = r.size();
    if (r.size() != cols) throw std::invalid_argument("row length mismatch");
    data.insert(data.end(), r.begin(), r.end());
    ++rows;
}

bool Matrix::is_zero() const {
    for (auto v : data)
        if (v) return false;
    return true;
}

Matrix identity_matrix(int p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.p, a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not match");
    Matrix c(a.p, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t l = 0; l < a.cols; ++l) axpy(c.row(i), b.row(l), a.at(i, l), b.cols, a.p);
    return c;
}

Matrix gram_matrix(const Matrix& a) {
    Matrix g(a.p, a.rows, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = i; j < a.rows; ++j) {
            std::uint64_t s = 0;
            const std::uint8_t* x = a.row(i);
            const std::uint8_t* y = a.row(j);
            for (std::size_t l = 0; l < a.cols; ++l) s += static_cast<std::uint64_t>(x[l]) * y[l];
            g.at(i, j) = g.at(j, i) = static_cast<std::uint8_t>(s % a.p);
        }
    return g;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows != b.rows) throw std::invalid_argument("row counts differ");
    Matrix c(a.p, a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        std::copy(a.row(i), a.row(i) + a.cols, c.row(i));
        std::copy(b.row(i), b.row(i) + b.cols, c.row(i) + a.cols);
    }
    return c;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows == 0) return b;
    if (b.rows == 0) return a;
    if (a.cols != b.cols) throw std::invalid_argument("column counts differ");
    Matrix c = a;
    c.data.insert(c.data.end(), b.data.begin(), b.data.end());
    c.rows += b.rows;
    return c;
}

Echelon rref(const Matrix& a) {
    Matrix m = a;
    const int p = m.p;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        int inv = inv_mod(m.at(r, c), p);
        for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = static_cast<std::uint8_t>(m.at(r, j) * inv % p);
        for (std::size_t i = 0; i < m.rows; ++i)
            if (i != r && m.at(i, c)) axpy(m.row(i), m.row(r), p - m.at(i, c), m.cols, p);
        piv.push_back(c);
        ++r;
    }
    m.rows = r;
    m.data.resize(r * m.cols);
    return {std::move(m), std::move(piv)};
}

std::size_t matrix_rank(const Matrix& a) { return rref(a).pivots.size(); }

bool in_row_space(const Echelon& e, const std::uint8_t* v) {
    const Matrix& b = e.basis;
    std::vector<std::uint8_t> w(v, v + b.cols);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        int c = w[e.pivots[i]];
        if (c) axpy(w.data(), b.row(i), b.p - c, b.cols, b.p);
    }
    for (auto x : w)
        if (x) return false;
    return true;
}

bool row_space_contains(const Matrix& a, const Matrix& b) {
    if (b.rows == 0) return true;
    if (a.cols != b.cols) return false;
    Echelon e = rref(a);
    for (std::size_t i = 0; i < b.rows; ++i)
        if (!in_row_space(e, b.row(i))) return false;
    return true;
}

Matrix null_space(const Matrix& a) {
    Echelon e = rref(a);
    const int p = a.p;
    const std::size_t n = a.cols;
    std::vector<char> is_piv(n, 0);
    for (auto c : e.pivots) is_piv[c] = 1;
    Matrix ns(p, 0, n);
    ns.cols = n;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<std::uint8_t> v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = static_cast<std::uint8_t>((p - e.basis.at(i, f)) % p);
        ns.append_row(v);
    }
    return ns;
}

int determinant(Matrix a) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant of non-square matrix");
    const int p = a.p;
    const std::size_t n = a.rows;
    long long det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a.at(sel, c) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(c, j));
            det = (p - det) % p;
        }
        det = det * a.at(c, c) % p;
        int inv = inv_mod(a.at(c, c), p);
        for (std::size_t i = c + 1; i < n; ++i) {
            int f = a.at(i, c) * inv % p;
            if (f) axpy(a.row(i), a.row(c), p - f, n, p);
        }
    }
    return static_cast<int>(det);
}

std::string matrix_to_csv(const Matrix& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            if (j) os << ',';
            os << static_cast<int>(a.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace plateau
