#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plateau {

// Dense row-major matrix over F_p.
struct Matrix {
    int p = 3;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> data;

    Matrix() = default;
    Matrix(int p, std::size_t r, std::size_t c) : p(p), rows(r), cols(c), data(r * c, 0) {}

    std::uint8_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::uint8_t* row(std::size_t i) { return data.data() + i * cols; }
    const std::uint8_t* row(std::size_t i) const { return data.data() + i * cols; }
    void append_row(const std::vector<std::uint8_t>& r);
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return p == o.p && rows == o.rows && cols == o.cols && data == o.data; }
};

Matrix identity_matrix(int p, std::size_t n);
Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
// a * a^T
Matrix gram_matrix(const Matrix& a);
Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix basis;                    // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column per basis row
};

Echelon rref(const Matrix& a);
std::size_t matrix_rank(const Matrix& a);
// membership of v in the row space of an echelon basis
bool in_row_space(const Echelon& e, const std::uint8_t* v);
// every row of b lies in the row space of a
bool row_space_contains(const Matrix& a, const Matrix& b);
// basis of {y : a y^T = 0}
Matrix null_space(const Matrix& a);
int determinant(Matrix a);

std::string matrix_to_csv(const Matrix& a);

}  // namespace plateau
