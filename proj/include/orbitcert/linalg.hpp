#pragma once

#include "orbitcert/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace orbitcert::linalg {

// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

// Some x with a*x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

// Basis of {x : m*x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

} // namespace orbitcert::linalg
