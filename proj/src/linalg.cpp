#include "orbitcert/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace orbitcert::linalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty())
        return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j) == 0)
                    continue;
                t = aik * b(k, j);
                p(i, j) += t;
            }
        }
    return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i)
        s.data_[i] += b.data_[i];
    return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i)
        s.data_[i] -= b.data_[i];
    return s;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    Rational factor, t;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (m(row, c) == 0)
                    continue;
                t = factor * m(row, c);
                m(r, c) -= t;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) {
    return row_reduce(m).size();
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(i, a.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
    Matrix red = m;
    auto pivots = row_reduce(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -red(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace orbitcert::linalg
