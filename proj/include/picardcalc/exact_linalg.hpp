#ifndef PICARDCALC_EXACT_LINALG_HPP
#define PICARDCALC_EXACT_LINALG_HPP

#include "picardcalc/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace picard {

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense row-major matrix with exact entries.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw ShapeError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix id(n, n);
        for (std::size_t i = 0; i < n; ++i)
            id(i, i) = 1;
        return id;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw ShapeError("matrix product shape mismatch: " + std::to_string(a.cols_)
                             + " columns vs " + std::to_string(b.rows_) + " rows");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

RationalMatrix to_rational(const IntMatrix& m);

Rational det(const RationalMatrix& m);
Integer det(const IntMatrix& m);

/// Throws ShapeError for non-square input, SingularMatrixError when det = 0.
RationalMatrix invert(const RationalMatrix& m);

std::size_t rank(const IntMatrix& m);

struct SmithForm {
    IntMatrix U; // rows x rows, unimodular
    IntMatrix S; // diagonal, nonnegative, d_1 | d_2 | ...
    IntMatrix V; // cols x cols, unimodular
};

/// U * A * V = S, pivoting on the entry of smallest nonzero absolute value.
SmithForm smith_normal_form(const IntMatrix& a);

/// The nonzero diagonal entries of S, in order.
std::vector<Integer> invariant_factors(const SmithForm& snf);

/// Z^free_rank + Z/t_1 + ... + Z/t_k with t_i | t_{i+1} and every t_i > 1.
struct AbelianGroupStructure {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    /// e.g. "Z^2 + Z/96", "Z^3", "0".
    std::string display() const;

    friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

/// Cokernel of Z^cols -> Z^ambient_rank given by the columns of A (one relation per column).
AbelianGroupStructure cokernel(const IntMatrix& a, std::size_t ambient_rank);

} // namespace picard

#endif
