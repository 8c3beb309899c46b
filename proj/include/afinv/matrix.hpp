#pragma once

#include "afinv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace afinv {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Integer> row(std::size_t i) const;
    std::vector<std::vector<Integer>> to_rows() const;
    IntMatrix transpose() const;
    IntMatrix power(std::size_t n) const;
    /// Principal submatrix on the given index set.
    IntMatrix submatrix(const std::vector<std::size_t>& indices) const;
    bool nonnegative() const;
    bool is_zero() const;

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    std::vector<Integer> operator*(const std::vector<Integer>& x) const;
    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Row vector times matrix.
std::vector<Integer> left_multiply(const std::vector<Integer>& v, const IntMatrix& m);
Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b);

} // namespace afinv
