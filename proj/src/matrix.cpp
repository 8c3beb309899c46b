#include "afinv/matrix.hpp"

#include "afinv/errors.hpp"

#include <algorithm>

namespace afinv {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw InvalidInput("ragged matrix literal");
        }
        for (auto x : r) {
            data_.emplace_back(x);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw InvalidInput("ragged matrix rows");
        }
        for (std::size_t j = 0; j < m.cols_; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
    std::vector<std::vector<Integer>> out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out.push_back(row(i));
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

IntMatrix IntMatrix::power(std::size_t n) const {
    if (!square()) {
        throw InvalidInput("power of a non-square matrix");
    }
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (n > 0) {
        if (n & 1U) {
            result = result * base;
        }
        n >>= 1U;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& indices) const {
    IntMatrix m(indices.size(), indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = 0; b < indices.size(); ++b) {
            m(a, b) = (*this)(indices[a], indices[b]);
        }
    }
    return m;
}

bool IntMatrix::nonnegative() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x >= 0; });
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) {
        throw InvalidInput("matrix shape mismatch in product");
    }
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out(i, j) += a * other(k, j);
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw InvalidInput("matrix shape mismatch in sum");
    }
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] += other.data_[i];
    }
    return out;
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer>& x) const {
    if (x.size() != cols_) {
        throw InvalidInput("vector length does not match matrix columns");
    }
    std::vector<Integer> out(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[i] += (*this)(i, j) * x[j];
        }
    }
    return out;
}

std::size_t rank(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            a[i][j] = Rational(m(i, j));
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && a[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) {
                continue;
            }
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) {
                a[i][j] -= f * a[r][j];
            }
        }
        ++r;
    }
    return r;
}

std::vector<Integer> left_multiply(const std::vector<Integer>& v, const IntMatrix& m) {
    if (v.size() != m.rows()) {
        throw InvalidInput("vector length does not match matrix rows");
    }
    std::vector<Integer> out(m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[j] += v[i] * m(i, j);
        }
    }
    return out;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.size() != b.size()) {
        throw InvalidInput("dot product length mismatch");
    }
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace afinv
