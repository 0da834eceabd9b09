/**
 * Dense matrices over the integers with exact arbitrary-precision entries.
 *
 * Everything downstream (Smith forms, abelian-group invariants, homology)
 * sits on this type; no floating point or fixed-width arithmetic anywhere.
 */

#ifndef CGT_INT_MATRIX_HPP
#define CGT_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgt {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> data) {
        rows_ = data.size();
        cols_ = rows_ == 0 ? 0 : data.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : data) {
            if (row.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (long long v : row) entries_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& e : entries_)
            if (e != 0) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = entries_[i] - o.entries_[i];
        return r;
    }

    IntMatrix transpose() const {
        IntMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<Int> row(std::size_t i) const {
        std::vector<Int> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    void set_row(std::size_t i, const std::vector<Int>& v) {
        if (v.size() != cols_)
            throw std::invalid_argument("IntMatrix: row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    /// Stack the rows of `o` below this matrix (column counts must agree).
    IntMatrix stack(const IntMatrix& o) const {
        if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
            throw std::invalid_argument("IntMatrix: column mismatch in stack");
        std::size_t c = rows_ == 0 ? o.cols_ : cols_;
        IntMatrix r(rows_ + o.rows_, c);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) r(rows_ + i, j) = o(i, j);
        return r;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const {
        if (rows_ != cols_)
            throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
        std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix a(*this);
        Int prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0) ++p;
                if (p == n) return 0;
                for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += (*this)(i, j).str();
            }
            s += "]";
        }
        s += "]";
        return s;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

inline std::vector<Int> operator*(const std::vector<Int>& v, const IntMatrix& m) {
    if (v.size() != m.rows())
        throw std::invalid_argument("vector-matrix dimension mismatch");
    std::vector<Int> r(m.cols(), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

}  // namespace cgt

#endif
