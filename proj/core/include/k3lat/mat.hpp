#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "k3lat/numeric.hpp"

namespace k3lat {

// Dense row-major matrix over an exact scalar type (Int or Rat).
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw Error("ragged matrix initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_,
                              data_.begin() + (i + 1) * cols_);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using MatZ = Mat<Int>;
using MatQ = Mat<Rat>;

MatQ to_rational(const MatZ& m);
// Fails with Error unless every entry is integral.
MatZ to_integral(const MatQ& m);

// x^T G y for coordinate vectors x, y.
template <typename T>
T inner(const Mat<T>& gram, const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != gram.rows() || y.size() != gram.cols())
        throw Error("inner product dimension mismatch");
    T acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            acc += x[i] * gram(i, j) * y[j];
    }
    return acc;
}

Rat inner_q(const MatZ& gram, const std::vector<Rat>& x, const std::vector<Rat>& y);

std::vector<Rat> mat_vec(const MatQ& m, const std::vector<Rat>& v);

}  // namespace k3lat
