#pragma once

#include "ncdef/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ncdef {

// Small dense matrix over an exact ring; used for automorphisms, twists and
// linear vector fields. Not meant for the big elimination jobs.
template <class R>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, R(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: dimension mismatch");
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }
    friend Mat operator*(const R& c, Mat m) {
        for (auto& v : m.a_) v *= c;
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    R trace() const {
        R t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    // Gauss-Jordan inverse; throws std::domain_error on a singular input.
    Mat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat::inverse: not square");
        std::size_t n = rows_;
        Mat aug(*this);
        Mat inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && aug(piv, col).is_zero()) ++piv;
            if (piv == n) throw std::domain_error("Mat::inverse: singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(aug(piv, j), aug(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            R d = aug(col, col).inv();
            for (std::size_t j = 0; j < n; ++j) {
                aug(col, j) *= d;
                inv(col, j) *= d;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || aug(i, col).is_zero()) continue;
                R f = aug(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    aug(i, j) -= f * aug(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

private:
    std::size_t rows_, cols_;
    std::vector<R> a_;
};

using QMat = Mat<Rational>;

}  // namespace ncdef
