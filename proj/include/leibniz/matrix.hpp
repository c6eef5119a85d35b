#ifndef LEIBNIZ_MATRIX_HPP
#define LEIBNIZ_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

using Vec = std::vector<Rat>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec& operator+=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec operator+(Vec a, const Vec& b) { return a += b; }

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(const Rat& s, Vec v) {
    for (auto& x : v) x *= s;
    return v;
}

/// Dense exact rational matrix, row-major. Dimensions in this toolkit stay
/// small (n <= ~30), so no sparsity and no pivot tolerances anywhere.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    Mat(std::initializer_list<std::initializer_list<Rat>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
            e_.insert(e_.end(), row.begin(), row.end());
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Rat& at(std::size_t i, std::size_t j) {
        check(i, j);
        return e_[i * cols_ + j];
    }
    const Rat& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return e_[i * cols_ + j];
    }

    Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    Vec col(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_row(std::size_t i, const Vec& v) {
        if (v.size() != cols_) throw std::invalid_argument("Mat: row size mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: incompatible product");
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Vec operator*(const Mat& m, const Vec& v) {
        if (m.cols_ != v.size()) throw std::invalid_argument("Mat: incompatible apply");
        Vec r(m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) r[i] += m(i, j) * v[j];
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat: shape mismatch");
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat: shape mismatch");
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }

    friend Mat operator*(const Rat& s, const Mat& m) {
        Mat r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = s * m.e_[i];
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? "\n[" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]";
        }
        return os;
    }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("Mat: index out of range");
    }

    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

inline Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw std::invalid_argument("Mat: vstack column mismatch");
    std::size_t cols = a.rows() ? a.cols() : b.cols();
    Mat r(a.rows() + b.rows(), cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

inline Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("Mat: hstack row mismatch");
    Mat r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

struct RrefResult {
    Mat m;
    std::size_t rank;
    std::vector<std::size_t> pivots;  // pivot column per leading row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. The result
/// is the unique RREF of the input; rank and pivot columns come for free.
inline RrefResult rref(Mat m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && m(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(lead, j));
        const Rat inv = inverse(m(lead, col));
        for (std::size_t j = col; j < cols; ++j) m(lead, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || m(i, col).is_zero()) continue;
            const Rat f = m(i, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), pivots.size(), std::move(pivots)};
}

/// One exact solution of m x = rhs, or nullopt when inconsistent.
/// Free variables are set to zero.
inline std::optional<Vec> solve(const Mat& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    RrefResult r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.m(i, m.cols());
    return x;
}

/// Exact inverse, or nullopt for singular input.
inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Mat(0, 0);
    RrefResult r = rref(hstack(m, Mat::identity(n)));
    if (r.rank < n || r.pivots[n - 1] >= n) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
    return inv;
}

}  // namespace leibniz

#endif
