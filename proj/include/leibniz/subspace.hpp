#ifndef LEIBNIZ_SUBSPACE_HPP
#define LEIBNIZ_SUBSPACE_HPP

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Linear subspace of rational coordinate n-space, stored as the reduced
/// row echelon basis (one vector per row, no zero rows). RREF is a canonical
/// representative, so two Subspace values describe the same set of vectors
/// exactly when they compare equal entry-wise.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(std::size_t ambient_dim) {
        Subspace s(ambient_dim);
        s.basis_ = Mat::identity(ambient_dim);
        return s;
    }

    /// Canonicalizes an arbitrary spanning set.
    static Subspace span_of(std::size_t ambient_dim, const std::vector<Vec>& spanning) {
        Mat m(spanning.size(), ambient_dim);
        for (std::size_t i = 0; i < spanning.size(); ++i) {
            if (spanning[i].size() != ambient_dim)
                throw std::invalid_argument("Subspace: spanning vector has wrong length");
            m.set_row(i, spanning[i]);
        }
        return span_of_rows(m);
    }

    /// Canonicalizes the row space of a matrix.
    static Subspace span_of_rows(const Mat& m) {
        RrefResult r = rref(m);
        Subspace s(m.cols());
        Mat b(r.rank, m.cols());
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = r.m(i, j);
        s.basis_ = std::move(b);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// Reduces v against the RREF basis; v lies in the span iff the
    /// remainder vanishes.
    bool contains(const Vec& v) const {
        if (v.size() != ambient_)
            throw std::invalid_argument("Subspace: vector/ambient dimension mismatch");
        Vec rem = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = pivot_col(i);
            if (!rem[p].is_zero()) {
                const Rat f = rem[p];
                for (std::size_t j = 0; j < ambient_; ++j) rem[j] -= f * basis_(i, j);
            }
        }
        return leibniz::is_zero(rem);
    }

    bool contains_subspace(const Subspace& other) const {
        if (other.ambient_ != ambient_)
            throw std::invalid_argument("Subspace: ambient dimension mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_)
            throw std::invalid_argument("Subspace: ambient dimension mismatch");
        return span_of_rows(vstack(a.basis_, b.basis_));
    }

    /// Intersection via the kernel of [a^T | -b^T]: a combination of
    /// a-basis rows equals one of b-basis rows exactly on such kernel
    /// vectors, and the a-part of each kernel vector spans the meet.
    friend Subspace intersect(const Subspace& a, const Subspace& b);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Subspace& s) {
        return os << "span dim " << s.dim() << " in Q^" << s.ambient_ << "\n" << s.basis_;
    }

private:
    std::size_t pivot_col(std::size_t row) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_(row, j).is_zero()) return j;
        throw std::logic_error("Subspace: zero row in basis");
    }

    std::size_t ambient_;
    Mat basis_;
};

/// Canonical basis of the null space {v : m v = 0}.
inline Subspace kernel_basis(const Mat& m) {
    RrefResult r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v(cols);
        v[j] = Rat(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(i, j);
        gens.push_back(std::move(v));
    }
    return Subspace::span_of(cols, gens);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
    const std::size_t da = a.dim(), db = b.dim();
    Mat sys(a.ambient_, da + db);
    for (std::size_t i = 0; i < a.ambient_; ++i) {
        for (std::size_t j = 0; j < da; ++j) sys(i, j) = a.basis_(j, i);
        for (std::size_t j = 0; j < db; ++j) sys(i, da + j) = -b.basis_(j, i);
    }
    Subspace ker = kernel_basis(sys);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        Vec coeffs = ker.basis_vector(i);
        Vec v(a.ambient_);
        for (std::size_t j = 0; j < da; ++j)
            if (!coeffs[j].is_zero())
                for (std::size_t k = 0; k < a.ambient_; ++k) v[k] += coeffs[j] * a.basis_(j, k);
        gens.push_back(std::move(v));
    }
    return Subspace::span_of(a.ambient_, gens);
}

}  // namespace leibniz

#endif
