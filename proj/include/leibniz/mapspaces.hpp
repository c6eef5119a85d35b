#ifndef LEIBNIZ_MAPSPACES_HPP
#define LEIBNIZ_MAPSPACES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Linear maps act on coordinate columns: (d x)_k = sum_j d[k][j] x_j.
/// Solution spaces live in flattened n^2-space, row-major (entry (r, c)
/// sits at index r*n + c); biderivation pairs concatenate the two flattened
/// matrices into 2 n^2 coordinates, d first.
using LinearMap = Mat;

struct BiderivationPair {
    Mat d;
    Mat D;

    friend bool operator==(const BiderivationPair& a, const BiderivationPair& b) {
        return a.d == b.d && a.D == b.D;
    }
};

inline Vec flatten(const Mat& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

inline Mat unflatten(const Vec& v, std::size_t n) {
    if (v.size() != n * n) throw std::invalid_argument("unflatten: length mismatch");
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

inline Vec flatten_pair(const BiderivationPair& p) {
    Vec v = flatten(p.d);
    Vec w = flatten(p.D);
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

inline BiderivationPair unflatten_pair(const Vec& v, std::size_t n) {
    if (v.size() != 2 * n * n) throw std::invalid_argument("unflatten_pair: length mismatch");
    return {unflatten(Vec(v.begin(), v.begin() + n * n), n),
            unflatten(Vec(v.begin() + n * n, v.end()), n)};
}

namespace detail {

// Rows of the derivation system d([e_i,e_j]) - [d(e_i),e_j] - [e_i,d(e_j)],
// one block of n rows (index k) per basis pair, n^2 unknown entries.
inline void derivation_rows(const LeibnizAlgebra& L, Mat& sys, std::size_t row0,
                            std::size_t col0) {
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = row0 + (i * n + j) * n + k;
                for (std::size_t m = 0; m < n; ++m) {
                    sys(row, col0 + k * n + m) += L.tensor.c(i, j, m);   // d([e_i,e_j])_k
                    sys(row, col0 + m * n + i) -= L.tensor.c(m, j, k);   // [d(e_i), e_j]_k
                    sys(row, col0 + m * n + j) -= L.tensor.c(i, m, k);   // [e_i, d(e_j)]_k
                }
            }
}

// Rows of the anti-derivation system D([e_i,e_j]) - [e_i,D(e_j)] + [e_j,D(e_i)].
inline void antiderivation_rows(const LeibnizAlgebra& L, Mat& sys, std::size_t row0,
                                std::size_t col0) {
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = row0 + (i * n + j) * n + k;
                for (std::size_t m = 0; m < n; ++m) {
                    sys(row, col0 + k * n + m) += L.tensor.c(i, j, m);   // D([e_i,e_j])_k
                    sys(row, col0 + m * n + j) -= L.tensor.c(i, m, k);   // [e_i, D(e_j)]_k
                    sys(row, col0 + m * n + i) += L.tensor.c(j, m, k);   // [e_j, D(e_i)]_k
                }
            }
}

// Matrix of x -> [x, e_j] stacked over j; its kernel is the left center,
// and membership of v in Z_l(L) is exactly M v = 0.
inline Mat left_multiplication_stack(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    Mat m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = L.tensor.c(i, j, k);
    return m;
}

}  // namespace detail

/// Der(L) as a canonical subspace of flattened n^2-space: the kernel of the
/// stacked linear conditions d([e_i,e_j]) = [d(e_i),e_j] + [e_i,d(e_j)].
inline Subspace derivation_space(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    Mat sys(n * n * n, n * n);
    detail::derivation_rows(L, sys, 0, 0);
    return kernel_basis(sys);
}

/// ADer(L): kernel of D([x,y]) = [x,D(y)] - [y,D(x)] over basis pairs.
inline Subspace antiderivation_space(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    Mat sys(n * n * n, n * n);
    detail::antiderivation_rows(L, sys, 0, 0);
    return kernel_basis(sys);
}

/// Bider(L) in 2 n^2 coordinates: derivation conditions on d,
/// anti-derivation conditions on D, and the coupling (d + D)(e_i) in Z_l(L)
/// for every i, expressed through the stacked left-multiplication operator.
inline Subspace biderivation_space(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    const std::size_t n2 = n * n;
    Mat sys(2 * n * n2 + n * n2, 2 * n2);
    detail::derivation_rows(L, sys, 0, 0);
    detail::antiderivation_rows(L, sys, n * n2, n2);
    const Mat lmul = detail::left_multiplication_stack(L);
    // rows: for each column i of d + D, require lmul * (d + D) e_i = 0
    const std::size_t row0 = 2 * n * n2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n2; ++r)
            for (std::size_t m = 0; m < n; ++m) {
                sys(row0 + i * n2 + r, m * n + i) += lmul(r, m);
                sys(row0 + i * n2 + r, n2 + m * n + i) += lmul(r, m);
            }
    return kernel_basis(sys);
}

/// Matrix of ad_x = [x, -].
inline Mat inner_derivation(const LeibnizAlgebra& L, const Vec& x) {
    const std::size_t n = L.dim();
    if (x.size() != n) throw std::invalid_argument("inner_derivation: length mismatch");
    Mat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = L.bracket(x, L.basis_vector(j));
        for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
    }
    return m;
}

/// Matrix of Ad_x = [-, x].
inline Mat right_adjoint(const LeibnizAlgebra& L, const Vec& x) {
    const std::size_t n = L.dim();
    if (x.size() != n) throw std::invalid_argument("right_adjoint: length mismatch");
    Mat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = L.bracket(L.basis_vector(j), x);
        for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
    }
    return m;
}

/// Inner biderivation (ad_x, Ad_x).
inline BiderivationPair inner_biderivation(const LeibnizAlgebra& L, const Vec& x) {
    return {inner_derivation(L, x), right_adjoint(L, x)};
}

/// Commutator bracket making Der(L) a Lie algebra.
inline Mat der_bracket(const Mat& d, const Mat& d2) { return d * d2 - d2 * d; }

/// Bider(L) bracket [(d,D),(d',D')] = ([d,d'], d D' - D' d).
inline BiderivationPair bider_bracket(const BiderivationPair& p, const BiderivationPair& q) {
    return {der_bracket(p.d, q.d), p.d * q.D - q.D * p.d};
}

/// True iff P is invertible and preserves every basis bracket.
inline bool is_automorphism(const LeibnizAlgebra& L, const Mat& P) {
    const std::size_t n = L.dim();
    if (P.rows() != n || P.cols() != n)
        throw std::invalid_argument("is_automorphism: size mismatch");
    if (!inverse(P)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (L.bracket(P.col(i), P.col(j)) != P * L.bracket_basis(i, j)) return false;
    return true;
}

}  // namespace leibniz

#endif
