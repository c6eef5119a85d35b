#ifndef LEIBNIZ_FAMILIES_HPP
#define LEIBNIZ_FAMILIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Monic rational polynomial, coefficients in ascending degree order.
/// Irreducibility is deliberately not checked: it parameterizes the
/// classification statement, not the construction.
struct PolynomialQ {
    std::vector<Rat> coeffs;

    explicit PolynomialQ(std::vector<Rat> c) : coeffs(std::move(c)) {
        if (coeffs.size() < 2) throw std::invalid_argument("PolynomialQ: degree must be >= 1");
        if (coeffs.back() != Rat(1)) throw std::invalid_argument("PolynomialQ: must be monic");
    }

    std::size_t degree() const { return coeffs.size() - 1; }

    friend PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b) {
        std::vector<Rat> c(a.degree() + b.degree() + 1);
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
        return PolynomialQ(std::move(c));
    }
};

/// Companion matrix: ones on the subdiagonal, negated polynomial
/// coefficients in the last column.
struct CompanionMatrix {
    Mat m;

    std::size_t size() const { return m.rows(); }
    const Mat& matrix() const { return m; }
};

inline CompanionMatrix companion_of_power(const PolynomialQ& f, std::size_t k) {
    if (k < 1) throw std::invalid_argument("companion_of_power: k must be >= 1");
    PolynomialQ p = f;
    for (std::size_t i = 1; i < k; ++i) p = p * f;
    const std::size_t n = p.degree();
    Mat m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = Rat(1);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.coeffs[i];
    return {std::move(m)};
}

namespace detail {

/// Tensor entry setter that trips on colliding (left, right) pairs. The
/// Dieudonne bracket families have pairwise distinct left indices, so a
/// collision can only mean a bug in the fill code.
struct BracketFiller {
    StructureTensor& t;
    std::vector<bool> seen;

    explicit BracketFiller(StructureTensor& tensor)
        : t(tensor), seen(tensor.dim() * tensor.dim(), false) {}

    void set(std::size_t i, std::size_t j, std::size_t k, const Rat& v) {
        if (seen[i * t.dim() + j])
            throw std::logic_error("family constructor: duplicate bracket pair");
        seen[i * t.dim() + j] = true;
        t.c(i, j, k) = v;
    }
};

inline std::vector<std::string> pair_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("f" + std::to_string(i));
    labels.push_back("z");
    return labels;
}

}  // namespace detail

/// Heisenberg algebra on basis {e_1..e_n, f_1..f_n, z} with
/// [e_i, f_j] = (delta_ij + a_ij) z and [f_j, e_i] = (-delta_ij + a_ij) z.
/// The classification takes A to be the companion matrix of f(x)^k; the
/// constructor accepts any square A (A = 0 of any size gives the Heisenberg
/// Lie algebra h_{2n+1}).
inline LeibnizAlgebra heisenberg(const Mat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("heisenberg: A must be square");
    const std::size_t n = A.rows();
    LeibnizAlgebra L(2 * n + 1);
    L.basis_labels = detail::pair_labels(n);
    const std::size_t z = 2 * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat delta = (i == j) ? Rat(1) : Rat(0);
            L.tensor.c(i, n + j, z) = delta + A(i, j);
            L.tensor.c(n + j, i, z) = -delta + A(i, j);
        }
    return L;
}

inline LeibnizAlgebra heisenberg(const CompanionMatrix& A) { return heisenberg(A.matrix()); }

/// Kronecker algebra k_n on {e_1..e_n, f_1..f_n, z}.
inline LeibnizAlgebra kronecker(std::size_t n) {
    if (n < 1) throw std::invalid_argument("kronecker: n must be >= 1");
    LeibnizAlgebra L(2 * n + 1);
    L.basis_labels = detail::pair_labels(n);
    const std::size_t z = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        L.tensor.c(i, n + i, z) = Rat(1);
        L.tensor.c(n + i, i, z) = Rat(1);
    }
    for (std::size_t i = 1; i < n; ++i) {  // paper's i = 2..n
        L.tensor.c(i, n + i - 1, z) = Rat(1);
        L.tensor.c(n + i - 1, i, z) = Rat(-1);
    }
    return L;
}

/// Dieudonne algebra d_n on {e_1..e_{2n+1}, z}, following the paper's five
/// bracket families verbatim (empty index ranges at small n emit nothing).
inline LeibnizAlgebra dieudonne(std::size_t n) {
    if (n < 1) throw std::invalid_argument("dieudonne: n must be >= 1");
    LeibnizAlgebra L(2 * n + 2);
    for (std::size_t i = 1; i <= 2 * n + 1; ++i)
        L.basis_labels[i - 1] = "e" + std::to_string(i);
    L.basis_labels[2 * n + 1] = "z";
    const std::size_t z = 2 * n + 1;
    detail::BracketFiller fill(L.tensor);
    auto e = [](std::size_t i) { return i - 1; };  // paper's 1-based e_i
    fill.set(e(1), e(n + 2), z, Rat(1));
    for (std::size_t i = 2; i <= n; ++i) {
        fill.set(e(i), e(n + i), z, Rat(1));
        fill.set(e(i), e(n + i + 1), z, Rat(1));
    }
    fill.set(e(n + 1), e(2 * n + 1), z, Rat(1));
    for (std::size_t i = n + 2; i <= 2 * n + 1; ++i) {
        fill.set(e(i), e(i - n), z, Rat(1));
        fill.set(e(i), e(i - n - 1), z, Rat(-1));
    }
    return L;
}

/// S1: two-dimensional non-nilpotent Lie algebra, [e2,e1] = -[e1,e2] = e1.
inline LeibnizAlgebra s1() {
    LeibnizAlgebra L(2);
    L.basis_labels = {"e1", "e2"};
    L.tensor.c(1, 0, 0) = Rat(1);
    L.tensor.c(0, 1, 0) = Rat(-1);
    return L;
}

/// S2 in its original presentation: [e2,e1] = [e2,e2] = e1.
inline LeibnizAlgebra s2() {
    LeibnizAlgebra L(2);
    L.basis_labels = {"e1", "e2"};
    L.tensor.c(1, 0, 0) = Rat(1);
    L.tensor.c(1, 1, 0) = Rat(1);
    return L;
}

/// S2 after the basis change e2 -> e2 - e1: single bracket [e2,e1] = e1.
inline LeibnizAlgebra s2_normalized() {
    LeibnizAlgebra L(2);
    L.basis_labels = {"e1", "e2"};
    L.tensor.c(1, 0, 0) = Rat(1);
    return L;
}

inline LeibnizAlgebra abelian(std::size_t m) {
    LeibnizAlgebra L(m);
    for (std::size_t i = 0; i < m; ++i) L.basis_labels[i] = "a" + std::to_string(i + 1);
    return L;
}

/// L_n = S2 (normalized) + abelian(n-2): basis {e1, e2, f3..fn}, single
/// bracket [e2,e1] = e1.
inline LeibnizAlgebra l_n(std::size_t n) {
    if (n < 2) throw std::invalid_argument("l_n: n must be >= 2");
    LeibnizAlgebra L(n);
    L.basis_labels[0] = "e1";
    L.basis_labels[1] = "e2";
    for (std::size_t i = 3; i <= n; ++i) L.basis_labels[i - 1] = "f" + std::to_string(i);
    L.tensor.c(1, 0, 0) = Rat(1);
    return L;
}

/// The pre-normalization algebra of the classification: basis
/// {e1, e2, f3..fn} with [e2,e1] = e1, [e2,f_i] = beta_i e1,
/// [f_i,e1] = alpha_i e1 and [f_i,f_j] = alpha_i beta_j e1.
inline LeibnizAlgebra paper_presentation(std::size_t n, const Vec& alpha, const Vec& beta) {
    if (n < 2) throw std::invalid_argument("paper_presentation: n must be >= 2");
    if (alpha.size() != n - 2 || beta.size() != n - 2)
        throw std::invalid_argument("paper_presentation: parameter vectors must have length n - 2");
    LeibnizAlgebra L = l_n(n);
    for (std::size_t i = 0; i < n - 2; ++i) {
        L.tensor.c(1, 2 + i, 0) = beta[i];
        L.tensor.c(2 + i, 0, 0) = alpha[i];
        for (std::size_t j = 0; j < n - 2; ++j) L.tensor.c(2 + i, 2 + j, 0) = alpha[i] * beta[j];
    }
    return L;
}

}  // namespace leibniz

#endif
