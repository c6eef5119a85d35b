#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// Structure constants c[i][j][k] of a bilinear bracket on an n-dimensional
/// space: [e_i, e_j] = sum_k c[i][j][k] e_k.
class StructureTensor {
public:
    explicit StructureTensor(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }

    Rat& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const StructureTensor& a, const StructureTensor& b) { return !(a == b); }

private:
    std::size_t dim_;
    std::vector<Rat> c_;
};

/// Finite-dimensional left Leibniz algebra presented by structure constants
/// over the rationals. Values are immutable once built; every operation on
/// them is a pure function, so sharing across threads is safe.
struct LeibnizAlgebra {
    StructureTensor tensor;
    std::vector<std::string> basis_labels;

    explicit LeibnizAlgebra(std::size_t dim)
        : tensor(dim), basis_labels(default_labels(dim)) {}

    LeibnizAlgebra(StructureTensor t, std::vector<std::string> labels)
        : tensor(std::move(t)), basis_labels(std::move(labels)) {
        if (basis_labels.size() != tensor.dim())
            throw std::invalid_argument("LeibnizAlgebra: label count mismatch");
    }

    std::size_t dim() const { return tensor.dim(); }

    /// [e_i, e_j] as a coordinate vector.
    Vec bracket_basis(std::size_t i, std::size_t j) const {
        Vec r(dim());
        for (std::size_t k = 0; k < dim(); ++k) r[k] = tensor.c(i, j, k);
        return r;
    }

    /// Bilinear extension of the basis brackets.
    Vec bracket(const Vec& x, const Vec& y) const {
        const std::size_t n = dim();
        if (x.size() != n || y.size() != n)
            throw std::invalid_argument("bracket: operand length mismatch");
        Vec r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                const Rat f = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k) r[k] += f * tensor.c(i, j, k);
            }
        }
        return r;
    }

    Vec basis_vector(std::size_t i) const {
        Vec v(dim());
        v[i] = Rat(1);
        return v;
    }

    static std::vector<std::string> default_labels(std::size_t dim) {
        std::vector<std::string> labels(dim);
        for (std::size_t i = 0; i < dim; ++i) labels[i] = "x" + std::to_string(i + 1);
        return labels;
    }
};

/// Basis triple on which an identity fails.
struct TripleWitness {
    std::size_t i, j, k;
};

/// Left Leibniz identity [x,[y,z]] = [[x,y],z] + [y,[x,z]] checked on all
/// basis triples, which suffices by trilinearity of both sides. Returns the
/// first failing triple, or nullopt when the identity holds.
inline std::optional<TripleWitness> check_left_leibniz(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = L.bracket(L.basis_vector(i), L.bracket_basis(j, k));
                Vec rhs = L.bracket(L.bracket_basis(i, j), L.basis_vector(k)) +
                          L.bracket(L.basis_vector(j), L.bracket_basis(i, k));
                if (lhs != rhs) return TripleWitness{i, j, k};
            }
    return std::nullopt;
}

/// Right Leibniz identity [[x,y],z] = [[x,z],y] + [x,[y,z]] on basis triples.
inline std::optional<TripleWitness> check_right_leibniz(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = L.bracket(L.bracket_basis(i, j), L.basis_vector(k));
                Vec rhs = L.bracket(L.bracket_basis(i, k), L.basis_vector(j)) +
                          L.bracket(L.basis_vector(i), L.bracket_basis(j, k));
                if (lhs != rhs) return TripleWitness{i, j, k};
            }
    return std::nullopt;
}

inline bool is_symmetric(const LeibnizAlgebra& L) {
    return !check_left_leibniz(L) && !check_right_leibniz(L);
}

/// Lie = left Leibniz + antisymmetric bracket. Over characteristic zero
/// antisymmetry on basis pairs is equivalent to vanishing squares.
inline bool is_lie(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec ij = L.bracket_basis(i, j);
            Vec ji = L.bracket_basis(j, i);
            for (std::size_t k = 0; k < n; ++k)
                if (ij[k] + ji[k] != Rat(0)) return false;
        }
    return !check_left_leibniz(L).has_value();
}

/// Span of all brackets [u, v] with u in U, v in V (basis vectors suffice
/// by bilinearity).
inline Subspace bracket_span(const LeibnizAlgebra& L, const Subspace& u, const Subspace& v) {
    std::vector<Vec> gens;
    for (std::size_t a = 0; a < u.dim(); ++a)
        for (std::size_t b = 0; b < v.dim(); ++b)
            gens.push_back(L.bracket(u.basis_vector(a), v.basis_vector(b)));
    return Subspace::span_of(L.dim(), gens);
}

/// Left center { x : [x, L] = 0 }, the kernel of the stacked operators
/// x -> [x, e_j].
inline Subspace left_center(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    Mat sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) sys(j * n + k, i) = L.tensor.c(i, j, k);
    return kernel_basis(sys);
}

/// Right center { x : [L, x] = 0 }.
inline Subspace right_center(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    Mat sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) sys(j * n + k, i) = L.tensor.c(j, i, k);
    return kernel_basis(sys);
}

inline Subspace center(const LeibnizAlgebra& L) {
    return intersect(left_center(L), right_center(L));
}

/// Leibniz kernel Leib(L): the span of squares [x,x] (equivalently of
/// [e_i,e_i] and [e_i,e_j]+[e_j,e_i]) closed to the smallest bilateral
/// ideal containing it. The closure iteration stabilizes within n steps
/// because the chain of subspaces is increasing in a space of dimension n.
inline Subspace leibniz_kernel(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(L.bracket_basis(i, i));
        for (std::size_t j = i + 1; j < n; ++j)
            gens.push_back(L.bracket_basis(i, j) + L.bracket_basis(j, i));
    }
    Subspace s = Subspace::span_of(n, gens);
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<Vec> next;
        for (std::size_t a = 0; a < s.dim(); ++a) {
            Vec b = s.basis_vector(a);
            next.push_back(b);
            for (std::size_t i = 0; i < n; ++i) {
                next.push_back(L.bracket(L.basis_vector(i), b));
                next.push_back(L.bracket(b, L.basis_vector(i)));
            }
        }
        Subspace grown = Subspace::span_of(n, next);
        if (grown.dim() == s.dim()) break;
        s = grown;
    }
    return s;
}

/// Derived series L^0 = L, L^{k+1} = [L^k, L^k], listed up to the first
/// repeated term. Terms are nested, so equal dimension means equal term.
inline std::vector<Subspace> derived_series(const LeibnizAlgebra& L) {
    std::vector<Subspace> series{Subspace::full(L.dim())};
    for (;;) {
        Subspace next = bracket_span(L, series.back(), series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

/// Lower central series L^(0) = L, L^(k+1) = [L, L^(k)].
inline std::vector<Subspace> lower_central_series(const LeibnizAlgebra& L) {
    std::vector<Subspace> series{Subspace::full(L.dim())};
    for (;;) {
        Subspace next = bracket_span(L, Subspace::full(L.dim()), series.back());
        if (next.dim() == series.back().dim()) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

/// Step count k with L^(k) = 0 and L^(k-1) != 0; nullopt when the lower
/// central series stabilizes at a nonzero term.
inline std::optional<std::size_t> nilpotency_step(const LeibnizAlgebra& L) {
    auto series = lower_central_series(L);
    if (series.back().dim() != 0) return std::nullopt;
    return series.size() - 1;
}

inline std::optional<std::size_t> solvability_step(const LeibnizAlgebra& L) {
    auto series = derived_series(L);
    if (series.back().dim() != 0) return std::nullopt;
    return series.size() - 1;
}

/// Which slot of the bracket the ideal occupies: a left ideal is closed as
/// the left factor ([s, L] <= s), a right ideal as the right factor
/// ([L, s] <= s), and a bilateral ideal as both.
enum class IdealSide { left, right, bilateral };

struct IdealWitness {
    Subspace subspace;
    IdealSide side;
};

inline bool is_ideal(const LeibnizAlgebra& L, const Subspace& s, IdealSide side) {
    if (s.ambient_dim() != L.dim())
        throw std::invalid_argument("is_ideal: ambient dimension mismatch");
    const Subspace full = Subspace::full(L.dim());
    if (side != IdealSide::right && !s.contains_subspace(bracket_span(L, s, full))) return false;
    if (side != IdealSide::left && !s.contains_subspace(bracket_span(L, full, s))) return false;
    return true;
}

struct QuotientResult {
    LeibnizAlgebra algebra;
    Mat projection;  // maps old coordinates to quotient coordinates
};

/// Quotient by a bilateral ideal. The quotient basis is the set of standard
/// basis vectors at the non-pivot columns of the ideal's RREF basis; the
/// projection reduces a vector modulo the ideal and keeps the non-pivot
/// coordinates.
inline QuotientResult quotient(const LeibnizAlgebra& L, const Subspace& ideal) {
    if (!is_ideal(L, ideal, IdealSide::bilateral))
        throw std::invalid_argument("quotient: subspace is not a bilateral ideal");
    const std::size_t n = L.dim();
    const Mat& b = ideal.basis();
    std::vector<bool> is_pivot(n, false);
    {
        auto r = rref(b);
        for (std::size_t p : r.pivots) is_pivot[p] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) keep.push_back(j);
    const std::size_t q = keep.size();

    // projection: subtract ideal-basis multiples to clear pivot coordinates,
    // then restrict to the kept coordinates
    Mat proj(q, n);
    for (std::size_t col = 0; col < n; ++col) {
        Vec e(n);
        e[col] = Rat(1);
        for (std::size_t i = 0; i < b.rows(); ++i) {
            std::size_t p = 0;
            while (b(i, p).is_zero()) ++p;
            if (!e[p].is_zero()) {
                const Rat f = e[p];
                for (std::size_t j = 0; j < n; ++j) e[j] -= f * b(i, j);
            }
        }
        for (std::size_t a = 0; a < q; ++a) proj(a, col) = e[keep[a]];
    }

    LeibnizAlgebra Q(q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t c = 0; c < q; ++c) {
            Vec img = proj * L.bracket_basis(keep[a], keep[c]);
            for (std::size_t k = 0; k < q; ++k) Q.tensor.c(a, c, k) = img[k];
        }
    for (std::size_t a = 0; a < q; ++a) Q.basis_labels[a] = L.basis_labels[keep[a]] + "~";
    return {std::move(Q), std::move(proj)};
}

/// Block direct sum; cross brackets vanish.
inline LeibnizAlgebra direct_sum(const LeibnizAlgebra& A, const LeibnizAlgebra& B) {
    const std::size_t na = A.dim(), nb = B.dim();
    LeibnizAlgebra S(na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) S.tensor.c(i, j, k) = A.tensor.c(i, j, k);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                S.tensor.c(na + i, na + j, na + k) = B.tensor.c(i, j, k);
    for (std::size_t i = 0; i < na; ++i) S.basis_labels[i] = A.basis_labels[i];
    for (std::size_t i = 0; i < nb; ++i) S.basis_labels[na + i] = B.basis_labels[i];
    return S;
}

/// Change of basis: columns of P are the new basis vectors in old
/// coordinates, and the new tensor satisfies [e'_i, e'_j] = P^{-1} [P e_i, P e_j].
/// Labels are positional names and stay put.
inline LeibnizAlgebra transport(const LeibnizAlgebra& L, const Mat& P) {
    const std::size_t n = L.dim();
    if (P.rows() != n || P.cols() != n)
        throw std::invalid_argument("transport: matrix size mismatch");
    auto pinv = inverse(P);
    if (!pinv) throw std::invalid_argument("transport: singular change of basis");
    LeibnizAlgebra T(n);
    T.basis_labels = L.basis_labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec img = *pinv * L.bracket(P.col(i), P.col(j));
            for (std::size_t k = 0; k < n; ++k) T.tensor.c(i, j, k) = img[k];
        }
    return T;
}

enum class TwoDimKind { S1, S2 };

struct NonNilpotentIdeal {
    IdealWitness witness;       // S = span{x, z}, bilateral
    TwoDimKind kind;            // which two-dimensional non-nilpotent algebra S is
    Mat iso;                    // 2x2 basis change: transport(restricted, iso) is standard
    LeibnizAlgebra restricted;  // bracket of L restricted to S, basis (z, x)
};

/// For non-nilpotent L with one-dimensional derived subalgebra span{z},
/// locates x with [x, z] = gamma z, gamma != 0, and returns the bilateral
/// ideal S = span{x, z} together with its place in the two-dimensional
/// classification: S1 when the restricted bracket is antisymmetric, S2
/// otherwise. iso maps the restricted basis (z, x) onto the standard
/// presentation of S1 resp. S2.
inline NonNilpotentIdeal find_nonnilpotent_ideal(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    Subspace derived = bracket_span(L, Subspace::full(n), Subspace::full(n));
    if (derived.dim() != 1)
        throw std::invalid_argument("find_nonnilpotent_ideal: dim [L,L] != 1");
    if (nilpotency_step(L).has_value())
        throw std::invalid_argument("find_nonnilpotent_ideal: algebra is nilpotent");

    const Vec z = derived.basis_vector(0);
    // every bracket lies in [L,L] = span{z}; scan basis vectors for one that
    // acts non-trivially on z
    std::optional<std::size_t> found;
    Rat gamma;
    for (std::size_t i = 0; i < n && !found; ++i) {
        Vec w = L.bracket(L.basis_vector(i), z);
        for (std::size_t k = 0; k < n; ++k) {
            if (!z[k].is_zero()) {
                gamma = w[k] / z[k];
                break;
            }
        }
        if (!leibniz::is_zero(w)) found = i;
    }
    if (!found)
        throw std::logic_error("find_nonnilpotent_ideal: [L, z] = 0 contradicts non-nilpotency");
    const Vec x = L.basis_vector(*found);

    // restricted algebra on basis (z, x); all four brackets are multiples of z
    auto coeff_along_z = [&](const Vec& w) {
        for (std::size_t k = 0; k < n; ++k)
            if (!z[k].is_zero()) return w[k] / z[k];
        throw std::logic_error("find_nonnilpotent_ideal: zero spanning vector");
    };
    const Rat delta = coeff_along_z(L.bracket(z, x));    // [z,x] = delta z
    const Rat eps = coeff_along_z(L.bracket(x, x));      // [x,x] = eps z
    LeibnizAlgebra restricted(2);
    restricted.basis_labels = {"z", "x"};
    restricted.tensor.c(1, 0, 0) = gamma;
    restricted.tensor.c(0, 1, 0) = delta;
    restricted.tensor.c(1, 1, 0) = eps;

    const bool lie = (delta == -gamma) && eps.is_zero();
    Mat iso(2, 2);
    if (lie) {
        // E1 = z, E2 = x/gamma gives [E2,E1] = E1 = -[E1,E2]
        iso(0, 0) = Rat(1);
        iso(1, 1) = inverse(gamma);
    } else {
        // E1 = z, E2 = x/gamma + (1 - eps/gamma^2) z gives the original S2
        // presentation [E2,E1] = [E2,E2] = E1
        iso(0, 0) = Rat(1);
        iso(0, 1) = Rat(1) - eps / (gamma * gamma);
        iso(1, 1) = inverse(gamma);
    }

    // transporting the restricted bracket by iso must reproduce the standard
    // presentation; anything else means the input was not a Leibniz algebra
    StructureTensor standard(2);
    standard.c(1, 0, 0) = Rat(1);
    if (lie)
        standard.c(0, 1, 0) = Rat(-1);
    else
        standard.c(1, 1, 0) = Rat(1);
    if (transport(restricted, iso).tensor != standard)
        throw std::invalid_argument(
            "find_nonnilpotent_ideal: restricted bracket violates the Leibniz identity");

    Subspace s = Subspace::span_of(n, {x, z});
    if (!is_ideal(L, s, IdealSide::bilateral))
        throw std::logic_error("find_nonnilpotent_ideal: span{x, z} failed the ideal check");
    return {{std::move(s), IdealSide::bilateral}, lie ? TwoDimKind::S1 : TwoDimKind::S2,
            std::move(iso), std::move(restricted)};
}

}  // namespace leibniz

#endif
