#ifndef LEIBNIZ_RACKS_HPP
#define LEIBNIZ_RACKS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

using RVec = std::vector<double>;

/// Deterministic uniform sampler. Doubles are derived from the raw 64-bit
/// stream (53-bit mantissa construction), so identical seeds give identical
/// samples on every platform, unlike std::uniform_real_distribution.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    RVec point(std::size_t n, double lo, double hi) {
        RVec v(n);
        for (auto& x : v) x = uniform(lo, hi);
        return v;
    }

private:
    // xorshift* keeps the stream identical across standard library versions
    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }

    std::uint64_t state_;
};

enum class RackVariant { PaperLn, CorrectedLn, ConjMatrix };

/// Pointed binary operation on real n-space in closed form.
///   PaperLn:     x > y = (y1, y2 + e^{x1} y2, y3..yn), unit 0
///   CorrectedLn: x > y = (y1, e^{x1} y2, y3..yn), unit 0
///   ConjMatrix:  x > y = x y x^{-1} on flattened invertible k x k matrices,
///                unit = identity matrix
/// PaperLn is the operation as printed in the source material; it violates
/// the unit law 1 > x = x, which the axiom checker makes visible. Both Ln
/// variants have the same tangent algebra.
struct SmoothRack {
    std::size_t dim;
    RackVariant variant;
    std::size_t mat_size;  // k for ConjMatrix, 0 otherwise

    static SmoothRack paper_ln(std::size_t n) {
        if (n < 2) throw std::invalid_argument("paper_ln: dimension must be >= 2");
        return {n, RackVariant::PaperLn, 0};
    }
    static SmoothRack corrected_ln(std::size_t n) {
        if (n < 2) throw std::invalid_argument("corrected_ln: dimension must be >= 2");
        return {n, RackVariant::CorrectedLn, 0};
    }
    static SmoothRack conj_matrix(std::size_t k) {
        if (k < 1) throw std::invalid_argument("conj_matrix: size must be >= 1");
        return {k * k, RackVariant::ConjMatrix, k};
    }

    RVec unit() const {
        RVec u(dim, 0.0);
        if (variant == RackVariant::ConjMatrix)
            for (std::size_t i = 0; i < mat_size; ++i) u[i * mat_size + i] = 1.0;
        return u;
    }
};

namespace rackdetail {

/// Gauss-Jordan inverse with partial pivoting; nullopt when the pivot
/// collapses numerically.
inline std::optional<std::vector<double>> mat_inverse(const std::vector<double>& m, std::size_t k) {
    std::vector<double> a = m, inv(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = 1.0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::fabs(a[r * k + col]) > std::fabs(a[piv * k + col])) piv = r;
        if (std::fabs(a[piv * k + col]) < 1e-12) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < k; ++j) {
                std::swap(a[piv * k + j], a[col * k + j]);
                std::swap(inv[piv * k + j], inv[col * k + j]);
            }
        const double d = a[col * k + col];
        for (std::size_t j = 0; j < k; ++j) {
            a[col * k + j] /= d;
            inv[col * k + j] /= d;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double f = a[r * k + col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                a[r * k + j] -= f * a[col * k + j];
                inv[r * k + j] -= f * inv[col * k + j];
            }
        }
    }
    return inv;
}

inline std::vector<double> mat_mul(const std::vector<double>& a, const std::vector<double>& b,
                                   std::size_t k) {
    std::vector<double> c(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const double f = a[i * k + l];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < k; ++j) c[i * k + j] += f * b[l * k + j];
        }
    return c;
}

inline std::string format_point(const RVec& v) {
    std::string out = "(";
    char buf[32];
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%g", v[i]);
        out += buf;
        if (i + 1 < v.size()) out += ",";
    }
    return out + ")";
}

}  // namespace rackdetail

inline RVec rack_op(const SmoothRack& R, const RVec& x, const RVec& y) {
    if (x.size() != R.dim || y.size() != R.dim)
        throw std::invalid_argument("rack_op: point length mismatch");
    switch (R.variant) {
        case RackVariant::PaperLn: {
            RVec r = y;
            r[1] = y[1] + std::exp(x[0]) * y[1];
            return r;
        }
        case RackVariant::CorrectedLn: {
            RVec r = y;
            r[1] = std::exp(x[0]) * y[1];
            return r;
        }
        case RackVariant::ConjMatrix: {
            auto xinv = rackdetail::mat_inverse(x, R.mat_size);
            if (!xinv) throw std::domain_error("rack_op: singular conjugator");
            return rackdetail::mat_mul(rackdetail::mat_mul(x, y, R.mat_size), *xinv, R.mat_size);
        }
    }
    throw std::logic_error("rack_op: unhandled variant");
}

/// Closed-form inverse of the left multiplication: x > rack_op_inv(x, y) = y.
inline RVec rack_op_inv(const SmoothRack& R, const RVec& x, const RVec& y) {
    if (x.size() != R.dim || y.size() != R.dim)
        throw std::invalid_argument("rack_op_inv: point length mismatch");
    switch (R.variant) {
        case RackVariant::PaperLn: {
            RVec r = y;
            r[1] = y[1] / (1.0 + std::exp(x[0]));
            return r;
        }
        case RackVariant::CorrectedLn: {
            RVec r = y;
            r[1] = std::exp(-x[0]) * y[1];
            return r;
        }
        case RackVariant::ConjMatrix: {
            auto xinv = rackdetail::mat_inverse(x, R.mat_size);
            if (!xinv) throw std::domain_error("rack_op_inv: singular conjugator");
            return rackdetail::mat_mul(rackdetail::mat_mul(*xinv, y, R.mat_size), x, R.mat_size);
        }
    }
    throw std::logic_error("rack_op_inv: unhandled variant");
}

struct AxiomResult {
    bool pass = true;
    double max_residual = 0.0;
    std::string witness;  // first failing evaluation, as "input -> output"
};

struct RackReport {
    AxiomResult autodistributive;
    AxiomResult bijective;
    AxiomResult unit_left;   // 1 > x = x
    AxiomResult unit_right;  // x > 1 = 1
    AxiomResult idempotent;  // x > x = x (quandle property, informational)

    bool rack_pass() const { return autodistributive.pass && bijective.pass; }
    bool pointed_pass() const { return rack_pass() && unit_left.pass && unit_right.pass; }
    bool quandle_pass() const { return pointed_pass() && idempotent.pass; }

    double max_residual() const {
        double m = autodistributive.max_residual;
        for (const auto* a : {&bijective, &unit_left, &unit_right})
            if (a->max_residual > m) m = a->max_residual;
        return m;
    }
};

/// Samples the rack axioms on `samples` points drawn uniformly from
/// [-2, 2]^n (ConjMatrix resamples until the conjugator is comfortably
/// invertible). Unit and idempotence checks probe the standard basis points
/// first so a canonical witness is reported before any random one.
inline RackReport check_rack_axioms(const SmoothRack& R, std::size_t samples, std::uint64_t seed,
                                    double tol) {
    if (tol <= 0) throw std::invalid_argument("check_rack_axioms: tol must be positive");
    SampleRng rng(seed);
    const RVec unit = R.unit();

    auto sample_point = [&]() {
        for (;;) {
            RVec p = rng.point(R.dim, -2.0, 2.0);
            if (R.variant != RackVariant::ConjMatrix) return p;
            auto inv = rackdetail::mat_inverse(p, R.mat_size);
            if (inv) {
                // reject badly conditioned conjugators so residuals stay
                // far below tol
                double det = 1.0;
                std::vector<double> a = p;
                bool ok = true;
                for (std::size_t c = 0; c < R.mat_size && ok; ++c) {
                    std::size_t piv = c;
                    for (std::size_t r = c + 1; r < R.mat_size; ++r)
                        if (std::fabs(a[r * R.mat_size + c]) > std::fabs(a[piv * R.mat_size + c]))
                            piv = r;
                    double pv = a[piv * R.mat_size + c];
                    if (std::fabs(pv) < 1e-9) {
                        ok = false;
                        break;
                    }
                    if (piv != c)
                        for (std::size_t j = 0; j < R.mat_size; ++j)
                            std::swap(a[piv * R.mat_size + j], a[c * R.mat_size + j]);
                    det *= pv;
                    for (std::size_t r = c + 1; r < R.mat_size; ++r) {
                        double f = a[r * R.mat_size + c] / pv;
                        for (std::size_t j = c; j < R.mat_size; ++j)
                            a[r * R.mat_size + j] -= f * a[c * R.mat_size + j];
                    }
                }
                if (ok && std::fabs(det) >= 0.25) return p;
            }
        }
    };

    auto residual = [](const RVec& a, const RVec& b) {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
        return m;
    };
    auto record = [&](AxiomResult& res, const RVec& in, const RVec& got, const RVec& want) {
        const double r = residual(got, want);
        res.max_residual = std::max(res.max_residual, r);
        if (r > tol && res.pass) {
            res.pass = false;
            res.witness = rackdetail::format_point(in) + " -> " + rackdetail::format_point(got);
        }
    };

    RackReport report;

    std::vector<RVec> unit_probes;
    if (R.variant != RackVariant::ConjMatrix)
        for (std::size_t i = 0; i < R.dim; ++i) {
            RVec p(R.dim, 0.0);
            p[i] = 1.0;
            unit_probes.push_back(std::move(p));
        }
    for (std::size_t s = 0; s < samples; ++s) unit_probes.push_back(sample_point());
    for (const RVec& p : unit_probes) {
        record(report.unit_left, p, rack_op(R, unit, p), p);
        record(report.unit_right, p, rack_op(R, p, unit), unit);
        record(report.idempotent, p, rack_op(R, p, p), p);
    }

    for (std::size_t s = 0; s < samples; ++s) {
        RVec x = sample_point(), y = sample_point(), z = sample_point();
        record(report.autodistributive, x, rack_op(R, x, rack_op(R, y, z)),
               rack_op(R, rack_op(R, x, y), rack_op(R, x, z)));
        record(report.bijective, y, rack_op(R, x, rack_op_inv(R, x, y)), y);
    }
    return report;
}

/// Tangent bracket at the unit by a central mixed difference along the
/// straight paths unit + s u and unit + t v:
///   ( F(h,h) - F(h,-h) - F(-h,h) + F(-h,-h) ) / (4 h^2),
/// second-order accurate for the closed-form variants.
inline RVec tangent_bracket(const SmoothRack& R, const RVec& u, const RVec& v, double h) {
    if (h <= 0) throw std::invalid_argument("tangent_bracket: h must be positive");
    if (u.size() != R.dim || v.size() != R.dim)
        throw std::invalid_argument("tangent_bracket: direction length mismatch");
    const RVec unit = R.unit();
    auto path = [&](const RVec& dir, double s) {
        RVec p(R.dim);
        for (std::size_t i = 0; i < R.dim; ++i) p[i] = unit[i] + s * dir[i];
        return p;
    };
    auto F = [&](double s, double t) { return rack_op(R, path(u, s), path(v, t)); };
    const RVec fpp = F(h, h), fpm = F(h, -h), fmp = F(-h, h), fmm = F(-h, -h);
    RVec out(R.dim);
    for (std::size_t i = 0; i < R.dim; ++i)
        out[i] = (fpp[i] - fpm[i] - fmp[i] + fmm[i]) / (4.0 * h * h);
    return out;
}

/// Real structure constants extracted from the rack, plus a Richardson-style
/// estimate of the O(h^2) truncation error (from a companion evaluation at 2h).
struct TangentTensor {
    std::size_t dim;
    std::vector<double> c;
    double h;
    double err_estimate;

    double at(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }
};

inline TangentTensor tangent_algebra(const SmoothRack& R, double h) {
    const std::size_t n = R.dim;
    TangentTensor T{n, std::vector<double>(n * n * n, 0.0), h, 0.0};
    std::vector<double> coarse(n * n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RVec u(n, 0.0), v(n, 0.0);
            u[i] = 1.0;
            v[j] = 1.0;
            RVec fine = tangent_bracket(R, u, v, h);
            RVec twice = tangent_bracket(R, u, v, 2.0 * h);
            for (std::size_t k = 0; k < n; ++k) {
                T.c[(i * n + j) * n + k] = fine[k];
                coarse[(i * n + j) * n + k] = twice[k];
            }
        }
    double spread = 0.0;
    for (std::size_t idx = 0; idx < T.c.size(); ++idx)
        spread = std::max(spread, std::fabs(coarse[idx] - T.c[idx]));
    T.err_estimate = spread / 3.0;  // T_h = T + C h^2  =>  (T_2h - T_h)/3 ~ C h^2
    return T;
}

struct TangentComparison {
    double max_deviation = 0.0;
    std::size_t i = 0, j = 0, k = 0;  // rack coordinates of the worst entry
    bool pass = true;
};

/// Compares tangent constants against exact ones under an index map from
/// rack coordinates to algebra basis positions.
inline TangentComparison compare_tangent_mapped(const TangentTensor& T, const LeibnizAlgebra& L,
                                                double tol, const std::vector<std::size_t>& perm) {
    if (T.dim != L.dim() || perm.size() != T.dim)
        throw std::invalid_argument("compare_tangent: dimension mismatch");
    TangentComparison cmp;
    for (std::size_t i = 0; i < T.dim; ++i)
        for (std::size_t j = 0; j < T.dim; ++j)
            for (std::size_t k = 0; k < T.dim; ++k) {
                const double dev =
                    std::fabs(T.at(i, j, k) - L.tensor.c(perm[i], perm[j], perm[k]).to_double());
                if (dev > cmp.max_deviation) {
                    cmp.max_deviation = dev;
                    cmp.i = i;
                    cmp.j = j;
                    cmp.k = k;
                }
            }
    cmp.pass = cmp.max_deviation <= tol;
    return cmp;
}

/// The documented identification for the Ln racks: rack coordinate 1 is the
/// e2 direction, rack coordinate 2 the e1 direction, the rest are f3..fn.
inline std::vector<std::size_t> ln_coordinate_map(std::size_t n) {
    std::vector<std::size_t> perm(n);
    perm[0] = 1;
    perm[1] = 0;
    for (std::size_t i = 2; i < n; ++i) perm[i] = i;
    return perm;
}

inline TangentComparison compare_tangent(const TangentTensor& T, const LeibnizAlgebra& L,
                                         double tol) {
    return compare_tangent_mapped(T, L, tol, ln_coordinate_map(T.dim));
}

/// gl_k with the commutator bracket on matrix units, flattened row-major:
/// the exact reference tensor for the conjugation rack's tangent algebra.
inline LeibnizAlgebra gl_commutator_algebra(std::size_t k) {
    LeibnizAlgebra L(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            L.basis_labels[a * k + b] = "E" + std::to_string(a + 1) + std::to_string(b + 1);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t d = 0; d < k; ++d) {
                    const std::size_t p = a * k + b, q = c * k + d;
                    if (b == c) L.tensor.c(p, q, a * k + d) += Rat(1);
                    if (d == a) L.tensor.c(p, q, c * k + b) -= Rat(1);
                }
    return L;
}

}  // namespace leibniz

#endif
