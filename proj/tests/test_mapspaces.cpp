#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leibniz/families.hpp"
#include "leibniz/mapspaces.hpp"

using namespace leibniz;

namespace {

Vec e(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Rat(1);
    return v;
}

std::size_t der_dim_ln(std::size_t n) { return (n - 2) * (n - 2) + (n - 1); }

/// Inn(L) as a subspace of flattened map space.
Subspace inner_span(const LeibnizAlgebra& L) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < L.dim(); ++i)
        gens.push_back(flatten(inner_derivation(L, L.basis_vector(i))));
    return Subspace::span_of(L.dim() * L.dim(), gens);
}

}  // namespace

TEST_CASE("derivation spaces") {
    Subspace der_s1 = derivation_space(s1());
    CHECK(der_s1.dim() == 2);
    CHECK(der_s1 == Subspace::span_of(4, {flatten(Mat{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}),
                                          flatten(Mat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}})}));

    for (std::size_t n = 2; n <= 5; ++n) CHECK(derivation_space(l_n(n)).dim() == der_dim_ln(n));
    CHECK(derivation_space(abelian(3)).dim() == 9);
}

TEST_CASE("anti-derivation spaces") {
    for (const auto& L : {l_n(4), s2(), kronecker(2)}) {
        Subspace ader = antiderivation_space(L);
        for (std::size_t i = 0; i < L.dim(); ++i)
            CHECK(ader.contains(flatten(right_adjoint(L, L.basis_vector(i)))));
    }
    CHECK(antiderivation_space(abelian(3)).dim() == 9);

    // l_2: the family [[0, a],[0, 0]] consists of anti-derivations
    Subspace ader2 = antiderivation_space(l_n(2));
    CHECK(ader2.contains(flatten(Mat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}})));
}

TEST_CASE("biderivation spaces of the two-dimensional algebras") {
    Subspace b1 = biderivation_space(s1());
    CHECK(b1.dim() == 2);
    for (const Mat& d : {Mat{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}},
                         Mat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}})
        CHECK(b1.contains(flatten_pair({d, Rat(-1) * d})));

    Subspace b2 = biderivation_space(s2());
    CHECK(b2.dim() == 2);
    CHECK(b2.contains(flatten_pair({Mat{{Rat(1), Rat(1)}, {Rat(0), Rat(0)}}, Mat(2, 2)})));
    CHECK(b2.contains(flatten_pair({Mat(2, 2), Mat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}})));

    for (std::size_t n = 2; n <= 5; ++n)
        CHECK(biderivation_space(l_n(n)).dim() == 2 * der_dim_ln(n));
}

TEST_CASE("biderivation pairs of l_n have the classified block shapes") {
    // d: free entries (1,1), (i,2) for i>=3 and the lower-right block;
    // D: free entries (1,2), (i,2) for i>=3 and the lower-right block
    auto d_forced_zero = [](std::size_t i, std::size_t j) {
        return (i == 0 && j >= 1) || i == 1 || (j == 0 && i >= 1);
    };
    auto D_forced_zero = [](std::size_t i, std::size_t j) {
        return j == 0 || i == 1 || (i == 0 && j >= 2);
    };
    for (std::size_t n = 2; n <= 5; ++n) {
        Subspace bider = biderivation_space(l_n(n));
        std::vector<std::vector<bool>> d_used(n, std::vector<bool>(n, false)), D_used = d_used;
        for (std::size_t a = 0; a < bider.dim(); ++a) {
            BiderivationPair p = unflatten_pair(bider.basis_vector(a), n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (d_forced_zero(i, j)) CHECK(p.d(i, j).is_zero());
                    if (D_forced_zero(i, j)) CHECK(p.D(i, j).is_zero());
                    if (!p.d(i, j).is_zero()) d_used[i][j] = true;
                    if (!p.D(i, j).is_zero()) D_used[i][j] = true;
                }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!d_forced_zero(i, j)) CHECK(d_used[i][j]);
                if (!D_forced_zero(i, j)) CHECK(D_used[i][j]);
            }
    }
}

TEST_CASE("inner maps") {
    LeibnizAlgebra L = l_n(4);
    Mat ad_e2 = inner_derivation(L, e(4, 1));
    Mat expected(4, 4);
    expected(0, 0) = Rat(1);
    CHECK(ad_e2 == expected);
    CHECK(right_adjoint(L, e(4, 1)) == Mat(4, 4));

    auto zero_pair = inner_biderivation(L, Vec(4));
    CHECK(zero_pair.d == Mat(4, 4));
    CHECK(zero_pair.D == Mat(4, 4));

    CHECK(inner_span(L).dim() == L.dim() - left_center(L).dim());
    CHECK(inner_span(L).dim() == 1);

    for (const auto& A : {l_n(4), s2(), kronecker(2)}) {
        Subspace der = derivation_space(A);
        Subspace bider = biderivation_space(A);
        for (std::size_t i = 0; i < A.dim(); ++i) {
            CHECK(der.contains(flatten(inner_derivation(A, A.basis_vector(i)))));
            CHECK(bider.contains(flatten_pair(inner_biderivation(A, A.basis_vector(i)))));
        }
    }
}

TEST_CASE("map-space brackets") {
    Mat d1{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}};
    Mat d2{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}};
    CHECK(der_bracket(d1, d1) == Mat(2, 2));
    CHECK(der_bracket(d1, d2) == d2);

    // x -> (ad_x, Ad_x) is a homomorphism onto inner biderivations
    for (const auto& L : {l_n(4), s2()}) {
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) {
                auto lhs = bider_bracket(inner_biderivation(L, L.basis_vector(i)),
                                         inner_biderivation(L, L.basis_vector(j)));
                auto rhs = inner_biderivation(L, L.bracket_basis(i, j));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("Der is a Lie algebra and Inn an ideal of it") {
    for (const auto& L : {l_n(4), direct_sum(s1(), abelian(2)), s2()}) {
        Subspace der = derivation_space(L);
        Subspace inn = inner_span(L);
        const std::size_t n = L.dim();
        for (std::size_t a = 0; a < der.dim(); ++a)
            for (std::size_t b = 0; b < der.dim(); ++b) {
                Mat da = unflatten(der.basis_vector(a), n);
                Mat db = unflatten(der.basis_vector(b), n);
                CHECK(der.contains(flatten(der_bracket(da, db))));
            }
        for (std::size_t a = 0; a < der.dim(); ++a)
            for (std::size_t i = 0; i < n; ++i) {
                Mat da = unflatten(der.basis_vector(a), n);
                Mat ad = inner_derivation(L, L.basis_vector(i));
                CHECK(inn.contains(flatten(der_bracket(da, ad))));
            }
    }
}

TEST_CASE("ADer is a Der-module") {
    for (const auto& L : {l_n(4), s2(), kronecker(2)}) {
        Subspace der = derivation_space(L);
        Subspace ader = antiderivation_space(L);
        const std::size_t n = L.dim();
        std::mt19937 rng(3);
        std::uniform_int_distribution<std::size_t> pick_d(0, der.dim() - 1),
            pick_a(0, ader.dim() - 1);
        for (int t = 0; t < 20; ++t) {
            Mat d = unflatten(der.basis_vector(pick_d(rng)), n);
            Mat D = unflatten(ader.basis_vector(pick_a(rng)), n);
            CHECK(ader.contains(flatten(d * D - D * d)));
        }
    }
}

TEST_CASE("Bider closes and satisfies the left Leibniz identity") {
    for (const auto& L : {l_n(3), s2()}) {
        Subspace bider = biderivation_space(L);
        const std::size_t n = L.dim();
        std::vector<BiderivationPair> basis;
        for (std::size_t a = 0; a < bider.dim(); ++a)
            basis.push_back(unflatten_pair(bider.basis_vector(a), n));
        for (const auto& p : basis)
            for (const auto& q : basis)
                CHECK(bider.contains(flatten_pair(bider_bracket(p, q))));

        std::mt19937 rng(8);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        for (int t = 0; t < 30; ++t) {
            const auto &p = basis[pick(rng)], &q = basis[pick(rng)], &r = basis[pick(rng)];
            auto lhs = bider_bracket(p, bider_bracket(q, r));
            auto rhs1 = bider_bracket(bider_bracket(p, q), r);
            auto rhs2 = bider_bracket(q, bider_bracket(p, r));
            CHECK(lhs.d == rhs1.d + rhs2.d);
            CHECK(lhs.D == rhs1.D + rhs2.D);
        }
    }
}

TEST_CASE("automorphism membership") {
    LeibnizAlgebra L = l_n(4);
    CHECK(is_automorphism(L, Mat::identity(4)));

    // Aut(L_n) shape: beta != 0, unit at (2,2), b-column, invertible block B
    Mat P(4, 4);
    P(0, 0) = Rat(3, 2);
    P(1, 1) = Rat(1);
    P(2, 1) = Rat(2);
    P(3, 1) = Rat(-1, 3);
    P(2, 2) = Rat(1);
    P(2, 3) = Rat(1);
    P(3, 3) = Rat(2);
    CHECK(is_automorphism(L, P));

    Mat bad = P;
    bad(1, 1) = Rat(2);
    CHECK(!is_automorphism(L, bad));

    CHECK(!is_automorphism(L, Mat(4, 4)));  // singular
    CHECK_THROWS_AS(is_automorphism(L, Mat(3, 3)), std::invalid_argument);
}

TEST_CASE("automorphisms of the Aut shape close under product and inverse") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-3, 3);
    const std::size_t n = 5;
    LeibnizAlgebra L = l_n(n);
    auto sample_shape = [&]() {
        for (;;) {
            Mat P(n, n);
            P(1, 1) = Rat(1);
            int beta = num(rng);
            if (beta == 0) continue;
            P(0, 0) = Rat(beta);
            for (std::size_t i = 2; i < n; ++i) {
                P(i, 1) = Rat(num(rng));
                for (std::size_t j = 2; j < n; ++j) P(i, j) = Rat(num(rng));
            }
            if (inverse(P)) return P;
        }
    };
    for (int t = 0; t < 25; ++t) {
        Mat A = sample_shape(), B = sample_shape();
        CHECK(is_automorphism(L, A));
        CHECK(is_automorphism(L, A * B));
        CHECK(is_automorphism(L, *inverse(A)));
    }
}
