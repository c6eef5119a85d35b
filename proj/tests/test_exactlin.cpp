#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leibniz/matrix.hpp"
#include "leibniz/subspace.hpp"

using namespace leibniz;

TEST_CASE("rationals are always reduced") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(2, 4).str() == "1/2");
    CHECK(Rat(1, -2).str() == "-1/2");
    CHECK(Rat(-3, -6).str() == "1/2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
    CHECK(Rat::parse("4/8") == Rat(1, 2));
    CHECK(Rat::parse("-7/21").str() == "-1/3");
    CHECK(Rat::parse("5") == Rat(5));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
    CHECK(Rat(7, 2).to_double() == doctest::Approx(3.5));
}

TEST_CASE("rational arithmetic stays exact under long chains") {
    // 1/1 + 1/2 + ... accumulates huge denominators; exactness means
    // subtracting the terms back recovers zero on the nose.
    Rat acc(0);
    for (long k = 1; k <= 40; ++k) acc += Rat(1, k);
    for (long k = 40; k >= 1; --k) acc -= Rat(1, k);
    CHECK(acc.is_zero());
}

TEST_CASE("rref basic cases") {
    Mat id2 = Mat::identity(2);
    auto r1 = rref(id2);
    CHECK(r1.m == id2);
    CHECK(r1.rank == 2);

    Mat dep{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    auto r2 = rref(dep);
    CHECK(r2.rank == 1);
    CHECK(r2.m == Mat{{Rat(1), Rat(2)}, {Rat(0), Rat(0)}});

    Mat perm{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    auto r3 = rref(perm);
    CHECK(r3.rank == 2);
    CHECK(r3.m == Mat::identity(2));
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<std::size_t> dims(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        Mat m(dims(rng), dims(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Rat(num(rng), den(rng));
        auto r = rref(m);
        auto rr = rref(r.m);
        CHECK(rr.m == r.m);
        CHECK(rr.rank == r.rank);
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(Mat::identity(3)).dim() == 0);
    CHECK(kernel_basis(Mat(2, 3)).dim() == 3);

    Mat m{{Rat(1), Rat(1), Rat(0)}};
    Subspace k = kernel_basis(m);
    CHECK(k.dim() == 2);
    CHECK(k.contains(Vec{Rat(1), Rat(-1), Rat(0)}));
    CHECK(k.contains(Vec{Rat(0), Rat(0), Rat(1)}));
    // every returned basis vector really is in the null space
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(leibniz::is_zero(m * k.basis_vector(i)));
}

TEST_CASE("kernel vectors annihilate on random matrices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<std::size_t> dims(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        Mat m(dims(rng), dims(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Rat(num(rng));
        Subspace k = kernel_basis(m);
        CHECK(k.dim() == m.cols() - rref(m).rank);
        for (std::size_t i = 0; i < k.dim(); ++i) CHECK(leibniz::is_zero(m * k.basis_vector(i)));
    }
}

TEST_CASE("solve") {
    Vec rhs{Rat(3), Rat(-2)};
    auto x = solve(Mat::identity(2), rhs);
    REQUIRE(x.has_value());
    CHECK(*x == rhs);

    Mat under{{Rat(1), Rat(1)}};
    auto y = solve(under, Vec{Rat(2)});
    REQUIRE(y.has_value());
    CHECK(under * *y == Vec{Rat(2)});

    Mat over{{Rat(1)}, {Rat(1)}};
    CHECK(!solve(over, Vec{Rat(1), Rat(2)}).has_value());
}

TEST_CASE("inverse") {
    Mat m{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Mat::identity(2));

    Mat sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(!inverse(sing).has_value());
}

TEST_CASE("subspace canonical form and set operations") {
    // two different spanning sets of the same plane canonicalize identically
    Subspace a = Subspace::span_of(3, {Vec{Rat(1), Rat(1), Rat(0)}, Vec{Rat(0), Rat(1), Rat(1)}});
    Subspace b = Subspace::span_of(3, {Vec{Rat(2), Rat(3), Rat(1)}, Vec{Rat(1), Rat(2), Rat(1)}});
    CHECK(a == b);

    Subspace x_axis = Subspace::span_of(2, {Vec{Rat(1), Rat(0)}});
    Subspace y_axis = Subspace::span_of(2, {Vec{Rat(0), Rat(1)}});
    CHECK(x_axis + x_axis == x_axis);
    CHECK(intersect(x_axis, y_axis).is_zero());
    CHECK(!x_axis.contains(Vec{Rat(0), Rat(1)}));
    CHECK((x_axis + y_axis).is_full());

    CHECK_THROWS_AS(x_axis + Subspace::full(3), std::invalid_argument);
    CHECK_THROWS_AS(x_axis.contains(Vec{Rat(1)}), std::invalid_argument);
}

TEST_CASE("grassmann identity on random subspaces") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<std::size_t> dims(1, 8);
    std::uniform_int_distribution<std::size_t> nvec(0, 6);
    auto random_subspace = [&](std::size_t ambient) {
        std::vector<Vec> gens(nvec(rng), Vec(ambient));
        for (auto& g : gens)
            for (auto& e : g) e = Rat(num(rng));
        return Subspace::span_of(ambient, gens);
    };
    for (int trial = 0; trial < 220; ++trial) {
        std::size_t ambient = dims(rng);
        Subspace a = random_subspace(ambient);
        Subspace b = random_subspace(ambient);
        Subspace s = a + b;
        Subspace m = intersect(a, b);
        CHECK(a.dim() + b.dim() == s.dim() + m.dim());
        CHECK(s.contains_subspace(a));
        CHECK(s.contains_subspace(b));
        CHECK(a.contains_subspace(m));
        CHECK(b.contains_subspace(m));
    }
}
