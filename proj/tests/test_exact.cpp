#include "nnirank2/exact.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nnirank2;

TEST_CASE("ext_gcd satisfies the Bezout identity") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int it = 0; it < 500; ++it) {
        const Int a = d(rng), b = d(rng);
        if (a == 0 && b == 0)
            continue;
        const Bezout z = ext_gcd(a, b);
        CHECK(z.g == std::gcd(a.get_si(), b.get_si()));
        CHECK(a * z.x + b * z.y == z.g);
    }
    CHECK_THROWS_AS(ext_gcd(0, 0), InputError);
    const Bezout z = ext_gcd(240, 46);
    CHECK(z.g == 2);
}

TEST_CASE("primitive vectors") {
    const Int v[] = {6, -9, 12};
    CHECK(primitive(v) == IntVector{2, -3, 4});
    CHECK(primitive(PlanePoint(4, 6)) == PlanePoint(2, 3));
    const Int z[] = {0, 0};
    CHECK_THROWS_AS(primitive(z), InputError);
}

TEST_CASE("rank agrees with floating elimination") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-6, 6);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = dim(rng), m = dim(rng);
        support::Grid g(n, std::vector<long>(m));
        for (auto& r : g)
            for (auto& x : r)
                x = d(rng);
        // Force dependencies now and then.
        if (n > 2 && it % 3 == 0)
            for (std::size_t j = 0; j < m; ++j)
                g[2][j] = g[0][j] - 2 * g[1][j];
        CHECK(rank_exact(support::from_grid(g)) == support::rank_float(g));
    }
    CHECK(rank_exact(IntMatrix{{2, 0, 3}, {1, 1, 4}, {1, 3, 9}}) == 2);
    CHECK(rank_exact(IntMatrix{{2, 0, 3}, {1, 1, 4}, {1, 3, 8}}) == 3);
    CHECK(rank_exact(IntMatrix{{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("determinant agrees with Laplace expansion") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int n = 1; n <= 5; ++n)
        for (int it = 0; it < 40; ++it) {
            support::Grid g(n, std::vector<long>(n));
            for (auto& r : g)
                for (auto& x : r)
                    x = d(rng);
            CHECK(determinant(support::from_grid(g)) == support::det_laplace(g));
        }
}

TEST_CASE("Smith normal form reconstructs with unimodular factors") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-20, 20);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = dim(rng), m = dim(rng);
        IntMatrix a(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a(i, j) = d(rng);
        const SnfResult s = smith_normal_form(a);
        REQUIRE(s.S * s.D * s.T == a);
        CHECK(abs(support::det_laplace(support::to_grid(s.S))) == 1);
        CHECK(abs(support::det_laplace(support::to_grid(s.T))) == 1);
        CHECK(s.rank == rank_exact(a));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j)
                    CHECK(s.D(i, j) == 0);
        for (std::size_t k = 0; k + 1 < std::min(n, m); ++k) {
            CHECK(sgn(s.D(k, k)) >= 0);
            if (s.D(k, k) != 0)
                CHECK(mpz_divisible_p(s.D(k + 1, k + 1).get_mpz_t(), s.D(k, k).get_mpz_t()));
        }
    }
}

TEST_CASE("Smith normal form of a known matrix") {
    // diag(2, 6) up to units
    const SnfResult s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 6);
    CHECK(s.D(2, 2) == 12);
}

namespace {

// v is an integer combination of (b1, b2), checked by scanning small coefficients.
bool in_span_small(const IntVector& v, const IntVector& b1, const IntVector& b2) {
    for (long x = -60; x <= 60; ++x)
        for (long y = -60; y <= 60; ++y) {
            bool ok = true;
            for (std::size_t k = 0; k < v.size() && ok; ++k)
                ok = x * b1[k] + y * b2[k] == v[k];
            if (ok)
                return true;
        }
    return false;
}

Int norm2(const IntVector& v) {
    Int s = 0;
    for (const auto& x : v)
        s += x * x;
    return s;
}

} // namespace

TEST_CASE("Lagrange-Gauss preserves the lattice and reduces") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> d(-12, 12);
    for (int it = 0; it < 200; ++it) {
        IntVector v1(3), v2(3);
        for (auto& x : v1)
            x = d(rng);
        for (auto& x : v2)
            x = d(rng);
        if (rank_exact(IntMatrix::from_rows({v1, v2})) < 2) {
            CHECK_THROWS_AS(reduce_basis_rank2(v1, v2), InputError);
            continue;
        }
        auto [a1, a2] = reduce_basis_rank2(v1, v2);
        CHECK(in_span_small(v1, a1, a2));
        CHECK(in_span_small(v2, a1, a2));
        CHECK(in_span_small(a1, v1, v2));
        CHECK(in_span_small(a2, v1, v2));
        CHECK(norm2(a1) <= norm2(a2));
        IntVector s(3), t(3);
        for (int k = 0; k < 3; ++k) {
            s[k] = a2[k] + a1[k];
            t[k] = a2[k] - a1[k];
        }
        CHECK(norm2(a2) <= norm2(s));
        CHECK(norm2(a2) <= norm2(t));
    }
}

TEST_CASE("Hermite row basis is canonical for the lattice") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int it = 0; it < 200; ++it) {
        IntVector r1(4), r2(4);
        for (auto& x : r1)
            x = d(rng);
        for (auto& x : r2)
            x = d(rng);
        // Same lattice written with a random unimodular change of generators.
        const long k = d(rng);
        IntVector s1(4), s2(4);
        for (int j = 0; j < 4; ++j) {
            s1[j] = r1[j] + k * r2[j];
            s2[j] = -r2[j];
        }
        CHECK(hermite_row_basis({r1, r2}) == hermite_row_basis({s2, s1, r1}));
        IntVector d1 = r1;
        for (auto& x : d1)
            x *= 2;
        if (content(r1) != 0 && rank_exact(IntMatrix::from_rows({r1, r2})) == 2)
            CHECK(hermite_row_basis({r1, r2}) != hermite_row_basis({d1, r2}));
    }
    CHECK(hermite_row_basis({IntVector{0, 0}}).empty());
}

TEST_CASE("solve2 is exact and detects inconsistency") {
    const IntMatrix b{{1, 0}, {1, 2}, {3, 1}};
    const Int y[] = {2, 3, 6}; // 2 e1 + 1/2 e2 would give (2, 3, 6.5)
    CHECK_FALSE(solve2(b, y).has_value());
    const IntMatrix c{{2, 0}, {0, 2}, {2, 2}};
    const Int y2[] = {1, 3, 4};
    auto s = solve2(c, y2);
    REQUIRE(s);
    CHECK(s->first == Rat(1, 2));
    CHECK(s->second == Rat(3, 2));
    CHECK_THROWS_AS(solve2(IntMatrix{{1, 2}, {2, 4}, {3, 6}}, y2), RankError);
}

TEST_CASE("minor gcd detects saturation") {
    CHECK(minor_gcd(IntMatrix{{1, 0}, {0, 1}, {1, 1}}) == 1);
    CHECK(minor_gcd(IntMatrix{{2, 0}, {0, 1}, {2, 1}}) == 2);
}

TEST_CASE("unimodular inverse") {
    const IntMatrix t{{2, 1}, {1, 1}};
    CHECK(t * inverse_unimodular2(t) == IntMatrix::identity(2));
    CHECK_THROWS_AS(inverse_unimodular2(IntMatrix{{2, 0}, {0, 1}}), InputError);
}

TEST_CASE("matrix shape checks") {
    CHECK_THROWS(IntMatrix(0, 2));
    CHECK_THROWS((IntMatrix{{1, 2}, {3}}));
    const IntMatrix m{{1, 2, 3}, {4, 5, 6}};
    CHECK(m.transpose().transpose() == m);
    CHECK(m.max_abs() == 6);
}
