// Independent reference computations for tests. Deliberately naive: plain
// machine integers, floating-point elimination, exhaustive scans.
#pragma once

#include "nnirank2/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace support {

using nnirank2::Int;
using nnirank2::IntMatrix;
using nnirank2::PlanePoint;
using ll = long;
using Grid = std::vector<std::vector<ll>>;

inline Grid to_grid(const IntMatrix& m) {
    Grid g(m.rows(), std::vector<ll>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            g[i][j] = m(i, j).get_si();
    return g;
}

inline IntMatrix from_grid(const Grid& g) {
    IntMatrix m(g.size(), g[0].size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[0].size(); ++j)
            m(i, j) = g[i][j];
    return m;
}

// Laplace expansion.
inline ll det_laplace(const Grid& a) {
    const std::size_t n = a.size();
    if (n == 1)
        return a[0][0];
    ll s = 0;
    for (std::size_t c = 0; c < n; ++c) {
        Grid minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<ll> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(a[i][j]);
            minor.push_back(row);
        }
        s += (c % 2 ? -1 : 1) * a[0][c] * det_laplace(minor);
    }
    return s;
}

// Gaussian elimination with partial pivoting in long double.
inline std::size_t rank_float(const Grid& g) {
    std::vector<std::vector<long double>> a;
    long double scale = 1;
    for (const auto& r : g) {
        a.emplace_back(r.begin(), r.end());
        for (ll x : r)
            scale = std::max(scale, std::fabs(static_cast<long double>(x)));
    }
    const std::size_t n = a.size(), m = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m && rank < n; ++c) {
        std::size_t piv = rank;
        for (std::size_t i = rank; i < n; ++i)
            if (std::fabs(a[i][c]) > std::fabs(a[piv][c]))
                piv = i;
        if (std::fabs(a[piv][c]) < 1e-9L * scale)
            continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < n; ++i) {
            const long double f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < m; ++j)
                a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline ll cross(ll ax, ll ay, ll bx, ll by) { return ax * by - ay * bx; }

// Lattice points of the triangle cut out by the four half-planes, found by
// scanning the box [0, u.x] x [0, u.y].
inline std::vector<PlanePoint> triangle_scan(ll ux, ll uy, ll vx, ll vy, ll cx, ll cy) {
    std::vector<PlanePoint> out;
    for (ll x = 0; x <= ux; ++x)
        for (ll y = 0; y <= uy; ++y) {
            if (x == 0 && y == 0)
                continue;
            if (cross(1, 0, x, y) >= 0 && cross(x, y, ux, uy) >= 0 && cross(vx, vy, ux - x, uy - y) >= 0 &&
                cross(ux - x, uy - y, cx, cy) >= 0)
                out.emplace_back(x, y);
        }
    return out;
}

// k a + l b = p with k, l >= 0, by a double loop.
inline bool combo_exists(ll px, ll py, ll ax, ll ay, ll bx, ll by, ll bound) {
    for (ll k = 0; k <= bound; ++k)
        for (ll l = 0; l <= bound; ++l)
            if (k * ax + l * bx == px && k * ay + l * by == py)
                return true;
    return false;
}

// Random nonnegative n x m matrix of rank exactly 2: product of random
// nonnegative factors, retried until the rank is 2.
inline IntMatrix random_rank2(std::mt19937_64& rng, std::size_t n, std::size_t m, ll hi) {
    std::uniform_int_distribution<ll> d(0, hi);
    for (;;) {
        Grid b(n, std::vector<ll>(2)), c(2, std::vector<ll>(m));
        for (auto& r : b)
            for (auto& x : r)
                x = d(rng);
        for (auto& r : c)
            for (auto& x : r)
                x = d(rng);
        Grid a(n, std::vector<ll>(m, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a[i][j] = b[i][0] * c[0][j] + b[i][1] * c[1][j];
        if (rank_float(a) == 2)
            return from_grid(a);
    }
}

// Random nonnegative rank-2 matrix that need not factor: columns are random
// points of the cone 0 <= y <= 2x, rows evaluate the forms x, y, 2x - y and
// further nonnegative combinations of them, in shuffled order.
inline IntMatrix random_rank2_rows(std::mt19937_64& rng, std::size_t n, std::size_t m, ll hi) {
    std::uniform_int_distribution<ll> px(1, hi), w(0, 2);
    for (;;) {
        std::vector<std::pair<ll, ll>> pts(m);
        for (auto& [x, y] : pts) {
            x = px(rng);
            y = std::uniform_int_distribution<ll>(0, 2 * x)(rng);
        }
        std::vector<std::array<ll, 2>> forms{{1, 0}, {0, 1}, {2, -1}};
        while (forms.size() < n) {
            const ll p = w(rng), q = w(rng), r = w(rng);
            forms.push_back({p + 2 * r, q - r});
        }
        std::shuffle(forms.begin(), forms.end(), rng);
        forms.resize(n);
        Grid a(n, std::vector<ll>(m));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                a[i][j] = forms[i][0] * pts[j].first + forms[i][1] * pts[j].second;
        if (rank_float(a) == 2)
            return from_grid(a);
    }
}

} // namespace support
