#include "nnirank2/exact.hpp"

#include <algorithm>
#include <ostream>

namespace nnirank2 {

namespace {

// Nearest-integer quotient round(a / b), halves rounded up.
Int round_div(Int a, Int b) {
    if (sgn(b) < 0) {
        a = -a;
        b = -b;
    }
    Int q;
    Int num = 2 * a + b;
    Int den = 2 * b;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

void axpy(IntVector& y, const Int& q, const IntVector& x) {
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += q * x[i];
}

} // namespace

Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0)
        throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string to_string(const Rat& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw InputError("matrix must have at least one row and one column");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InputError("ragged matrix literal");
        std::size_t j = 0;
        for (long v : r)
            (*this)(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty())
        throw InputError("matrix must have at least one row");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw InputError("ragged rows");
        m.set_row(i, rows[i]);
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
    if (cols.empty())
        throw InputError("matrix must have at least one column");
    IntMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_)
            throw InputError("ragged columns");
        m.set_col(j, cols[j]);
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_row(std::size_t i, std::span<const Int> v) {
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

void IntMatrix::set_col(std::size_t j, std::span<const Int> v) {
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> idx) const {
    IntMatrix s(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k)
            s(i, k) = (*this)(i, idx[k]);
    return s;
}

bool IntMatrix::is_nonnegative() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return sgn(v) >= 0; });
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return sgn(v) == 0; });
}

Int IntMatrix::max_abs() const {
    Int m = 0;
    for (const auto& v : data_)
        if (abs(v) > m)
            m = abs(v);
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw InputError("matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Int> x) {
    if (a.cols() != x.size())
        throw InputError("matrix-vector dimension mismatch");
    IntVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os;
}

bool lex_less(const PlanePoint& a, const PlanePoint& b) {
    if (a.x != b.x)
        return a.x < b.x;
    return a.y < b.y;
}

std::ostream& operator<<(std::ostream& os, const PlanePoint& p) {
    return os << '(' << p.x << ',' << p.y << ')';
}

// ---------------------------------------------------------------------------
// Number theory

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Bezout ext_gcd(const Int& a, const Int& b) {
    if (sgn(a) == 0 && sgn(b) == 0)
        throw InputError("ext_gcd(0, 0) is undefined");
    // Classical iterative Euclid on (|a|, |b|); signs restored at the end.
    Int r0 = abs(a), r1 = abs(b);
    Int s0 = 1, s1 = 0;
    Int t0 = 0, t1 = 1;
    while (sgn(r1) != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (sgn(a) < 0)
        s0 = -s0;
    if (sgn(b) < 0)
        t0 = -t0;
    return {r0, s0, t0};
}

Int content(std::span<const Int> v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntVector primitive(std::span<const Int> v) {
    Int g = content(v);
    if (sgn(g) == 0)
        throw InputError("primitive of the zero vector");
    IntVector out(v.begin(), v.end());
    if (g != 1)
        for (auto& x : out)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

PlanePoint primitive(const PlanePoint& p) {
    Int g = gcd(p.x, p.y);
    if (sgn(g) == 0)
        throw InputError("primitive of the zero vector");
    if (g == 1)
        return p;
    return {Int(p.x / g), Int(p.y / g)};
}

Int cross2(const PlanePoint& p, const PlanePoint& q) { return p.x * q.y - p.y * q.x; }

// ---------------------------------------------------------------------------
// Elimination

std::size_t rank_exact(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t n = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t p = r;
        while (p < n && sgn(m(p, c)) == 0)
            ++p;
        if (p == n)
            continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j)
                swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw InputError("determinant of a non-square matrix");
    IntMatrix m = a;
    const std::size_t n = m.rows();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(m(p, k)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            for (std::size_t j = k; j < n; ++j)
                swap(m(p, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SnfWork {
    IntMatrix W, S, T;
    std::size_t n, m;

    explicit SnfWork(const IntMatrix& a)
        : W(a), S(IntMatrix::identity(a.rows())), T(IntMatrix::identity(a.cols())), n(a.rows()), m(a.cols()) {}

    // row_i -= q * row_t
    void row_sub(std::size_t i, std::size_t t, const Int& q) {
        for (std::size_t j = 0; j < m; ++j)
            if (sgn(W(t, j)) != 0)
                W(i, j) -= q * W(t, j);
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(S(k, i)) != 0)
                S(k, t) += q * S(k, i);
    }
    // col_j -= q * col_t
    void col_sub(std::size_t j, std::size_t t, const Int& q) {
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(W(i, t)) != 0)
                W(i, j) -= q * W(i, t);
        for (std::size_t k = 0; k < m; ++k)
            if (sgn(T(j, k)) != 0)
                T(t, k) += q * T(j, k);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < m; ++j)
            swap(W(a, j), W(b, j));
        for (std::size_t k = 0; k < n; ++k)
            swap(S(k, a), S(k, b));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < n; ++i)
            swap(W(i, a), W(i, b));
        for (std::size_t k = 0; k < m; ++k)
            swap(T(a, k), T(b, k));
    }
    // row_t += row_i
    void row_add(std::size_t t, std::size_t i) {
        for (std::size_t j = 0; j < m; ++j)
            W(t, j) += W(i, j);
        for (std::size_t k = 0; k < n; ++k)
            S(k, i) -= S(k, t);
    }
    void negate_row(std::size_t t) {
        for (std::size_t j = 0; j < m; ++j)
            W(t, j) = -W(t, j);
        for (std::size_t k = 0; k < n; ++k)
            S(k, t) = -S(k, t);
    }
};

} // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    SnfWork w(a);
    const std::size_t n = w.n, m = w.m;
    std::size_t t = 0;
    for (; t < std::min(n, m); ++t) {
        // Smallest nonzero entry of the trailing block.
        std::size_t pi = n, pj = m;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j)
                if (sgn(w.W(i, j)) != 0 && (pi == n || abs(w.W(i, j)) < abs(w.W(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == n)
            break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            for (std::size_t i = t + 1; i < n; ++i)
                if (sgn(w.W(i, t)) != 0)
                    w.row_sub(i, t, round_div(w.W(i, t), w.W(t, t)));
            for (std::size_t j = t + 1; j < m; ++j)
                if (sgn(w.W(t, j)) != 0)
                    w.col_sub(j, t, round_div(w.W(t, j), w.W(t, t)));

            // Any remainder left in the pivot row/column is smaller than the
            // pivot; move the smallest one into the pivot position.
            std::size_t ri = n, cj = m;
            Int best;
            for (std::size_t i = t + 1; i < n; ++i)
                if (sgn(w.W(i, t)) != 0 && (ri == n || abs(w.W(i, t)) < best)) {
                    ri = i;
                    best = abs(w.W(i, t));
                }
            for (std::size_t j = t + 1; j < m; ++j)
                if (sgn(w.W(t, j)) != 0 && ((ri == n && cj == m) || abs(w.W(t, j)) < best)) {
                    cj = j;
                    ri = n;
                    best = abs(w.W(t, j));
                }
            if (cj != m) {
                w.swap_cols(t, cj);
                continue;
            }
            if (ri != n) {
                w.swap_rows(t, ri);
                continue;
            }

            // Divisibility of the trailing block by the pivot.
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < m; ++j)
                    if (!mpz_divisible_p(w.W(i, j).get_mpz_t(), w.W(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == n)
                break;
            w.row_add(t, bad);
        }
        if (sgn(w.W(t, t)) < 0)
            w.negate_row(t);
    }
    return {std::move(w.S), std::move(w.W), std::move(w.T), t};
}

// ---------------------------------------------------------------------------
// Lattices

std::pair<IntVector, IntVector> reduce_basis_rank2(IntVector a, IntVector b) {
    if (a.size() != b.size())
        throw InputError("basis vectors of different length");
    Int na = dot(a, a), nb = dot(b, b), ab = dot(a, b);
    if (na * nb == ab * ab)
        throw InputError("reduce_basis_rank2: vectors are linearly dependent");
    if (nb < na) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    for (;;) {
        Int mu = round_div(dot(a, b), na);
        if (sgn(mu) != 0) {
            axpy(b, -mu, a);
            nb = dot(b, b);
        }
        if (nb < na) {
            std::swap(a, b);
            std::swap(na, nb);
            continue;
        }
        break;
    }
    return {std::move(a), std::move(b)};
}

std::vector<IntVector> hermite_row_basis(const std::vector<IntVector>& rows) {
    std::vector<IntVector> m;
    m.reserve(rows.size());
    for (const auto& r : rows)
        if (std::any_of(r.begin(), r.end(), [](const Int& v) { return sgn(v) != 0; }))
            m.push_back(r);
    if (m.empty())
        return {};
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t k = r + 1; k < m.size(); ++k) {
            if (sgn(m[k][c]) == 0)
                continue;
            if (mpz_divisible_p(m[k][c].get_mpz_t(), m[r][c].get_mpz_t())) {
                Int q = m[k][c] / m[r][c];
                axpy(m[k], -q, m[r]);
                continue;
            }
            Bezout bz = ext_gcd(m[r][c], m[k][c]);
            Int a = m[r][c] / bz.g, b = m[k][c] / bz.g;
            IntVector nr(cols), nk(cols);
            for (std::size_t j = c; j < cols; ++j) {
                nr[j] = bz.x * m[r][j] + bz.y * m[k][j];
                nk[j] = a * m[k][j] - b * m[r][j];
            }
            m[r] = std::move(nr);
            m[k] = std::move(nk);
        }
        if (sgn(m[r][c]) < 0)
            for (auto& v : m[r])
                v = -v;
        for (std::size_t k = 0; k < r; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[k][c].get_mpz_t(), m[r][c].get_mpz_t());
            if (sgn(q) != 0)
                axpy(m[k], -q, m[r]);
        }
        ++r;
        // Drop rows that became zero so later columns scan less.
        auto is_zero = [](const IntVector& v) {
            return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
        };
        m.erase(std::remove_if(m.begin() + static_cast<std::ptrdiff_t>(r), m.end(), is_zero), m.end());
    }
    m.resize(r);
    return m;
}

MinorChoice nonzero_row_minor(const IntMatrix& b) {
    if (b.cols() != 2)
        throw InputError("expected a matrix with two columns");
    std::size_t i = 0;
    while (i < b.rows() && sgn(b(i, 0)) == 0 && sgn(b(i, 1)) == 0)
        ++i;
    for (std::size_t j = i + 1; j < b.rows(); ++j) {
        Int det = b(i, 0) * b(j, 1) - b(i, 1) * b(j, 0);
        if (sgn(det) != 0)
            return {i, j, det};
    }
    throw RankError("two-column matrix is rank deficient");
}

Int minor_gcd(const IntMatrix& b) {
    if (b.cols() != 2)
        throw InputError("expected a matrix with two columns");
    Int g = 0;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = i + 1; j < b.rows(); ++j) {
            Int det = b(i, 0) * b(j, 1) - b(i, 1) * b(j, 0);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        }
    return g;
}

std::optional<std::pair<Rat, Rat>> solve2(const IntMatrix& b, std::span<const Int> y) {
    if (y.size() != b.rows())
        throw InputError("solve2: right-hand side has the wrong length");
    MinorChoice mc = nonzero_row_minor(b);
    const std::size_t i = mc.i, j = mc.j;
    Int n1 = y[i] * b(j, 1) - y[j] * b(i, 1);
    Int n2 = b(i, 0) * y[j] - b(j, 0) * y[i];
    for (std::size_t k = 0; k < b.rows(); ++k)
        if (b(k, 0) * n1 + b(k, 1) * n2 != mc.det * y[k])
            return std::nullopt;
    return std::make_pair(make_rat(n1, mc.det), make_rat(n2, mc.det));
}

std::pair<std::size_t, std::size_t> independent_column_pair(const IntMatrix& a) {
    std::size_t p = 0;
    auto nonzero_col = [&](std::size_t j) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (sgn(a(i, j)) != 0)
                return true;
        return false;
    };
    while (p < a.cols() && !nonzero_col(p))
        ++p;
    if (p == a.cols())
        throw RankError("matrix is zero");
    std::size_t i0 = 0;
    while (sgn(a(i0, p)) == 0)
        ++i0;
    for (std::size_t q = p + 1; q < a.cols(); ++q)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i0, p) * a(i, q) != a(i0, q) * a(i, p))
                return {p, q};
    throw RankError("matrix has column rank below 2");
}

IntMatrix inverse_unimodular2(const IntMatrix& t) {
    if (t.rows() != 2 || t.cols() != 2)
        throw InputError("expected a 2x2 matrix");
    Int det = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
    if (abs(det) != 1)
        throw InputError("matrix is not unimodular");
    IntMatrix inv(2, 2);
    inv(0, 0) = det * t(1, 1);
    inv(0, 1) = -det * t(0, 1);
    inv(1, 0) = -det * t(1, 0);
    inv(1, 1) = det * t(0, 0);
    return inv;
}

PlanePoint apply2(const IntMatrix& t, const PlanePoint& p) {
    return {t(0, 0) * p.x + t(0, 1) * p.y, t(1, 0) * p.x + t(1, 1) * p.y};
}

} // namespace nnirank2
