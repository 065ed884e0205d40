#include "nnirank2/diagram.hpp"

#include <stdexcept>
#include <string>

namespace nnirank2 {

namespace {

struct PlaneRays {
    std::array<PlanePoint, 2> dirs;
    std::array<std::size_t, 2> rows;
};

// Extreme directions of {y : basis * y >= 0}, given the plane coordinates of
// the reference columns xp, xq. Each nonzero row k defines the form
// w_k = (basis(k,0), basis(k,1)), positive at s = xp + xq. Its zero line meets
// the half-plane left of s in (-w1, w0) and the right half in (w1, -w0); the
// cone is bounded by the left direction closest to s and the right one
// closest to s.
PlaneRays extreme_directions(const IntMatrix& basis, const PlanePoint& xp, const PlanePoint& xq) {
    const PlanePoint s = xp + xq;
    std::optional<std::size_t> left_row, right_row;
    PlanePoint left, right;
    for (std::size_t k = 0; k < basis.rows(); ++k) {
        const Int& w0 = basis(k, 0);
        const Int& w1 = basis(k, 1);
        if (sgn(w0) == 0 && sgn(w1) == 0)
            continue;
        if (sgn(w0 * s.x + w1 * s.y) <= 0)
            throw InputError("matrix has a row that is negative on its own columns");
        PlanePoint l(Int(-w1), w0);
        PlanePoint r(w1, Int(-w0));
        if (!left_row || sgn(cross2(l, left)) > 0) {
            left = l;
            left_row = k;
        }
        if (!right_row || sgn(cross2(r, right)) < 0) {
            right = r;
            right_row = k;
        }
    }
    if (!left_row)
        throw RankError("matrix is zero");
    // The ray on the side of xq comes first.
    if (sgn(cross2(xp, xq)) > 0)
        return {{primitive(left), primitive(right)}, {*left_row, *right_row}};
    return {{primitive(right), primitive(left)}, {*right_row, *left_row}};
}

void require_rank2_nonnegative(const IntMatrix& a) {
    if (!a.is_nonnegative())
        throw InputError("matrix has negative entries");
    const std::size_t r = rank_exact(a);
    if (r != 2)
        throw RankError("matrix has rank " + std::to_string(r) + ", expected 2");
}

} // namespace

bool in_cone(const PlanePoint& p, const PlanePoint& g1, const PlanePoint& g2) {
    const int s = sgn(cross2(g1, g2));
    if (s == 0)
        throw InputError("cone generators are parallel");
    return s * sgn(cross2(g1, p)) >= 0 && s * sgn(cross2(p, g2)) >= 0;
}

IntMatrix column_lattice_basis(const IntMatrix& a) {
    const std::size_t r = rank_exact(a);
    if (r != 2)
        throw RankError("matrix has rank " + std::to_string(r) + ", expected 2");
    // col(A) is spanned by any two independent columns, and so is its
    // saturation; the first two columns of S generate col(M) ∩ Z^n.
    auto [p, q] = independent_column_pair(a);
    const std::size_t idx[2] = {p, q};
    SnfResult snf = smith_normal_form(a.select_cols(idx));
    IntMatrix basis(a.rows(), 2);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        basis(i, 0) = snf.S(i, 0);
        basis(i, 1) = snf.S(i, 1);
    }
    return basis;
}

std::vector<PlanePoint> point_coordinates(const IntMatrix& a, const IntMatrix& basis) {
    if (basis.rows() != a.rows() || basis.cols() != 2)
        throw InputError("basis must be n x 2 for an n-row matrix");
    const MinorChoice mc = nonzero_row_minor(basis);
    const std::size_t i = mc.i, j = mc.j;
    std::vector<PlanePoint> pts;
    pts.reserve(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        Int n1 = a(i, c) * basis(j, 1) - a(j, c) * basis(i, 1);
        Int n2 = basis(i, 0) * a(j, c) - basis(j, 0) * a(i, c);
        if (!mpz_divisible_p(n1.get_mpz_t(), mc.det.get_mpz_t()) ||
            !mpz_divisible_p(n2.get_mpz_t(), mc.det.get_mpz_t()))
            throw InputError("column " + std::to_string(c) + " is not an integer combination of the basis");
        PlanePoint x(Int(n1 / mc.det), Int(n2 / mc.det));
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (basis(k, 0) * x.x + basis(k, 1) * x.y != a(k, c))
                throw InputError("column " + std::to_string(c) + " is not in the span of the basis");
        pts.push_back(std::move(x));
    }
    return pts;
}

std::array<ExtremeRay, 2> extreme_rays(const IntMatrix& a) {
    require_rank2_nonnegative(a);
    auto [p, q] = independent_column_pair(a);
    const std::size_t idx[2] = {p, q};
    const IntMatrix span = a.select_cols(idx);
    const PlaneRays pr = extreme_directions(span, PlanePoint(1, 0), PlanePoint(0, 1));
    std::array<ExtremeRay, 2> out;
    for (int k = 0; k < 2; ++k) {
        const Int d[2] = {pr.dirs[k].x, pr.dirs[k].y};
        out[k] = {primitive(span * std::span<const Int>(d)), pr.rows[k]};
    }
    return out;
}

Diagram build_diagram(const IntMatrix& a) {
    require_rank2_nonnegative(a);
    Diagram d;
    d.source_rows = a.rows();
    d.source_cols = a.cols();
    d.basis = column_lattice_basis(a);
    d.points = point_coordinates(a, d.basis);
    auto [p, q] = independent_column_pair(a);
    const PlaneRays pr = extreme_directions(d.basis, d.points[p], d.points[q]);
    d.cone_gens = pr.dirs;
    d.ray_rows = pr.rows;
    return d;
}

Diagram transform_diagram(const Diagram& d, const IntMatrix& u) {
    const IntMatrix inv = inverse_unimodular2(u);
    Diagram out = d;
    out.basis = d.basis * inv;
    for (auto& pt : out.points)
        pt = apply2(u, pt);
    for (auto& g : out.cone_gens)
        g = apply2(u, g);
    return out;
}

CanonicalDiagram canonicalize(const Diagram& d, int r) {
    if (r != 1 && r != 2)
        throw InputError("canonization index must be 1 or 2");
    const PlanePoint& g = d.cone_gens[r - 1];
    const PlanePoint& other = d.cone_gens[2 - r];

    // [alpha beta; -g.y g.x] sends g to (1,0).
    const Bezout bz = ext_gcd(g.x, g.y);
    if (bz.g != 1)
        throw InputError("cone generator is not primitive");
    IntMatrix m(2, 2);
    m(0, 0) = bz.x;
    m(0, 1) = bz.y;
    m(1, 0) = -g.y;
    m(1, 1) = g.x;
    PlanePoint o = apply2(m, other);
    if (sgn(o.y) < 0) {
        m(1, 0) = -m(1, 0);
        m(1, 1) = -m(1, 1);
        o.y = -o.y;
    }
    // Smallest gamma with o.x + gamma * o.y >= 0.
    Int gamma;
    Int neg = -o.x;
    mpz_cdiv_q(gamma.get_mpz_t(), neg.get_mpz_t(), o.y.get_mpz_t());
    IntMatrix shear = IntMatrix::identity(2);
    shear(0, 1) = gamma;

    CanonicalDiagram cd;
    cd.transform = shear * m;
    cd.canon_index = r;
    cd.diagram = transform_diagram(d, cd.transform);
    cd.diagram.cone_gens = {cd.diagram.cone_gens[r - 1], cd.diagram.cone_gens[2 - r]};
    cd.diagram.ray_rows = {d.ray_rows[r - 1], d.ray_rows[2 - r]};
    return cd;
}

void check_diagram(const Diagram& d, const IntMatrix& source) {
    if (minor_gcd(d.basis) != 1)
        throw std::logic_error("diagram basis is not saturated");
    if (d.points.size() != source.cols())
        throw std::logic_error("diagram has the wrong number of points");
    for (std::size_t c = 0; c < source.cols(); ++c) {
        const Int x[2] = {d.points[c].x, d.points[c].y};
        if (d.basis * std::span<const Int>(x) != source.col(c))
            throw std::logic_error("diagram point " + std::to_string(c) + " does not reproduce its column");
        if (!in_cone(d.points[c], d.cone_gens[0], d.cone_gens[1]))
            throw std::logic_error("diagram point " + std::to_string(c) + " lies outside the cone");
    }
    for (const auto& g : d.cone_gens)
        if (gcd(g.x, g.y) != 1)
            throw std::logic_error("cone generator is not primitive");
}

} // namespace nnirank2
