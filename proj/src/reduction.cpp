#include "nnirank2/reduction.hpp"

#include "nnirank2/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nnirank2 {

namespace {

IntMatrix basis_matrix(std::span<const Int> a1, std::span<const Int> a2) {
    return IntMatrix::from_columns({IntVector(a1.begin(), a1.end()), IntVector(a2.begin(), a2.end())});
}

// Integer coordinates of v in (a1, a2); nullopt if v is not in the lattice.
std::optional<PlanePoint> lattice_coords(const IntMatrix& basis, std::span<const Int> v) {
    auto sol = solve2(basis, v);
    if (!sol || !is_integer(sol->first) || !is_integer(sol->second))
        return std::nullopt;
    return PlanePoint(sol->first.get_num(), sol->second.get_num());
}

IntVector combine(const Int& x, std::span<const Int> a1, const Int& y, std::span<const Int> a2) {
    IntVector out(a1.size());
    for (std::size_t k = 0; k < a1.size(); ++k)
        out[k] = x * a1[k] + y * a2[k];
    return out;
}

Int ceil_nonneg_neg(const Rat& q) {
    // ceil(max(0, -q))
    if (sgn(q) >= 0)
        return 0;
    Rat neg = -q;
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
    return out;
}

// Primitive boundary directions y of {y : f . y >= 0 for every form f}.
// A pointed two-dimensional cone yields exactly its two extreme rays.
std::vector<PlanePoint> cone_boundary(const std::vector<PlanePoint>& forms) {
    std::vector<PlanePoint> out;
    for (const auto& f : forms) {
        if (f.is_zero())
            continue;
        for (const PlanePoint& d : {PlanePoint(Int(-f.y), f.x), PlanePoint(f.y, Int(-f.x))}) {
            bool inside = true;
            for (const auto& g : forms)
                if (sgn(g.x * d.x + g.y * d.y) < 0) {
                    inside = false;
                    break;
                }
            if (!inside)
                continue;
            PlanePoint pd = primitive(d);
            if (std::find(out.begin(), out.end(), pd) == out.end())
                out.push_back(std::move(pd));
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// Rows of m as integer forms on the plane of coordinates w.r.t. the row basis
// r (2 x cols); each row is scaled by a positive integer. nullopt if a row
// leaves the span.
std::optional<std::vector<PlanePoint>> forms_in_basis(const IntMatrix& m, const IntMatrix& rt) {
    std::vector<PlanePoint> forms;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const IntVector row = m.row(i);
        auto sol = solve2(rt, row);
        if (!sol)
            return std::nullopt;
        Int den;
        mpz_lcm(den.get_mpz_t(), sol->first.get_den_mpz_t(), sol->second.get_den_mpz_t());
        Rat x = sol->first * den, y = sol->second * den;
        forms.emplace_back(x.get_num(), y.get_num());
    }
    return forms;
}

bool pointed_2d(const std::vector<PlanePoint>& rays) {
    return rays.size() == 2 && sgn(cross2(rays[0], rays[1])) != 0;
}

std::string vec_str(std::span<const Int> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k];
    os << ')';
    return os.str();
}

} // namespace

IntVector primitivize_in_lattice(std::span<const Int> v, std::span<const Int> a1, std::span<const Int> a2) {
    if (content(v) == 0)
        throw InputError("cannot primitivize the zero vector");
    const auto c = lattice_coords(basis_matrix(a1, a2), v);
    if (!c)
        throw InputError("vector " + vec_str(v) + " is not in the lattice");
    const Int g = gcd(c->x, c->y);
    return combine(Int(c->x / g), a1, Int(c->y / g), a2);
}

ThreeRowConstruction build_3xm(const IntMatrix& a) {
    const auto rays = extreme_rays(a); // checks sign and rank
    ThreeRowConstruction t;
    t.row_choices = {rays[0].vanishing_row, rays[1].vanishing_row};

    std::vector<IntVector> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        rows.push_back(a.row(i));
    std::vector<IntVector> hnf = hermite_row_basis(rows);
    if (hnf.size() != 2)
        throw std::logic_error("row lattice of a rank-2 matrix must have rank 2");
    auto [a1, a2] = reduce_basis_rank2(hnf[0], hnf[1]);

    const IntVector b1 = primitivize_in_lattice(a.row(t.row_choices[0]), a1, a2);
    const IntVector b2 = primitivize_in_lattice(a.row(t.row_choices[1]), a1, a2);
    // Orientation: (b1, b2) negatively oriented in the basis coordinates.
    if (sgn(cross2(*lattice_coords(basis_matrix(a1, a2), b1), *lattice_coords(basis_matrix(a1, a2), b2))) > 0)
        for (auto& e : a2)
            e = -e;
    const IntMatrix basis = basis_matrix(a1, a2);
    const PlanePoint c1 = *lattice_coords(basis, b1);
    const PlanePoint c2 = *lattice_coords(basis, b2);
    t.p = c1.x;
    t.q = c1.y;

    // r p - s q = 1
    const Bezout bz = ext_gcd(t.p, Int(-t.q));
    if (bz.g != 1)
        throw std::logic_error("primitive lattice element has non-coprime coordinates");
    t.r = bz.x;
    t.s = bz.y;
    t.b3_bar = combine(t.s, a1, t.r, a2);
    t.completion_det = t.p * t.r - t.q * t.s;

    const IntMatrix pair = basis_matrix(b1, b2);
    const auto ab = solve2(pair, t.b3_bar);
    if (!ab)
        throw std::logic_error("b3 is outside the span of b1 and b2");
    t.alpha = ab->first;
    t.beta = ab->second;
    t.shift1 = ceil_nonneg_neg(t.alpha);
    t.shift2 = ceil_nonneg_neg(t.beta);
    IntVector b3 = t.b3_bar;
    for (std::size_t k = 0; k < b3.size(); ++k)
        b3[k] += t.shift1 * b1[k] + t.shift2 * b2[k];

    auto generation_gcd = [&](const PlanePoint& c3) {
        return gcd(gcd(cross2(c1, c2), cross2(c1, c3)), cross2(c2, c3));
    };
    const PlanePoint c3 = *lattice_coords(basis, b3);
    t.generation_gcd = generation_gcd(c3);
    if (t.generation_gcd != 1)
        throw std::logic_error("b1, b2, b3 do not generate the row lattice");
    if (!c3.is_zero()) {
        const PlanePoint c3p = primitive(c3);
        if (!(c3p == c3) && generation_gcd(c3p) == 1) {
            b3 = combine(c3p.x, a1, c3p.y, a2);
            t.primitivized = true;
        }
    }

    t.lattice_basis = {std::move(a1), std::move(a2)};
    t.result = IntMatrix::from_rows({b1, b2, b3});
    if (!t.result.is_nonnegative())
        throw std::logic_error("3-row construction produced a negative entry");
    return t;
}

IntMatrix reduce_to_3x3(const IntMatrix& a, ReductionTrace* trace) {
    ThreeRowConstruction first = build_3xm(a);
    ThreeRowConstruction second = build_3xm(first.result.transpose());
    IntMatrix c = second.result.transpose();
    if (trace) {
        trace->input = a;
        trace->three_by_m = first.result;
        trace->three_by_three = c;
        trace->first = std::move(first);
        trace->second = std::move(second);
    }
    return c;
}

EquivalenceReport validate_equivalence(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols())
        throw InputError("matrices have different column counts");
    EquivalenceReport rep;
    auto fail = [&](const std::string& msg) {
        if (rep.detail.empty())
            rep.detail = msg;
    };

    std::vector<IntVector> rows_a, rows_b, stacked;
    for (std::size_t i = 0; i < a.rows(); ++i)
        rows_a.push_back(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i)
        rows_b.push_back(b.row(i));
    stacked = rows_a;
    stacked.insert(stacked.end(), rows_b.begin(), rows_b.end());
    const std::size_t ra = rank_exact(a), rb = rank_exact(b);
    const std::size_t rs = rank_exact(IntMatrix::from_rows(stacked));
    rep.same_row_space = ra == 2 && rb == 2 && rs == 2;
    if (!rep.same_row_space)
        fail("row space: rank(A)=" + std::to_string(ra) + " rank(B)=" + std::to_string(rb) +
             " rank([A;B])=" + std::to_string(rs));

    rep.same_row_lattice = hermite_row_basis(rows_a) == hermite_row_basis(rows_b);
    if (!rep.same_row_lattice)
        fail("row lattice: Hermite normal forms differ");

    if (rep.same_row_space) {
        // Common row basis: two independent rows of A.
        const auto [i, j] = independent_column_pair(a.transpose());
        const IntMatrix rt = IntMatrix::from_columns({rows_a[i], rows_a[j]});
        const auto fa = forms_in_basis(a, rt);
        const auto fb = forms_in_basis(b, rt);
        if (!fa || !fb)
            throw std::logic_error("row outside the common row space");
        const auto ka = cone_boundary(*fa);
        const auto kb = cone_boundary(*fb);
        rep.same_cone = pointed_2d(ka) && ka == kb;
    }
    if (!rep.same_cone)
        fail("cone: {x : Ax >= 0} and {x : Bx >= 0} differ");
    return rep;
}

ReductionReport validate_reduction(const IntMatrix& a, const IntMatrix& c) {
    const IntMatrix b = build_3xm(a).result;
    ReductionReport rep;
    rep.rows = validate_equivalence(a, b);
    const IntMatrix bt = b.transpose(), ct = c.transpose();
    if (bt.cols() != ct.cols()) {
        rep.columns.detail = "column counts differ";
        return rep;
    }
    rep.columns = validate_equivalence(bt, ct);
    return rep;
}

std::string format_trace(const ReductionTrace& t) {
    std::ostringstream os;
    auto stage = [&](const char* name, const ThreeRowConstruction& s) {
        os << name << ".row_choices: " << s.row_choices[0] << ' ' << s.row_choices[1] << '\n';
        os << name << ".lattice_basis:\n" << vec_str(s.lattice_basis[0]) << '\n' << vec_str(s.lattice_basis[1]) << '\n';
        os << name << ".b1_coords: " << s.p << ' ' << s.q << '\n';
        os << name << ".bezout: r=" << s.r << " s=" << s.s << '\n';
        os << name << ".b3_bar: " << vec_str(s.b3_bar) << '\n';
        os << name << ".b3_bar_in_b1_b2: " << to_string(s.alpha) << ' ' << to_string(s.beta) << '\n';
        os << name << ".shift: " << s.shift1 << ' ' << s.shift2 << '\n';
        os << name << ".primitivized: " << (s.primitivized ? "true" : "false") << '\n';
        os << name << ".completion_det: " << s.completion_det << '\n';
        os << name << ".generation_gcd: " << s.generation_gcd << '\n';
    };
    os << "three_by_m:\n" << t.three_by_m;
    stage("first", t.first);
    stage("second", t.second);
    os << "three_by_three:\n" << t.three_by_three;
    return os.str();
}

} // namespace nnirank2
