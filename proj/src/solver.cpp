#include "nnirank2/solver.hpp"

#include <stdexcept>
#include <string>

namespace nnirank2 {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::rank2:
        return "rank2";
    case Verdict::not_rank2:
        return "not_rank2";
    case Verdict::rank_le_1:
        return "rank_le_1";
    }
    return "unknown";
}

namespace {

Int norm2(const PlanePoint& p) { return p.x * p.x + p.y * p.y; }

// Among parallel points prefer the shorter one, then the lexicographically smaller.
bool preferred(const PlanePoint& p, const PlanePoint& q) {
    Int np = norm2(p), nq = norm2(q);
    if (np != nq)
        return np < nq;
    return lex_less(p, q);
}

// Tightens [lo, hi] with coef * y <= rhs. Returns false if infeasible.
bool apply_upper(const Int& coef, const Int& rhs, Int& lo, Int& hi, bool& has_hi) {
    const int s = sgn(coef);
    if (s == 0)
        return sgn(rhs) >= 0;
    Int bound;
    if (s > 0) {
        mpz_fdiv_q(bound.get_mpz_t(), rhs.get_mpz_t(), coef.get_mpz_t());
        if (!has_hi || bound < hi) {
            hi = bound;
            has_hi = true;
        }
    } else {
        mpz_cdiv_q(bound.get_mpz_t(), rhs.get_mpz_t(), coef.get_mpz_t());
        if (bound > lo)
            lo = bound;
    }
    return true;
}

bool in_k_a(const PlanePoint& p, const PlanePoint& c) { return sgn(p.y) >= 0 && sgn(cross2(p, c)) >= 0; }

} // namespace

ConeDecomposition decompose(const CanonicalDiagram& cd) {
    const auto& pts = cd.diagram.points;
    const PlanePoint* lo = nullptr;
    const PlanePoint* hi = nullptr;
    for (const auto& p : pts) {
        if (p.is_zero())
            continue;
        if (!lo) {
            lo = hi = &p;
            continue;
        }
        const int sl = sgn(cross2(p, *lo));
        if (sl > 0 || (sl == 0 && preferred(p, *lo)))
            lo = &p;
        const int sh = sgn(cross2(*hi, p));
        if (sh > 0 || (sh == 0 && preferred(p, *hi)))
            hi = &p;
    }
    if (!lo || sgn(cross2(*lo, *hi)) == 0)
        throw RankError("diagram points do not span the plane");
    return {primitive(*lo), primitive(*hi), cd.diagram.cone_gens[1], *lo, *hi};
}

std::vector<PlanePoint> triangle_points(const ConeDecomposition& dec) {
    const PlanePoint& u = dec.u_point;
    const PlanePoint& v = dec.v;
    const PlanePoint& c = dec.c;
    std::vector<PlanePoint> out;

    // Vertices: u and the x-axis intercepts of the lines u - t v and u - t c.
    // The smallest intercept bounds the x range from below; u.x from above.
    Int x_lo = 0;
    if (sgn(u.y) > 0) {
        Rat iv = Rat(u.x) - make_rat(u.y * v.x, v.y);
        Rat ic = Rat(u.x) - make_rat(u.y * c.x, c.y);
        Rat m = iv < ic ? iv : ic;
        mpz_cdiv_q(x_lo.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
        if (sgn(x_lo) < 0)
            x_lo = 0;
    } else {
        x_lo = u.x;
    }

    for (Int x = x_lo; x <= u.x; ++x) {
        Int lo = 0, hi = 0;
        bool has_hi = false;
        // cross(p, u) >= 0
        if (!apply_upper(u.x, x * u.y, lo, hi, has_hi))
            continue;
        // cross(v, u - p) >= 0
        if (!apply_upper(v.x, v.x * u.y - v.y * (u.x - x), lo, hi, has_hi))
            continue;
        // cross(u - p, c) >= 0
        if (!apply_upper(Int(-c.x), (u.x - x) * c.y - u.y * c.x, lo, hi, has_hi))
            continue;
        if (!has_hi)
            throw std::logic_error("triangle is unbounded");
        for (Int y = lo; y <= hi; ++y) {
            if (sgn(x) == 0 && sgn(y) == 0)
                continue;
            out.emplace_back(x, y);
        }
    }
    return out;
}

PairCheck check_pair(const CandidatePair& pair, const std::vector<PlanePoint>& points) {
    const Int det = cross2(pair.a, pair.b);
    if (sgn(det) == 0)
        throw InputError("candidate generators are parallel");
    PairCheck res;
    res.W.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const PlanePoint& p = points[i];
        Int n1 = cross2(p, pair.b);
        Int n2 = cross2(pair.a, p);
        const bool good = sgn(n1) * sgn(det) >= 0 && sgn(n2) * sgn(det) >= 0 &&
                          mpz_divisible_p(n1.get_mpz_t(), det.get_mpz_t()) &&
                          mpz_divisible_p(n2.get_mpz_t(), det.get_mpz_t());
        if (!good) {
            res.ok = false;
            res.W.clear();
            res.failing_index = i;
            res.w1 = make_rat(n1, det);
            res.w2 = make_rat(n2, det);
            return res;
        }
        mpz_divexact(n1.get_mpz_t(), n1.get_mpz_t(), det.get_mpz_t());
        mpz_divexact(n2.get_mpz_t(), n2.get_mpz_t(), det.get_mpz_t());
        res.W.push_back({std::move(n1), std::move(n2)});
    }
    res.ok = true;
    return res;
}

SolveOutcome search(const CanonicalDiagram& cd, bool record_rejections) {
    const auto& pts = cd.diagram.points;
    const ConeDecomposition dec = decompose(cd);
    SolveOutcome out;

    // Returns true when the pair generates every point.
    auto try_pair = [&](const CandidatePair& pair) {
        ++out.pairs_examined;
        PairCheck pc = check_pair(pair, pts);
        if (pc.ok) {
            out.verdict = Verdict::rank2;
            Rank2Certificate cert;
            cert.pair = pair;
            cert.W = std::move(pc.W);
            out.certificate = std::move(cert);
            return true;
        }
        if (record_rejections)
            out.rejections.push_back({pair, pc.failing_index, pc.w1, pc.w2});
        return false;
    };

    for (const PlanePoint& ka : triangle_points(dec)) {
        const PlanePoint a = primitive(ka);
        const PlanePoint rest = dec.u_point - ka;
        if (!rest.is_zero()) {
            if (try_pair({a, primitive(rest)}))
                return out;
            continue;
        }
        // ka == u: b lies on a ray through v - k' a for some k' >= 0.
        std::size_t steps = 0;
        for (Int k = 0;; ++k) {
            const PlanePoint q = dec.v_point - k * a;
            if (!in_k_a(q, dec.c) || q.is_zero())
                break;
            ++steps;
            if (try_pair({a, primitive(q)})) {
                out.max_degenerate_steps = std::max(out.max_degenerate_steps, steps);
                return out;
            }
        }
        out.max_degenerate_steps = std::max(out.max_degenerate_steps, steps);
    }
    out.verdict = Verdict::not_rank2;
    return out;
}

Rank2Certificate assemble(const CanonicalDiagram& cd, const CandidatePair& pair, const std::vector<Coefficients>& W) {
    const IntMatrix& basis = cd.diagram.basis;
    Rank2Certificate cert;
    cert.pair = pair;
    cert.W = W;
    cert.F1 = IntMatrix(basis.rows(), 2);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        cert.F1(i, 0) = basis(i, 0) * pair.a.x + basis(i, 1) * pair.a.y;
        cert.F1(i, 1) = basis(i, 0) * pair.b.x + basis(i, 1) * pair.b.y;
    }
    cert.F2 = IntMatrix(2, W.size());
    for (std::size_t j = 0; j < W.size(); ++j) {
        cert.F2(0, j) = W[j][0];
        cert.F2(1, j) = W[j][1];
    }
    if (!cert.F1.is_nonnegative() || !cert.F2.is_nonnegative())
        throw std::logic_error("assembled factor has a negative entry");
    return cert;
}

bool verify_factorization(const IntMatrix& a, const IntMatrix& f1, const IntMatrix& f2) {
    if (f1.rows() != a.rows() || f1.cols() != 2 || f2.rows() != 2 || f2.cols() != a.cols())
        return false;
    if (!f1.is_nonnegative() || !f2.is_nonnegative())
        return false;
    return f1 * f2 == a;
}

SolveOutcome solve(const IntMatrix& a, const SearchOptions& opts) {
    if (!a.is_nonnegative())
        throw InputError("matrix has negative entries");
    const std::size_t r = rank_exact(a);
    if (r > 2)
        throw RankError("matrix has rank " + std::to_string(r) + "; only rank <= 2 is supported");

    if (r <= 1) {
        SolveOutcome out;
        out.verdict = Verdict::rank_le_1;
        Rank1Factorization f{IntMatrix(a.rows(), 1), IntMatrix(1, a.cols())};
        if (r == 1) {
            std::size_t p = 0;
            while (a.col(p) == IntVector(a.rows()))
                ++p;
            const IntVector g = primitive(a.col(p));
            std::size_t i0 = 0;
            while (sgn(g[i0]) == 0)
                ++i0;
            f.left.set_col(0, g);
            for (std::size_t j = 0; j < a.cols(); ++j)
                f.right(0, j) = a(i0, j) / g[i0];
        }
        if (f.left * f.right != a)
            throw std::logic_error("rank-1 factorization does not reproduce the matrix");
        out.rank1 = std::move(f);
        return out;
    }

    const CanonicalDiagram cd = canonicalize(build_diagram(a), opts.canon_index);
    SolveOutcome out = search(cd, opts.record_rejections);
    if (out.verdict == Verdict::rank2) {
        out.certificate = assemble(cd, out.certificate->pair, out.certificate->W);
        if (!verify_factorization(a, out.certificate->F1, out.certificate->F2))
            throw std::logic_error("certificate failed verification");
    }
    return out;
}

} // namespace nnirank2
