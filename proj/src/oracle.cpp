#include "nnirank2/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace nnirank2 {

namespace {

struct P64 {
    std::int64_t x;
    std::int64_t y;
};

// Same test as generated_by on small nonnegative coordinates.
bool gen64(P64 p, P64 a, P64 b) {
    std::int64_t kmax = INT64_MAX;
    if (a.x > 0)
        kmax = std::min(kmax, p.x / a.x);
    if (a.y > 0)
        kmax = std::min(kmax, p.y / a.y);
    for (std::int64_t k = 0; k <= kmax; ++k) {
        const std::int64_t rx = p.x - k * a.x, ry = p.y - k * a.y;
        if (rx == 0 && ry == 0)
            return true;
        // r = l b with l >= 1
        if (rx * b.y != ry * b.x)
            continue;
        const std::int64_t l = b.x != 0 ? rx / b.x : ry / b.y;
        if (l >= 1 && l * b.x == rx && l * b.y == ry)
            return true;
    }
    return false;
}

bool nonnegative(const PlanePoint& p) { return sgn(p.x) >= 0 && sgn(p.y) >= 0; }

} // namespace

bool generated_by(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b) {
    if (a.is_zero() || b.is_zero())
        throw InputError("generators must be nonzero");
    if (p.is_zero())
        return true;
    if (nonnegative(p) && nonnegative(a) && nonnegative(b)) {
        Int kmax = -1;
        auto tighten = [&](const Int& pc, const Int& ac) {
            if (sgn(ac) > 0) {
                Int t = pc / ac;
                if (kmax < 0 || t < kmax)
                    kmax = t;
            }
        };
        tighten(p.x, a.x);
        tighten(p.y, a.y);
        for (Int k = 0; k <= kmax; ++k) {
            const PlanePoint r = p - k * a;
            if (r.is_zero())
                return true;
            if (sgn(cross2(r, b)) != 0)
                continue;
            const Int l = sgn(b.x) != 0 ? Int(r.x / b.x) : Int(r.y / b.y);
            if (sgn(l) > 0 && l * b.x == r.x && l * b.y == r.y)
                return true;
        }
        return false;
    }
    // Mixed signs: solve directly.
    const Int det = cross2(a, b);
    if (sgn(det) != 0) {
        const Int n1 = cross2(p, b), n2 = cross2(a, p);
        return sgn(n1) * sgn(det) >= 0 && sgn(n2) * sgn(det) >= 0 &&
               mpz_divisible_p(n1.get_mpz_t(), det.get_mpz_t()) &&
               mpz_divisible_p(n2.get_mpz_t(), det.get_mpz_t());
    }
    // Parallel generators: p must lie on the ray and be a combination of the
    // two scalar multiples of the shared primitive direction.
    const PlanePoint d = primitive(a);
    const Int sa = sgn(d.x) != 0 ? Int(a.x / d.x) : Int(a.y / d.y);
    const Int sb = sgn(d.x) != 0 ? Int(b.x / d.x) : Int(b.y / d.y);
    if (sgn(cross2(p, d)) != 0)
        return false;
    const Int sp = sgn(d.x) != 0 ? Int(p.x / d.x) : Int(p.y / d.y);
    if (sgn(sa) < 0 && sgn(sb) < 0)
        return generated_by(PlanePoint(Int(-sp), Int(0)), PlanePoint(Int(-sa), Int(0)), PlanePoint(Int(-sb), Int(0)));
    if (sgn(sa) > 0 && sgn(sb) > 0)
        return generated_by(PlanePoint(sp, Int(0)), PlanePoint(sa, Int(0)), PlanePoint(sb, Int(0)));
    // Opposite directions generate the whole line through d.
    return mpz_divisible_p(sp.get_mpz_t(), Int(gcd(sa, sb)).get_mpz_t());
}

OracleVerdict brute_force(const CanonicalDiagram& cd) {
    const auto& pts = cd.diagram.points;
    const PlanePoint& c = cd.diagram.cone_gens[1];
    std::int64_t mx = 0, my = 0;
    std::vector<P64> data;
    for (const auto& p : pts) {
        if (!nonnegative(p))
            throw InputError("canonical point has a negative coordinate");
        if (p.x > oracle_coordinate_cap || p.y > oracle_coordinate_cap)
            throw OracleCapExceeded("canonical coordinates exceed " + std::to_string(oracle_coordinate_cap));
        data.push_back({p.x.get_si(), p.y.get_si()});
        mx = std::max(mx, data.back().x);
        my = std::max(my, data.back().y);
    }
    const std::int64_t cx = c.x.get_si(), cy = c.y.get_si();

    std::vector<P64> cand;
    for (std::int64_t x = 0; x <= mx; ++x)
        for (std::int64_t y = 0; y <= my; ++y) {
            if (x == 0 && y == 0)
                continue;
            if (x * cy - y * cx >= 0)
                cand.push_back({x, y});
        }

    OracleVerdict out;
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i; j < cand.size(); ++j) {
            ++out.pairs_enumerated;
            bool all = true;
            for (const P64& p : data)
                if (!gen64(p, cand[i], cand[j])) {
                    all = false;
                    break;
                }
            if (all) {
                out.rank2 = true;
                out.witness = CandidatePair{PlanePoint(cand[i].x, cand[i].y), PlanePoint(cand[j].x, cand[j].y)};
                return out;
            }
        }
    return out;
}

} // namespace nnirank2
