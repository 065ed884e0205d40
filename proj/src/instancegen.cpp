#include "nnirank2/instancegen.hpp"

#include <cmath>

namespace nnirank2 {

DiscreteGaussian1D::DiscreteGaussian1D(double sigma) : sigma_(sigma) {
    if (!(sigma > 0))
        throw InputError("sigma must be positive");
    half_width_ = std::max(1L, static_cast<long>(std::ceil(12 * sigma)));
    std::vector<double> w;
    w.reserve(2 * half_width_ + 1);
    for (long x = -half_width_; x <= half_width_; ++x)
        w.push_back(std::exp(-static_cast<double>(x) * x / (2 * sigma * sigma)));
    offsets_ = std::discrete_distribution<long>(w.begin(), w.end());
}

long DiscreteGaussian1D::operator()(Rng& rng, long center) { return center + offsets_(rng) - half_width_; }

PlanePoint dgauss2(double sigma, const PlanePoint& center, Rng& rng) {
    DiscreteGaussian1D g(sigma);
    return {Int(center.x + g(rng)), Int(center.y + g(rng))};
}

namespace {

bool has_independent_pair(const std::vector<PlanePoint>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (sgn(cross2(v[i], v[j])) != 0)
                return true;
    return false;
}

} // namespace

ProductInstance gen_product(std::size_t rows, std::size_t cols, double sigma, Rng& rng) {
    if (rows < 2 || cols < 2)
        throw InputError("product instances need at least 2 rows and 2 columns");
    DiscreteGaussian1D g(sigma);
    for (;;) {
        std::vector<PlanePoint> cs;
        while (cs.size() < cols) {
            const long x = g(rng), y = g(rng);
            if (x >= 0 && y >= 0 && (x != 0 || y != 0))
                cs.emplace_back(x, y);
        }
        std::vector<PlanePoint> bs;
        while (bs.size() < rows) {
            const long x = g(rng), y = g(rng);
            if (x == 0 && y == 0)
                continue;
            bool dual = true;
            for (const auto& c : cs)
                if (sgn(c.x * x + c.y * y) < 0) {
                    dual = false;
                    break;
                }
            if (dual)
                bs.emplace_back(x, y);
        }
        if (!has_independent_pair(cs) || !has_independent_pair(bs))
            continue;
        ProductInstance inst{IntMatrix(rows, 2), IntMatrix(2, cols), IntMatrix(1, 1)};
        for (std::size_t i = 0; i < rows; ++i) {
            inst.B(i, 0) = bs[i].x;
            inst.B(i, 1) = bs[i].y;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            inst.C(0, j) = cs[j].x;
            inst.C(1, j) = cs[j].y;
        }
        inst.A = inst.B * inst.C;
        return inst;
    }
}

ProductInstance gen_product(std::size_t rows, std::size_t cols, double sigma, std::uint64_t seed) {
    Rng rng(seed);
    return gen_product(rows, cols, sigma, rng);
}

IntMatrix gen_bt(long t) {
    if (t < 1)
        throw InputError("t must be at least 1");
    return {{t + 1, t, t - 1}, {t, t, t}, {t - 1, t, t + 1}};
}

IntMatrix gen_near_t(long t, Rng& rng) {
    if (t < 3)
        throw InputError("t must be at least 3");
    DiscreteGaussian1D g(2.0);
    for (;;) {
        std::vector<PlanePoint> pts;
        while (pts.size() < 3) {
            const long x = g(rng, t), y = g(rng, t);
            if (y >= 0 && y <= 2 * x)
                pts.emplace_back(x, y);
        }
        if (!has_independent_pair(pts))
            continue;
        IntMatrix m(3, 3);
        for (std::size_t j = 0; j < 3; ++j) {
            m(0, j) = pts[j].x;
            m(1, j) = pts[j].y;
            m(2, j) = 2 * pts[j].x - pts[j].y;
        }
        return m;
    }
}

IntMatrix gen_near_t(long t, std::uint64_t seed) {
    Rng rng(seed);
    return gen_near_t(t, rng);
}

GenKind parse_gen_kind(std::string_view s) {
    if (s == "product")
        return GenKind::product;
    if (s == "bt")
        return GenKind::bt;
    if (s == "near_t")
        return GenKind::near_t;
    throw InputError("unknown instance kind '" + std::string(s) + "'");
}

std::string_view to_string(GenKind k) {
    switch (k) {
    case GenKind::product:
        return "product";
    case GenKind::bt:
        return "bt";
    case GenKind::near_t:
        return "near_t";
    }
    return "unknown";
}

void validate(const GenSpec& spec) {
    switch (spec.kind) {
    case GenKind::product:
        if (spec.rows < 2 || spec.cols < 2)
            throw InputError("product instances need at least 2 rows and 2 columns");
        if (!(spec.sigma > 0))
            throw InputError("sigma must be positive");
        break;
    case GenKind::bt:
        if (spec.t < 1)
            throw InputError("t must be at least 1");
        break;
    case GenKind::near_t:
        if (spec.t < 3)
            throw InputError("t must be at least 3");
        break;
    }
}

std::vector<std::uint64_t> instance_seeds(std::uint64_t master, std::size_t count) {
    Rng m(master);
    std::vector<std::uint64_t> out(count);
    for (auto& s : out)
        s = m();
    return out;
}

std::vector<IntMatrix> generate(const GenSpec& spec, std::size_t count) {
    validate(spec);
    std::vector<IntMatrix> out;
    out.reserve(count);
    for (std::uint64_t s : instance_seeds(spec.seed, count)) {
        switch (spec.kind) {
        case GenKind::product:
            out.push_back(gen_product(spec.rows, spec.cols, spec.sigma, s).A);
            break;
        case GenKind::bt:
            out.push_back(gen_bt(spec.t));
            break;
        case GenKind::near_t:
            out.push_back(gen_near_t(spec.t, s));
            break;
        }
    }
    return out;
}

} // namespace nnirank2
