#pragma once

#include "nnirank2/exact.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace nnirank2 {

using Rng = std::mt19937_64;

/// Integer sampler with P(x) proportional to exp(-(x - center)^2 / (2 sigma^2)),
/// by inverse CDF over center +- 12 sigma.
class DiscreteGaussian1D {
public:
    explicit DiscreteGaussian1D(double sigma);
    long operator()(Rng& rng, long center = 0);
    double sigma() const { return sigma_; }

private:
    double sigma_;
    long half_width_;
    std::discrete_distribution<long> offsets_;
};

/// Z^2 sample with density proportional to exp(-|x - center|^2 / (2 sigma^2)),
/// as two independent 1D samples.
PlanePoint dgauss2(double sigma, const PlanePoint& center, Rng& rng);

struct ProductInstance {
    IntMatrix B{1, 2}; // rows x 2
    IntMatrix C{2, 1}; // 2 x cols
    IntMatrix A{1, 1}; // B * C
};

/// A = B C with nonzero nonnegative columns of C and nonzero rows of B in the
/// dual of cone(cols(C)); resampled until rank(B) = rank(C) = 2.
ProductInstance gen_product(std::size_t rows, std::size_t cols, double sigma, std::uint64_t seed);
ProductInstance gen_product(std::size_t rows, std::size_t cols, double sigma, Rng& rng);

/// [[t+1, t, t-1], [t, t, t], [t-1, t, t+1]]. Throws InputError for t < 1.
IntMatrix gen_bt(long t);

/// Three points sampled around (t, t) with sigma 2 inside
/// cone((1,0), (1,2)), evaluated at x, y and 2x - y. Rank 2.
IntMatrix gen_near_t(long t, std::uint64_t seed);
IntMatrix gen_near_t(long t, Rng& rng);

enum class GenKind { product, bt, near_t };
GenKind parse_gen_kind(std::string_view s);
std::string_view to_string(GenKind k);

struct GenSpec {
    GenKind kind = GenKind::product;
    std::size_t rows = 3;
    std::size_t cols = 3;
    double sigma = 3.0;
    long t = 4;
    std::uint64_t seed = 0;
};

/// Throws InputError on an invalid spec.
void validate(const GenSpec& spec);

/// `count` instances; instance i uses the i-th seed drawn from a generator
/// seeded with spec.seed, so a prefix of a longer run is identical.
std::vector<IntMatrix> generate(const GenSpec& spec, std::size_t count);

/// Seed of instance i in generate().
std::vector<std::uint64_t> instance_seeds(std::uint64_t master, std::size_t count);

} // namespace nnirank2
