#pragma once

#include "nnirank2/diagram.hpp"
#include "nnirank2/exact.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace nnirank2 {

/// Split of the canonical cone K_A = K- ∪ K ∪ K+ with K = cone(u, v),
/// K- = cone((1,0), u), K+ = cone(v, c).
struct ConeDecomposition {
    PlanePoint u;       // primitive direction of the lowest-slope point
    PlanePoint v;       // primitive direction of the highest-slope point
    PlanePoint c;       // second canonical cone generator
    PlanePoint u_point; // the data points themselves
    PlanePoint v_point;
};

/// Generator candidates, a ∈ K-, b ∈ K+, cross(a, b) > 0.
struct CandidatePair {
    PlanePoint a;
    PlanePoint b;
    friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

using Coefficients = std::array<Int, 2>;

struct Rank2Certificate {
    IntMatrix F1{1, 2}; // n x 2, nonnegative
    IntMatrix F2{2, 1}; // 2 x m, nonnegative
    CandidatePair pair;
    std::vector<Coefficients> W;
};

/// Exact factorization of a rank <= 1 matrix with inner dimension 1.
struct Rank1Factorization {
    IntMatrix left{1, 1};  // n x 1
    IntMatrix right{1, 1}; // 1 x m
};

enum class Verdict { rank2, not_rank2, rank_le_1 };
std::string_view to_string(Verdict v);

/// A candidate pair that failed, with the first point it cannot generate.
struct PairRejection {
    CandidatePair pair;
    std::size_t failing_index;
    Rat w1;
    Rat w2;
};

struct SolveOutcome {
    Verdict verdict = Verdict::not_rank2;
    std::optional<Rank2Certificate> certificate; // present iff verdict == rank2
    std::optional<Rank1Factorization> rank1;     // present iff verdict == rank_le_1
    std::size_t pairs_examined = 0;
    std::size_t max_degenerate_steps = 0; // longest k' run in the degenerate branch
    std::vector<PairRejection> rejections;  // filled when requested
};

struct SearchOptions {
    int canon_index = 1;
    bool record_rejections = false;
};

/// Result of testing one candidate pair against every point.
struct PairCheck {
    bool ok = false;
    std::vector<Coefficients> W;   // all coefficient pairs when ok
    std::size_t failing_index = 0; // first point that is not generated
    Rat w1, w2;                    // its rational coefficients
};

/// Throws RankError if every nonzero point is parallel (or there is none).
ConeDecomposition decompose(const CanonicalDiagram& cd);

/// Lattice points of K- ∩ (u_point - K+), origin excluded, in (x, y)
/// lexicographic order.
std::vector<PlanePoint> triangle_points(const ConeDecomposition& dec);

/// w_i = [a b]^-1 c_i for every point; ok iff all are nonnegative integers.
/// Throws InputError when a and b are parallel.
PairCheck check_pair(const CandidatePair& pair, const std::vector<PlanePoint>& points);

/// Bounded generator search on a canonical diagram. Returns rank2 with the
/// certificate's pair and W filled (F1/F2 left for assemble), or not_rank2.
SolveOutcome search(const CanonicalDiagram& cd, bool record_rejections = false);

/// F1 = basis * [a b], F2 = [w_1 ... w_m]. Throws std::logic_error if
/// either factor has a negative entry.
Rank2Certificate assemble(const CanonicalDiagram& cd, const CandidatePair& pair, const std::vector<Coefficients>& W);

/// F1 is n x 2, F2 is 2 x m, both nonnegative, and F1 * F2 == A.
bool verify_factorization(const IntMatrix& a, const IntMatrix& f1, const IntMatrix& f2);

/// Decide whether a nonnegative integer matrix of rank <= 2 has nonnegative
/// integer rank <= 2 and return a verified factorization when it does.
/// Throws InputError on negative entries and RankError when rank(A) > 2.
SolveOutcome solve(const IntMatrix& a, const SearchOptions& opts = {});

} // namespace nnirank2
