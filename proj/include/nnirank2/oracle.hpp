#pragma once

#include "nnirank2/diagram.hpp"
#include "nnirank2/solver.hpp"

#include <cstddef>
#include <optional>

namespace nnirank2 {

/// Largest canonical coordinate the brute-force search accepts.
inline constexpr long oracle_coordinate_cap = 100;

class OracleCapExceeded : public InputError {
public:
    using InputError::InputError;
};

struct OracleVerdict {
    bool rank2 = false;
    std::optional<CandidatePair> witness;
    std::size_t pairs_enumerated = 0;
};

/// p = k a + l b for some integers k, l >= 0, found by trying every k.
/// Works for parallel a, b. a and b must be nonzero.
bool generated_by(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b);

/// Exhaustive search over all pairs {a, b} (a == b allowed) of lattice points
/// of the canonical cone bounded by the componentwise maximum of the data
/// points. Throws OracleCapExceeded when a coordinate exceeds the cap.
OracleVerdict brute_force(const CanonicalDiagram& cd);

} // namespace nnirank2
