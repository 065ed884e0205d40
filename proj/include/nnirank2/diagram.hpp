#pragma once

#include "nnirank2/exact.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace nnirank2 {

/// An extreme ray of col(A) ∩ R+^n together with a row of A whose linear
/// form vanishes on it.
struct ExtremeRay {
    IntVector ray;             // primitive, length n
    std::size_t vanishing_row; // 0-based
};

/// Plane picture of a rank-2 matrix: a basis of the saturated column lattice,
/// the coordinates of every column in that basis, and the primitive
/// generators of the image of the nonnegative column cone.
///
/// Invariants: basis * points[j] == column j; minor_gcd(basis) == 1; every
/// point lies in cone(cone_gens[0], cone_gens[1]).
struct Diagram {
    IntMatrix basis{1, 2};
    std::vector<PlanePoint> points;
    std::array<PlanePoint, 2> cone_gens;
    std::array<std::size_t, 2> ray_rows{}; // vanishing row of each generator
    std::size_t source_rows = 0;
    std::size_t source_cols = 0;
};

/// A diagram whose cone is generated by (1,0) and (c,d) with 0 <= c < d.
/// `transform` maps the plane coordinates of the source diagram onto the
/// stored ones; the stored basis is the source basis times transform^-1.
struct CanonicalDiagram {
    Diagram diagram;
    IntMatrix transform = IntMatrix::identity(2);
    int canon_index = 1; // which source generator was sent to (1,0)
};

/// n x 2 basis of col(A) ∩ Z^n, read off the Smith normal form of two
/// independent columns of A. Throws RankError unless rank(A) == 2.
IntMatrix column_lattice_basis(const IntMatrix& a);

/// Integer coordinates of each column of A in `basis`. Throws InputError if a
/// column is not an integer combination of the basis.
std::vector<PlanePoint> point_coordinates(const IntMatrix& a, const IntMatrix& basis);

/// The two extreme rays of col(A) ∩ R+^n. The first is the ray reached by
/// moving from the first independent column pair (A_p, A_q) past A_q, the
/// second past A_p. Vanishing-row ties go to the smallest row index; zero
/// rows are ignored.
std::array<ExtremeRay, 2> extreme_rays(const IntMatrix& a);

/// Throws InputError on negative entries and RankError unless rank(A) == 2.
Diagram build_diagram(const IntMatrix& a);

/// Canonical form sending cone generator r (1 or 2) to (1,0).
CanonicalDiagram canonicalize(const Diagram& d, int r = 1);

/// Re-express a diagram after the unimodular change of plane coordinates u.
Diagram transform_diagram(const Diagram& d, const IntMatrix& u);

/// p ∈ cone(g1, g2) for non-parallel g1, g2 (either orientation).
bool in_cone(const PlanePoint& p, const PlanePoint& g1, const PlanePoint& g2);

/// Throws std::logic_error describing the first violated Diagram invariant.
void check_diagram(const Diagram& d, const IntMatrix& source);

} // namespace nnirank2
