#pragma once

#include "nnirank2/exact.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace nnirank2 {

/// How one application of the 3-row construction picked its rows.
struct ThreeRowConstruction {
    IntMatrix result{3, 1};
    std::array<std::size_t, 2> row_choices{}; // source rows giving b1, b2 (0-based)
    std::array<IntVector, 2> lattice_basis;   // reduced basis a1, a2 of the row lattice
    Int p, q;                                 // b1 = p a1 + q a2
    Int r, s;                                 // r p - s q = 1
    IntVector b3_bar;                         // s a1 + r a2
    Rat alpha, beta;                          // b3_bar = alpha b1 + beta b2
    Int shift1, shift2;                       // multiples of b1, b2 added
    bool primitivized = false;
    Int completion_det;                       // det of the coordinates of (b1, b3_bar), +-1
    Int generation_gcd;                       // gcd of pairwise coordinate dets of b1, b2, b3, always 1
};

struct ReductionTrace {
    IntMatrix input{1, 1};
    IntMatrix three_by_m{3, 1};
    IntMatrix three_by_three{3, 3};
    ThreeRowConstruction first;  // on the input
    ThreeRowConstruction second; // on transpose(three_by_m)
};

/// v divided by the gcd of its coordinates in the lattice basis (a1, a2).
/// Throws InputError if v is zero or not in the lattice.
IntVector primitivize_in_lattice(std::span<const Int> v, std::span<const Int> a1, std::span<const Int> a2);

/// 3 x m matrix B, nonnegative, with the same row space, row lattice and
/// nonnegativity cone as A. Rows are (b1, b2, b3).
/// Throws RankError unless rank(A) == 2, InputError on negative entries.
ThreeRowConstruction build_3xm(const IntMatrix& a);

/// 3 x 3 matrix C whose rows come from the rows of build_3xm(A) and whose
/// columns come from its columns: C = transpose(build_3xm(transpose(B))).
IntMatrix reduce_to_3x3(const IntMatrix& a, ReductionTrace* trace = nullptr);

struct EquivalenceReport {
    bool same_row_space = false;  // rank(A) = rank(B) = rank([A; B]) = 2
    bool same_row_lattice = false; // equal row Hermite normal forms
    bool same_cone = false;        // {x : Ax >= 0} = {x : Bx >= 0}
    std::string detail;            // first failure, empty when all hold
    bool ok() const { return same_row_space && same_row_lattice && same_cone; }
};

/// Checks that A and B (same column count) have the same row space, the same
/// row lattice, and the same set of x with Ax >= 0. Throws InputError on
/// unequal column counts.
EquivalenceReport validate_equivalence(const IntMatrix& a, const IntMatrix& b);

/// Validates a 3 x 3 candidate C against A through the intermediate
/// B = build_3xm(A): A ~ B row-wise and transpose(B) ~ transpose(C) row-wise.
struct ReductionReport {
    EquivalenceReport rows;    // A vs B
    EquivalenceReport columns; // transpose(B) vs transpose(C)
    bool ok() const { return rows.ok() && columns.ok(); }
};
ReductionReport validate_reduction(const IntMatrix& a, const IntMatrix& c);

/// Structured text dump used by the CLI.
std::string format_trace(const ReductionTrace& t);

} // namespace nnirank2
