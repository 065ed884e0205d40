#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nnirank2 {

/// Arbitrary-precision integer.
using Int = mpz_class;
/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator).
using Rat = mpq_class;
using IntVector = std::vector<Int>;

/// Bad input handed to a public entry point (negative entries, wrong rank,
/// malformed files). The CLI maps it to exit status 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The matrix does not have the rank an operation requires.
class RankError : public InputError {
public:
    using InputError::InputError;
};

/// Make a rational from a numerator/denominator pair in canonical form.
Rat make_rat(const Int& num, const Int& den);
bool is_integer(const Rat& q);

/// Dense row-major matrix of arbitrary-precision integers. Never empty.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    static IntMatrix from_columns(const std::vector<IntVector>& cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    void set_row(std::size_t i, std::span<const Int> v);
    void set_col(std::size_t j, std::span<const Int> v);

    IntMatrix transpose() const;
    /// Submatrix made of the listed columns, in the given order.
    IntMatrix select_cols(std::span<const std::size_t> idx) const;

    bool is_nonnegative() const;
    bool is_zero() const;
    Int max_abs() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const Int> x);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Integer point of the plane, used for diagram coordinates.
struct PlanePoint {
    Int x;
    Int y;

    PlanePoint() = default;
    PlanePoint(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}
    PlanePoint(long x_, long y_) : x(x_), y(y_) {}

    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
    friend bool operator==(const PlanePoint& a, const PlanePoint& b) { return a.x == b.x && a.y == b.y; }
    friend PlanePoint operator+(const PlanePoint& a, const PlanePoint& b) { return {a.x + b.x, a.y + b.y}; }
    friend PlanePoint operator-(const PlanePoint& a, const PlanePoint& b) { return {a.x - b.x, a.y - b.y}; }
    friend PlanePoint operator*(const Int& k, const PlanePoint& p) { return {k * p.x, k * p.y}; }
};

/// Lexicographic order on (x, y).
bool lex_less(const PlanePoint& a, const PlanePoint& b);
std::ostream& operator<<(std::ostream& os, const PlanePoint& p);

struct Bezout {
    Int g;
    Int x;
    Int y;
};

/// Nonnegative gcd; gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);
/// a*x + b*y = g = gcd(a, b). Throws InputError when both are zero.
Bezout ext_gcd(const Int& a, const Int& b);
/// gcd of all entries (0 for the zero vector).
Int content(std::span<const Int> v);
/// v divided by the gcd of its entries. Throws InputError on the zero vector.
IntVector primitive(std::span<const Int> v);
PlanePoint primitive(const PlanePoint& p);

/// p.x*q.y - p.y*q.x
Int cross2(const PlanePoint& p, const PlanePoint& q);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const IntMatrix& a);
/// Exact determinant of a square matrix (Bareiss).
Int determinant(const IntMatrix& a);

struct SnfResult {
    IntMatrix S; // n x n, unimodular
    IntMatrix D; // n x m, diagonal, d_i | d_{i+1}, d_i >= 0
    IntMatrix T; // m x m, unimodular
    std::size_t rank = 0;
};

/// A = S * D * T.
///
/// Pivoting: the pivot at step t is the nonzero entry of smallest absolute
/// value in the trailing submatrix, ties broken by smallest row and then
/// smallest column. Row and column remainders use nearest-integer quotients.
/// When a trailing entry is not divisible by the pivot its row is added to
/// the pivot row and the step is repeated. Deterministic for a fixed input.
SnfResult smith_normal_form(const IntMatrix& a);

/// Lagrange-Gauss reduction of a rank-2 lattice basis. The result spans the
/// same lattice and satisfies |a1| <= |a2| <= |a2 +- a1|.
/// Throws InputError when the inputs are linearly dependent.
std::pair<IntVector, IntVector> reduce_basis_rank2(IntVector v1, IntVector v2);

/// Basis of the lattice generated by the given integer rows, in row Hermite
/// normal form (pivots positive, entries above each pivot reduced into
/// [0, pivot)). Canonical for the lattice; the zero lattice gives an empty list.
std::vector<IntVector> hermite_row_basis(const std::vector<IntVector>& rows);

/// Exact solution of B x = y for an n x 2 matrix B of rank 2, or nullopt if
/// the system is inconsistent. Throws RankError if B is rank deficient.
std::optional<std::pair<Rat, Rat>> solve2(const IntMatrix& b, std::span<const Int> y);

/// First pair of rows (i < j) whose 2x2 minor in the given two columns of
/// `b` is nonzero, with that minor. Throws RankError if there is none.
struct MinorChoice {
    std::size_t i;
    std::size_t j;
    Int det;
};
MinorChoice nonzero_row_minor(const IntMatrix& b);

/// gcd of all 2x2 minors of an n x 2 matrix; 1 iff the columns span a
/// saturated lattice.
Int minor_gcd(const IntMatrix& b);

/// Indices (p, q) of the first column pair spanning the column space of a
/// rank-2 matrix: p is the first nonzero column, q the first later column
/// independent of it. Throws RankError if the column rank is below 2.
std::pair<std::size_t, std::size_t> independent_column_pair(const IntMatrix& a);

/// Exact 2x2 integer inverse of a unimodular matrix. Throws InputError when
/// the determinant is not +-1.
IntMatrix inverse_unimodular2(const IntMatrix& t);
PlanePoint apply2(const IntMatrix& t, const PlanePoint& p);

std::string to_string(const Rat& q);

} // namespace nnirank2
