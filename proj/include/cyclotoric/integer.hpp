// Exact integer and rational linear algebra used by every other module.
//
// Vectors and matrices are plain std::vector containers over GMP integers;
// matrices are row-major (a vector of rows). Nothing here uses floating point.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclo {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

/// Bad user input: malformed parameters, subsets outside [n], wrong shapes.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would visit more candidate points than the configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed at runtime. Always an arithmetic bug.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Int gcd_of(const IntVec& v);
/// Divides out the content. The zero vector is returned unchanged.
IntVec primitive(IntVec v);

Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& c, const IntVec& v);
IntVec negate(IntVec v);
bool is_zero(const IntVec& v);

IntMat identity(std::size_t n);
IntMat transpose(const IntMat& m);
IntMat multiply(const IntMat& a, const IntMat& b);
IntVec apply(const IntMat& m, const IntVec& v);

/// Fraction-free Gaussian elimination (Bareiss). Square input only.
Int determinant(IntMat m);

/// Inverse of a matrix with determinant +-1; throws InvariantFailure otherwise.
IntMat unimodular_inverse(const IntMat& m);

/// Generalized cross product of k rows in Z^(k+1): the vector of signed
/// maximal minors. It is orthogonal to every row and vanishes iff the rows
/// are dependent.
IntVec cofactor_normal(const IntMat& rows);

/// Row-style Hermite normal form of the lattice spanned by `rows`.
/// Returns only the nonzero rows; pivots are positive and entries above a
/// pivot are reduced into [0, pivot).
IntMat hermite_normal_form(IntMat rows);

/// Solves A x = b over Q when A has full column rank. Returns nullopt when
/// the system is inconsistent; throws ValidationError when A is rank-deficient.
std::optional<RatVec> solve_full_column_rank(const IntMat& a, const IntVec& b);

/// Rank over Q.
std::size_t rank(const IntMat& m);

/// Index of the lattice spanned by `rows` inside its saturation, computed as
/// the gcd of maximal minors. Rows must be linearly independent.
Int saturation_index(const IntMat& rows);

/// Some w with <coeffs, w> = gcd(coeffs), via iterated extended gcd.
IntVec bezout_vector(const IntVec& coeffs);

bool is_integral(const Rat& q);
Int to_int(const Rat& q);  // throws InvariantFailure when not integral

std::string to_string(const Int& z);
std::string to_string(const IntVec& v);  // "(a,b,c)"
bool fits_int64(const Int& z);

/// Parses a decimal integer of arbitrary magnitude; throws ValidationError.
Int parse_int(const std::string& text);

Int binomial(unsigned n, unsigned k);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

}  // namespace cyclo
