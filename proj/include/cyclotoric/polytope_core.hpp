// Integral cyclic polytopes C_d(tau_1, ..., tau_n): parameters, the moment
// matrix, the triangular (Newton-basis) form and the unimodular
// normalizations used to deduplicate parameter families.
//
// Index convention: everything public is 1-based, matching [n] = {1..n}.
// `tau[i - 1]` holds tau_i and column i of a matrix is stored at position i - 1.

#pragma once

#include "cyclotoric/integer.hpp"

#include <vector>

namespace cyclo {

class CycloParams {
 public:
  /// Validating constructor; see build_params.
  CycloParams(int d, std::vector<Int> tau);

  int d() const { return d_; }
  int n() const { return static_cast<int>(tau_.size()); }
  const std::vector<Int>& tau() const { return tau_; }
  const Int& tau(int i) const { return tau_.at(static_cast<std::size_t>(i - 1)); }

  /// Delta_{ij} = tau_j - tau_i.
  Int delta(int i, int j) const { return tau(j) - tau(i); }
  /// prod_{k=1}^{i} Delta_{kj}; equals 1 for i = 0 and 0 whenever j <= i.
  Int delta_tilde(int i, int j) const;
  /// (Delta_{12}, Delta_{23}, ..., Delta_{n-1,n}).
  std::vector<Int> gaps() const;

  bool operator==(const CycloParams& other) const = default;

 private:
  int d_;
  std::vector<Int> tau_;
};

CycloParams build_params(int d, std::vector<Int> tau);
/// tau_1 = 0 followed by the partial sums of `gaps`.
CycloParams params_from_gaps(int d, const std::vector<Int>& gaps);

/// Column i is v_i = (1, tau_i, tau_i^2, ..., tau_i^d).
IntMat moment_matrix(const CycloParams& p);
IntVec vertex(const CycloParams& p, int i);

struct TransformedMatrix {
  /// Entry (r, j) = delta_tilde(r, j); row 0 all ones, upper triangular.
  IntMat entries;
  /// Lower unitriangular U with U * moment_matrix(p) == entries.
  IntMat unimodular_factor;
  /// U^-1, mapping transformed coordinates back to moment coordinates.
  IntMat inverse_factor;
};

TransformedMatrix transform(const CycloParams& p);

CycloParams reverse_negate(const CycloParams& p);
CycloParams translate(const CycloParams& p, const Int& m);
/// tau_1 = 0 and the gap sequence lexicographically <= its reversal.
CycloParams canonical_form(const CycloParams& p);

/// Linear map on moment coordinates induced by tau -> tau + m.
/// Satisfies translation_map(m) * v_i(tau) = v_i(tau + m).
IntMat translation_map(int d, const Int& m);
/// Linear map induced by tau -> -tau: diag(1, -1, 1, -1, ...).
IntMat negation_map(int d);

}  // namespace cyclo
