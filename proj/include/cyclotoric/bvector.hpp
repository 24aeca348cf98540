// The vectors b_S = sum_{i in S} v_i / prod_{j in S\{i}} Delta_ij and the
// lattice constructions built from them: Z-bases of Z^{d+1}, bases of the
// lattice points on a facet hyperplane, and points at height one over a
// facet. All work is in moment coordinates.

#pragma once

#include "cyclotoric/face_lattice.hpp"
#include "cyclotoric/integer.hpp"
#include "cyclotoric/polytope_core.hpp"

#include <map>
#include <vector>

namespace cyclo {

/// A rational combination of the vertices, keyed by 1-based vertex index.
using VertexCombination = std::map<int, Rat>;

struct BVector {
  IndexSet index_set;
  IntVec value;
};

/// Coefficients of b_S over the vertices {v_i : i in S}.
VertexCombination bvec_coefficients(const IndexSet& s, const CycloParams& p);
/// Evaluates a vertex combination; throws InvariantFailure if non-integral.
IntVec evaluate(const VertexCombination& combo, const CycloParams& p);

BVector bvec(const IndexSet& s, const CycloParams& p);
/// b_S via the alternating sum of reciprocals of |Delta| products, computed
/// independently of bvec.
IntVec bvec_alternating(const IndexSet& s, const CycloParams& p);

/// b_S == b_{S\a} / Delta_ba + b_{S\b} / Delta_ab, evaluated exactly.
bool bvec_recursion_check(const IndexSet& s, int a, int b, const CycloParams& p);

/// Rows b_{i1}, b_{i1 i2}, ..., b_{i1 ... i_{d+1}} for the given order.
IntMat basis_matrix(const std::vector<int>& order, const CycloParams& p);

struct SupportForm {
  IndexSet facet_indices;
  IntVec normal;

  Int value_on(const IntVec& x) const { return dot(normal, x); }
};

SupportForm support_form(const IndexSet& w, const CycloParams& p);

struct FacetChainBasis {
  IndexSet facet;
  std::vector<IntVec> vectors;                  // c_1, ..., c_d
  std::vector<VertexCombination> coefficients;  // c_j over {v_i : i in W}
  /// [Z^{d+1} intersect {sigma_W = 0} : span(c_1..c_d)], via HNF.
  Int lattice_index;
};

FacetChainBasis facet_chain_basis(const IndexSet& w, const CycloParams& p);

struct R1Witness {
  IndexSet facet;
  int apex = 0;
  IndexSet parity_subset;
  IntVec x;
  Int sigma;                     // sigma_W(x), expected 1
  VertexCombination coefficients;  // x over {v_i : i in W + apex}
  bool nonnegative_coefficients = false;
  bool satisfies_all_facets = false;  // sigma_F(x) >= 0 for every facet F

  bool in_cone() const { return nonnegative_coefficients && satisfies_all_facets; }
  bool ok() const { return sigma == 1 && in_cone(); }
};

R1Witness r1_witness(const IndexSet& w, int apex, const CycloParams& p);

}  // namespace cyclo
