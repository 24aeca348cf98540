// Boundary complex of a cyclic polytope: block decomposition of subsets,
// the (r, s) type, face and facet predicates, integer facet hyperplanes in
// either coordinate frame, and the closed-form simplex halfspaces.

#pragma once

#include "cyclotoric/integer.hpp"
#include "cyclotoric/polytope_core.hpp"

#include <utility>
#include <vector>

namespace cyclo {

/// A subset of [n], sorted ascending, 1-based.
using IndexSet = std::vector<int>;

struct SubsetDecomposition {
  IndexSet y1;                  // end set containing 1, or empty
  std::vector<IndexSet> blocks; // maximal contiguous runs strictly inside (1, n)
  IndexSet y2;                  // end set containing n, or empty
};

struct FaceType {
  int r = 0;  // #W
  int s = 0;  // number of odd-cardinality inner blocks

  bool operator==(const FaceType&) const = default;
};

/// Sorts, deduplicates and checks W against [n].
IndexSet normalize_subset(IndexSet w, int n);

SubsetDecomposition decompose(const IndexSet& w, int n);
FaceType face_type(const IndexSet& w, int n);
bool is_face(const IndexSet& w, const CycloParams& p);
/// d-subsets of type (d, 0), lexicographically sorted.
std::vector<IndexSet> facets(const CycloParams& p);

enum class Frame { moment, transformed };
enum class Sense { geq, leq };

const char* frame_name(Frame f);

class Hyperplane {
 public:
  Hyperplane(IntVec normal, Int rhs, Sense sense, IndexSet facet_indices, Frame frame);

  const IntVec& normal() const { return normal_; }
  const Int& rhs() const { return rhs_; }
  Sense sense() const { return sense_; }
  const IndexSet& facet_indices() const { return facet_indices_; }
  Frame frame() const { return frame_; }

  /// Signed distance-like slack, >= 0 on the valid side in either sense.
  /// Refuses a point tagged with a different frame.
  Int slack(const IntVec& x, Frame point_frame) const;
  /// The same halfspace written with sense >=.
  Hyperplane oriented() const;

 private:
  IntVec normal_;
  Int rhs_;
  Sense sense_;
  IndexSet facet_indices_;
  Frame frame_;
};

/// Primitive normal m, rhs 0, sense >=, with m.v_i = 0 on W and m.v_j > 0
/// elsewhere. Coordinates are moment or transformed according to `frame`.
Hyperplane facet_hyperplane(const IndexSet& w, const CycloParams& p, Frame frame = Frame::moment);
std::vector<Hyperplane> facet_hyperplanes(const CycloParams& p, Frame frame = Frame::moment);

/// Closed-form halfspaces of the simplex (n = d+1) in transformed
/// coordinates; element i-1 is H_i. H_1 has sense <= and a positive
/// right-hand side, the others sense >= and rhs 0.
std::vector<Hyperplane> simplex_halfspaces(const CycloParams& p);

/// Partitions F | G of [n] with 1 in F and neither part a face. n = d+2 only.
std::vector<std::pair<IndexSet, IndexSet>> nonface_partitions(const CycloParams& p);

}  // namespace cyclo
