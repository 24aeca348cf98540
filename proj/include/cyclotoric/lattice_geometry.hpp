// Lattice points in dilations of the homogenized cyclic polytope P*:
// enumeration (optionally interior-only), Ehrhart counts and h*-vectors.
//
// A point of degree k is an integer vector z with z_0 = k lying in the cone
// over P*. Enumeration runs in either coordinate frame; the transformed
// frame has much smaller coordinates and is the default.

#pragma once

#include "cyclotoric/face_lattice.hpp"
#include "cyclotoric/integer.hpp"
#include "cyclotoric/polytope_core.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace cyclo {

using LatticePoint = IntVec;  // coords; degree is coords[0]

inline const Int& degree(const LatticePoint& z) { return z.at(0); }

/// Cap on bounding-box candidates per enumeration. Defaults to 1e8,
/// overridden by the CYCLOTORIC_BUDGET environment variable.
std::uint64_t default_budget();

/// The cone over P* in one coordinate frame, with everything enumeration needs.
class PolytopeCone {
 public:
  PolytopeCone(const CycloParams& p, Frame frame);

  const CycloParams& params() const { return params_; }
  Frame frame() const { return frame_; }
  const std::vector<Hyperplane>& facets() const { return facets_; }
  /// Vertex i (1-based) in this frame.
  const IntVec& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<IntVec>& vertices() const { return vertices_; }

  IntVec to_moment(const IntVec& z) const;
  IntVec from_moment(const IntVec& z) const;

  bool contains(const IntVec& z) const;          // in the closed cone
  bool contains_interior(const IntVec& z) const;  // strictly inside every facet

  /// Number of integer candidates in the degree-k bounding box.
  Int box_volume(const Int& k) const;

  /// Calls `visit` for every lattice point of degree k (in this frame) in
  /// lexicographic order until it returns false. Returns false iff stopped
  /// early. Throws BudgetExceeded when the box is larger than `budget`.
  bool visit(const Int& k, bool interior_only, std::uint64_t budget,
             const std::function<bool(const IntVec&)>& visit) const;

  std::vector<IntVec> points(const Int& k, bool interior_only, std::uint64_t budget) const;

  /// Facet values m_F . z, in the order of facets().
  std::vector<Int> slacks(const IntVec& z) const;
  /// Like visit, but also hands over the facet values of each point.
  using SlackVisitor = std::function<bool(const IntVec&, const std::vector<Int>&)>;
  bool visit_with_slacks(const Int& k, bool interior_only, std::uint64_t budget,
                         const SlackVisitor& visit) const;

 private:
  CycloParams params_;
  Frame frame_;
  std::vector<Hyperplane> facets_;
  std::vector<IntVec> vertices_;
  IntMat to_moment_;
  IntMat from_moment_;
};

/// Degree-k lattice points in moment coordinates, lexicographically sorted.
/// `frame` selects where the search runs; the result does not depend on it.
std::vector<LatticePoint> enumerate_points(const CycloParams& p, const Int& k, bool interior_only,
                                           Frame frame = Frame::transformed,
                                           std::uint64_t budget = default_budget());

std::vector<Int> ehrhart_counts(const CycloParams& p, int k_max,
                                std::uint64_t budget = default_budget());

struct HStarVector {
  std::vector<Int> h;  // h_0 .. h_d

  Int sum() const;
  /// Symmetric after dropping trailing zeros.
  bool palindromic() const;
};

HStarVector h_star(const CycloParams& p, std::uint64_t budget = default_budget());
HStarVector h_star_from_counts(const std::vector<Int>& counts, int d);

Int interior_count(const CycloParams& p, const Int& k, std::uint64_t budget = default_budget());

/// prod_{i<j} Delta_ij: normalized volume of the simplex when n = d+1.
Int vandermonde(const CycloParams& p);

}  // namespace cyclo
