#include "cyclotoric/lattice_geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cyclo {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CYCLOTORIC_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100'000'000ULL;
}

PolytopeCone::PolytopeCone(const CycloParams& p, Frame frame)
    : params_(p), frame_(frame), facets_(facet_hyperplanes(p, frame)) {
  const auto size = static_cast<std::size_t>(p.d() + 1);
  IntMat cols;
  if (frame == Frame::moment) {
    cols = moment_matrix(p);
    to_moment_ = identity(size);
    from_moment_ = identity(size);
  } else {
    TransformedMatrix t = transform(p);
    cols = std::move(t.entries);
    to_moment_ = std::move(t.inverse_factor);
    from_moment_ = std::move(t.unimodular_factor);
  }
  vertices_ = transpose(cols);
}

IntVec PolytopeCone::to_moment(const IntVec& z) const { return cyclo::apply(to_moment_, z); }
IntVec PolytopeCone::from_moment(const IntVec& z) const { return cyclo::apply(from_moment_, z); }

bool PolytopeCone::contains(const IntVec& z) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Hyperplane& h) { return h.slack(z, frame_) >= 0; });
}

bool PolytopeCone::contains_interior(const IntVec& z) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Hyperplane& h) { return h.slack(z, frame_) > 0; });
}

namespace {

struct Box {
  std::vector<Int> lo, hi;  // index 0 unused (degree is fixed)
};

Box degree_box(const std::vector<IntVec>& vertices, const Int& k, int d) {
  Box b;
  b.lo.assign(static_cast<std::size_t>(d + 1), 0);
  b.hi.assign(static_cast<std::size_t>(d + 1), 0);
  for (int r = 1; r <= d; ++r) {
    Int lo = vertices[0][r], hi = vertices[0][r];
    for (const auto& v : vertices) {
      if (v[r] < lo) lo = v[r];
      if (v[r] > hi) hi = v[r];
    }
    b.lo[r] = k * lo;
    b.hi[r] = k * hi;
  }
  return b;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Depth-first search with interval propagation: at each level the range of
// the current coordinate is cut by every facet, bounding the unassigned
// coordinates by the box.
class Search {
 public:
  Search(const std::vector<Hyperplane>& facets, const Box& box, const Int& k, bool strict, int d,
         const PolytopeCone::SlackVisitor& visit)
      : facets_(facets), box_(box), strict_(strict), d_(d), visit_(visit) {
    const std::size_t f = facets.size();
    point_.assign(static_cast<std::size_t>(d + 1), 0);
    point_[0] = k;
    // rest_max_[r][f]: max over the box of sum_{i>r} a_i x_i
    rest_max_.assign(static_cast<std::size_t>(d + 1), std::vector<Int>(f, 0));
    for (std::size_t j = 0; j < f; ++j) {
      Int acc = 0;
      for (int r = d; r >= 0; --r) {
        rest_max_[r][j] = acc;
        if (r >= 1) {
          const Int& a = facets[j].normal()[r];
          acc += a > 0 ? Int(a * box.hi[r]) : Int(a * box.lo[r]);
        }
      }
    }
    partial_.assign(static_cast<std::size_t>(d + 1), std::vector<Int>(f, 0));
    for (std::size_t j = 0; j < f; ++j) partial_[0][j] = facets[j].normal()[0] * k;
  }

  bool run() { return descend(1); }

 private:
  bool descend(int r) {
    if (r > d_) return visit_(point_, partial_[d_]);
    Int lo = box_.lo[r], hi = box_.hi[r];
    const Int need = strict_ ? 1 : 0;
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      const Int& a = facets_[j].normal()[r];
      // a * x_r >= need - partial - rest_max
      const Int rhs = need - partial_[r - 1][j] - rest_max_[r][j];
      if (a > 0) {
        const Int b = ceil_div(rhs, a);
        if (b > lo) lo = b;
      } else if (a < 0) {
        const Int b = floor_div(rhs, a);
        if (b < hi) hi = b;
      } else if (rhs > 0) {
        return true;
      }
      if (lo > hi) return true;
    }
    for (Int x = lo; x <= hi; ++x) {
      point_[r] = x;
      for (std::size_t j = 0; j < facets_.size(); ++j)
        partial_[r][j] = partial_[r - 1][j] + facets_[j].normal()[r] * x;
      if (!descend(r + 1)) return false;
    }
    return true;
  }

  const std::vector<Hyperplane>& facets_;
  const Box& box_;
  bool strict_;
  int d_;
  const PolytopeCone::SlackVisitor& visit_;
  IntVec point_;
  std::vector<std::vector<Int>> rest_max_;
  std::vector<std::vector<Int>> partial_;
};

}  // namespace

Int PolytopeCone::box_volume(const Int& k) const {
  const Box b = degree_box(vertices_, k, params_.d());
  Int volume = 1;
  for (int r = 1; r <= params_.d(); ++r) volume *= b.hi[r] - b.lo[r] + 1;
  return volume;
}

bool PolytopeCone::visit(const Int& k, bool interior_only, std::uint64_t budget,
                         const std::function<bool(const IntVec&)>& visit) const {
  return visit_with_slacks(k, interior_only, budget,
                           [&](const IntVec& z, const std::vector<Int>&) { return visit(z); });
}

std::vector<Int> PolytopeCone::slacks(const IntVec& z) const {
  std::vector<Int> out;
  out.reserve(facets_.size());
  for (const auto& h : facets_) out.push_back(h.slack(z, frame_));
  return out;
}

bool PolytopeCone::visit_with_slacks(const Int& k, bool interior_only, std::uint64_t budget,
                                     const SlackVisitor& visit) const {
  if (k < 0) throw ValidationError("degree must be nonnegative");
  if (k == 0) {
    // The origin is the only point of degree 0 and is never interior.
    if (interior_only) return true;
    const IntVec origin(static_cast<std::size_t>(params_.d() + 1), 0);
    return visit(origin, std::vector<Int>(facets_.size(), 0));
  }
  const Int volume = box_volume(k);
  if (volume > Int(std::to_string(budget)))
    throw BudgetExceeded("degree-" + k.get_str() + " bounding box has " + volume.get_str() +
                         " candidates, budget is " + std::to_string(budget));
  const Box b = degree_box(vertices_, k, params_.d());
  Search search(facets_, b, k, interior_only, params_.d(), visit);
  return search.run();
}

std::vector<IntVec> PolytopeCone::points(const Int& k, bool interior_only,
                                         std::uint64_t budget) const {
  std::vector<IntVec> out;
  visit(k, interior_only, budget, [&](const IntVec& z) {
    out.push_back(z);
    return true;
  });
  return out;
}

std::vector<LatticePoint> enumerate_points(const CycloParams& p, const Int& k, bool interior_only,
                                           Frame frame, std::uint64_t budget) {
  const PolytopeCone cone(p, frame);
  std::vector<LatticePoint> out;
  cone.visit(k, interior_only, budget, [&](const IntVec& z) {
    out.push_back(cone.to_moment(z));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> ehrhart_counts(const CycloParams& p, int k_max, std::uint64_t budget) {
  const PolytopeCone cone(p, Frame::transformed);
  std::vector<Int> counts;
  for (int k = 0; k <= k_max; ++k) {
    Int count = 0;
    cone.visit(k, false, budget, [&](const IntVec&) {
      ++count;
      return true;
    });
    counts.push_back(count);
  }
  return counts;
}

Int HStarVector::sum() const {
  Int s = 0;
  for (const auto& x : h) s += x;
  return s;
}

bool HStarVector::palindromic() const {
  std::size_t len = h.size();
  while (len > 0 && h[len - 1] == 0) --len;
  for (std::size_t i = 0; i < len; ++i)
    if (h[i] != h[len - 1 - i]) return false;
  return true;
}

HStarVector h_star_from_counts(const std::vector<Int>& counts, int d) {
  if (static_cast<int>(counts.size()) < d + 1) throw ValidationError("need L(0..d)");
  HStarVector out;
  for (int j = 0; j <= d; ++j) {
    Int h = 0;
    for (int i = 0; i <= j; ++i) {
      const Int term = binomial(static_cast<unsigned>(d + 1), static_cast<unsigned>(i)) * counts[j - i];
      h += (i % 2 == 0) ? term : Int(-term);
    }
    if (h < 0) throw InvariantFailure("negative h* entry: enumeration is inconsistent");
    out.h.push_back(h);
  }
  if (out.h[0] != 1) throw InvariantFailure("h*_0 must be 1");
  return out;
}

HStarVector h_star(const CycloParams& p, std::uint64_t budget) {
  return h_star_from_counts(ehrhart_counts(p, p.d(), budget), p.d());
}

Int interior_count(const CycloParams& p, const Int& k, std::uint64_t budget) {
  const PolytopeCone cone(p, Frame::transformed);
  Int count = 0;
  cone.visit(k, true, budget, [&](const IntVec&) {
    ++count;
    return true;
  });
  return count;
}

Int vandermonde(const CycloParams& p) {
  Int v = 1;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i + 1; j <= p.n(); ++j) v *= p.delta(i, j);
  return v;
}

}  // namespace cyclo
