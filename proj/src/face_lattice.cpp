#include "cyclotoric/face_lattice.hpp"

#include <algorithm>
#include <string>

namespace cyclo {

IndexSet normalize_subset(IndexSet w, int n) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (int i : w)
    if (i < 1 || i > n)
      throw ValidationError("index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
  return w;
}

SubsetDecomposition decompose(const IndexSet& raw, int n) {
  const IndexSet w = normalize_subset(raw, n);
  SubsetDecomposition out;
  std::size_t lo = 0;
  std::size_t hi = w.size();
  // Y1: run 1, 2, ..., i
  while (lo < hi && w[lo] == static_cast<int>(lo) + 1) out.y1.push_back(w[lo++]);
  // Y2: run i, ..., n-1, n (only from what Y1 did not consume)
  std::size_t tail = hi;
  while (tail > lo && w[tail - 1] == n - static_cast<int>(hi - tail)) --tail;
  out.y2.assign(w.begin() + static_cast<std::ptrdiff_t>(tail), w.end());
  hi = tail;
  for (std::size_t i = lo; i < hi; ++i) {
    if (out.blocks.empty() || out.blocks.back().back() + 1 != w[i]) out.blocks.emplace_back();
    out.blocks.back().push_back(w[i]);
  }
  return out;
}

FaceType face_type(const IndexSet& w, int n) {
  const SubsetDecomposition dec = decompose(w, n);
  FaceType t;
  t.r = static_cast<int>(dec.y1.size() + dec.y2.size());
  for (const auto& block : dec.blocks) {
    t.r += static_cast<int>(block.size());
    if (block.size() % 2 == 1) ++t.s;
  }
  return t;
}

bool is_face(const IndexSet& w, const CycloParams& p) {
  const FaceType t = face_type(w, p.n());
  return t.r <= p.d() && t.s <= p.d() - t.r;
}

std::vector<IndexSet> facets(const CycloParams& p) {
  const int n = p.n();
  const int d = p.d();
  std::vector<IndexSet> out;
  IndexSet pick(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pick[i] = i + 1;
  while (true) {
    const FaceType t = face_type(pick, n);
    if (t.s == 0) out.push_back(pick);
    int i = d;
    while (i > 0 && pick[i - 1] == n - d + i) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (int j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

const char* frame_name(Frame f) { return f == Frame::moment ? "moment" : "transformed"; }

Hyperplane::Hyperplane(IntVec normal, Int rhs, Sense sense, IndexSet facet_indices, Frame frame)
    : normal_(std::move(normal)),
      rhs_(std::move(rhs)),
      sense_(sense),
      facet_indices_(std::move(facet_indices)),
      frame_(frame) {}

Int Hyperplane::slack(const IntVec& x, Frame point_frame) const {
  if (point_frame != frame_)
    throw ValidationError(std::string("hyperplane in ") + frame_name(frame_) +
                          " frame evaluated at a point in " + frame_name(point_frame) + " frame");
  const Int value = dot(normal_, x);
  return sense_ == Sense::geq ? Int(value - rhs_) : Int(rhs_ - value);
}

Hyperplane Hyperplane::oriented() const {
  if (sense_ == Sense::geq) return *this;
  return Hyperplane(negate(normal_), -rhs_, Sense::geq, facet_indices_, frame_);
}

namespace {

IntVec column(const IntMat& m, int i) {
  IntVec v(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) v[r] = m[r][static_cast<std::size_t>(i - 1)];
  return v;
}

Hyperplane hyperplane_from_columns(const IndexSet& w, const IntMat& cols, int n, Frame frame) {
  IntMat rows;
  rows.reserve(w.size());
  for (int i : w) rows.push_back(column(cols, i));
  IntVec normal = primitive(cofactor_normal(rows));
  int sign = 0;
  for (int j = 1; j <= n; ++j) {
    if (std::binary_search(w.begin(), w.end(), j)) continue;
    const int s = sgn(dot(normal, column(cols, j)));
    if (s == 0) throw InvariantFailure("vertex on a facet hyperplane outside its facet");
    if (sign == 0) sign = s;
    if (s != sign) throw ValidationError("not a facet: vertices on both sides of its hyperplane");
  }
  if (sign < 0) normal = negate(std::move(normal));
  return Hyperplane(std::move(normal), 0, Sense::geq, w, frame);
}

}  // namespace

Hyperplane facet_hyperplane(const IndexSet& raw, const CycloParams& p, Frame frame) {
  const IndexSet w = normalize_subset(raw, p.n());
  if (static_cast<int>(w.size()) != p.d())
    throw ValidationError("a facet has exactly d indices");
  if (face_type(w, p.n()).s != 0) throw ValidationError("not a facet: fails the evenness condition");
  const IntMat cols = frame == Frame::moment ? moment_matrix(p) : transform(p).entries;
  return hyperplane_from_columns(w, cols, p.n(), frame);
}

std::vector<Hyperplane> facet_hyperplanes(const CycloParams& p, Frame frame) {
  const IntMat cols = frame == Frame::moment ? moment_matrix(p) : transform(p).entries;
  std::vector<Hyperplane> out;
  for (const auto& w : facets(p)) out.push_back(hyperplane_from_columns(w, cols, p.n(), frame));
  return out;
}

std::vector<Hyperplane> simplex_halfspaces(const CycloParams& p) {
  const int d = p.d();
  if (p.n() != d + 1) throw ValidationError("simplex_halfspaces requires n = d+1");
  const auto size = static_cast<std::size_t>(d + 1);
  std::vector<Hyperplane> out;

  // H_1: (0, prod_{j=3}^{d+1} D_1j, -prod_{j=4}^{d+1} D_1j, ..., (-1)^{d+1}) <= prod_{j=2}^{d+1} D_1j
  {
    IntVec a(size, 0);
    for (int pos = 1; pos <= d; ++pos) {
      Int product = 1;
      for (int j = pos + 2; j <= d + 1; ++j) product *= p.delta(1, j);
      a[pos] = (pos % 2 == 1) ? product : Int(-product);
    }
    Int bound = 1;
    for (int j = 2; j <= d + 1; ++j) bound *= p.delta(1, j);
    IndexSet opposite;
    for (int j = 2; j <= d + 1; ++j) opposite.push_back(j);
    out.emplace_back(std::move(a), std::move(bound), Sense::leq, std::move(opposite), Frame::transformed);
  }
  // H_i, i >= 2: i-1 leading zeros, then prod_{j=i+1}^{d+1} D_ij, -prod_{j=i+2}^{d+1} D_ij, ...
  for (int i = 2; i <= d + 1; ++i) {
    IntVec a(size, 0);
    for (int pos = i - 1; pos <= d; ++pos) {
      Int product = 1;
      for (int j = pos + 2; j <= d + 1; ++j) product *= p.delta(i, j);
      a[pos] = ((pos - (i - 1)) % 2 == 0) ? product : Int(-product);
    }
    IndexSet opposite;
    for (int j = 1; j <= d + 1; ++j)
      if (j != i) opposite.push_back(j);
    out.emplace_back(std::move(a), Int(0), Sense::geq, std::move(opposite), Frame::transformed);
  }
  return out;
}

std::vector<std::pair<IndexSet, IndexSet>> nonface_partitions(const CycloParams& p) {
  const int n = p.n();
  if (n != p.d() + 2) throw ValidationError("nonface_partitions requires n = d+2");
  std::vector<std::pair<IndexSet, IndexSet>> out;
  // element 1 always in F; bit k-2 of mask places element k in F
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    IndexSet f{1};
    IndexSet g;
    for (int k = 2; k <= n; ++k) ((mask >> (k - 2)) & 1UL ? f : g).push_back(k);
    if (!is_face(f, p) && !is_face(g, p)) out.emplace_back(std::move(f), std::move(g));
  }
  return out;
}

}  // namespace cyclo
