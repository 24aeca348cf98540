#include "cyclotoric/bvector.hpp"

#include <algorithm>
#include <string>

namespace cyclo {

namespace {

IndexSet checked_nonempty(const IndexSet& s, const CycloParams& p) {
  if (s.empty()) throw ValidationError("b-vector index set must be nonempty");
  return normalize_subset(s, p.n());
}

void accumulate(VertexCombination& into, const VertexCombination& from, const Rat& factor) {
  for (const auto& [i, c] : from) {
    into[i] += factor * c;
  }
}

}  // namespace

VertexCombination bvec_coefficients(const IndexSet& raw, const CycloParams& p) {
  const IndexSet s = checked_nonempty(raw, p);
  VertexCombination combo;
  for (int i : s) {
    Int denominator = 1;
    for (int j : s)
      if (j != i) denominator *= p.delta(i, j);
    combo[i] = Rat(Int(1), denominator);
    combo[i].canonicalize();
  }
  return combo;
}

IntVec evaluate(const VertexCombination& combo, const CycloParams& p) {
  RatVec sum(static_cast<std::size_t>(p.d() + 1), 0);
  for (const auto& [i, c] : combo) {
    if (c == 0) continue;
    const IntVec v = vertex(p, i);
    for (std::size_t r = 0; r < v.size(); ++r) sum[r] += c * v[r];
  }
  IntVec out(sum.size());
  for (std::size_t r = 0; r < sum.size(); ++r) out[r] = to_int(sum[r]);
  return out;
}

BVector bvec(const IndexSet& s, const CycloParams& p) {
  BVector b;
  b.index_set = checked_nonempty(s, p);
  b.value = evaluate(bvec_coefficients(b.index_set, p), p);
  return b;
}

IntVec bvec_alternating(const IndexSet& raw, const CycloParams& p) {
  const IndexSet s = checked_nonempty(raw, p);
  RatVec sum(static_cast<std::size_t>(p.d() + 1), 0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    Int magnitude = 1;
    for (int j : s)
      if (j != s[k]) magnitude *= abs(p.delta(s[k], j));
    Rat c(k % 2 == 0 ? Int(1) : Int(-1), magnitude);
    c.canonicalize();
    const IntVec v = vertex(p, s[k]);
    for (std::size_t r = 0; r < v.size(); ++r) sum[r] += c * v[r];
  }
  IntVec out(sum.size());
  for (std::size_t r = 0; r < sum.size(); ++r) out[r] = to_int(sum[r]);
  return out;
}

bool bvec_recursion_check(const IndexSet& raw, int a, int b, const CycloParams& p) {
  const IndexSet s = checked_nonempty(raw, p);
  if (a == b) throw ValidationError("recursion check needs a != b");
  if (!std::binary_search(s.begin(), s.end(), a) || !std::binary_search(s.begin(), s.end(), b))
    throw ValidationError("recursion check needs a, b in S");
  IndexSet without_a, without_b;
  for (int i : s) {
    if (i != a) without_a.push_back(i);
    if (i != b) without_b.push_back(i);
  }
  const IntVec lhs = bvec(s, p).value;
  const IntVec ba = bvec(without_a, p).value;
  const IntVec bb = bvec(without_b, p).value;
  Rat fa(Int(1), p.delta(b, a));
  Rat fb(Int(1), p.delta(a, b));
  fa.canonicalize();
  fb.canonicalize();
  for (std::size_t r = 0; r < lhs.size(); ++r) {
    Rat rhs = Rat(ba[r]) * fa + Rat(bb[r]) * fb;
    rhs.canonicalize();
    if (rhs != Rat(lhs[r])) return false;
  }
  return true;
}

IntMat basis_matrix(const std::vector<int>& order, const CycloParams& p) {
  if (static_cast<int>(order.size()) != p.d() + 1)
    throw ValidationError("basis_matrix needs exactly d+1 indices");
  if (normalize_subset(order, p.n()).size() != order.size())
    throw ValidationError("basis_matrix indices must be distinct");
  IntMat rows;
  IndexSet prefix;
  for (int i : order) {
    prefix.push_back(i);
    rows.push_back(bvec(prefix, p).value);
  }
  return rows;
}

SupportForm support_form(const IndexSet& w, const CycloParams& p) {
  const Hyperplane h = facet_hyperplane(w, p, Frame::moment);
  return SupportForm{h.facet_indices(), h.normal()};
}

FacetChainBasis facet_chain_basis(const IndexSet& raw, const CycloParams& p) {
  const SupportForm sigma = support_form(raw, p);
  const IndexSet& w = sigma.facet_indices;
  const int d = p.d();
  FacetChainBasis out;
  out.facet = w;
  // c_j = sum_{l=j}^{d} b_{i_l ... i_d}
  VertexCombination running;
  std::vector<VertexCombination> reversed;
  for (int l = d; l >= 1; --l) {
    const IndexSet tail(w.begin() + (l - 1), w.end());
    accumulate(running, bvec_coefficients(tail, p), Rat(1));
    reversed.push_back(running);
  }
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
    out.coefficients.push_back(*it);
    out.vectors.push_back(evaluate(*it, p));
  }
  // Z^{d+1} = (Z^{d+1} cap ker sigma) + Z w0 for any w0 with sigma(w0) = 1.
  IntMat rows = out.vectors;
  rows.push_back(bezout_vector(sigma.normal));
  if (sigma.value_on(rows.back()) != 1) throw InvariantFailure("support form is not primitive");
  const IntMat hnf = hermite_normal_form(rows);
  if (static_cast<int>(hnf.size()) != d + 1) {
    out.lattice_index = 0;  // rank deficient: does not span the hyperplane
  } else {
    Int index = 1;
    for (int i = 0; i <= d; ++i) index *= hnf[i][i];
    out.lattice_index = index;
  }
  return out;
}

R1Witness r1_witness(const IndexSet& raw, int apex, const CycloParams& p) {
  const SupportForm sigma = support_form(raw, p);
  const IndexSet& w = sigma.facet_indices;
  if (apex < 1 || apex > p.n()) throw ValidationError("apex outside [1,n]");
  if (std::binary_search(w.begin(), w.end(), apex)) throw ValidationError("apex lies in the facet");

  R1Witness out;
  out.facet = w;
  out.apex = apex;
  IndexSet s = w;
  s.insert(std::upper_bound(s.begin(), s.end(), apex), apex);
  const auto apex_position = static_cast<int>(
      std::find(s.begin(), s.end(), apex) - s.begin() + 1);  // 1-based
  const bool apex_odd = apex_position % 2 == 1;
  for (std::size_t pos = 1; pos <= s.size(); ++pos) {
    const bool even_pos = pos % 2 == 0;
    if (even_pos == apex_odd) out.parity_subset.push_back(s[pos - 1]);
  }
  // x' = sum_l b_{j_l ... j_r}, then x = x' +- b_S
  VertexCombination combo;
  const IndexSet& f = out.parity_subset;
  for (std::size_t l = 0; l < f.size(); ++l) {
    const IndexSet tail(f.begin() + static_cast<std::ptrdiff_t>(l), f.end());
    accumulate(combo, bvec_coefficients(tail, p), Rat(1));
  }
  accumulate(combo, bvec_coefficients(s, p), apex_odd ? Rat(1) : Rat(-1));
  for (int i : s) combo[i] += 0;  // every vertex of S gets an explicit entry

  out.coefficients = combo;
  out.x = evaluate(combo, p);
  out.sigma = sigma.value_on(out.x);
  out.nonnegative_coefficients =
      std::all_of(combo.begin(), combo.end(), [](const auto& kv) { return kv.second >= 0; });
  out.satisfies_all_facets = true;
  for (const auto& h : facet_hyperplanes(p, Frame::moment))
    if (h.slack(out.x, Frame::moment) < 0) out.satisfies_all_facets = false;
  return out;
}

}  // namespace cyclo
