#include "cyclotoric/semigroup_kp.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace cyclo {

bool member_kp(const LatticePoint& z_moment, const CycloParams& p, std::uint64_t budget) {
  if (static_cast<int>(z_moment.size()) != p.d() + 1) throw ValidationError("point has wrong length");
  const PolytopeCone cone(p, Frame::transformed);
  const IntVec z = cone.from_moment(z_moment);
  if (z[0] < 0 || !cone.contains(z)) return false;
  if (z[0] == 0) return is_zero(z);
  const std::vector<IntVec> generators = cone.points(1, false, budget);
  std::unordered_map<IntVec, bool, IntVecHash> memo;
  std::function<bool(const IntVec&)> reachable = [&](const IntVec& y) -> bool {
    if (y[0] == 0) return is_zero(y);
    if (auto it = memo.find(y); it != memo.end()) return it->second;
    bool found = false;
    for (const auto& a : generators) {
      const IntVec rest = sub(y, a);
      if (cone.contains(rest) && reachable(rest)) {
        found = true;
        break;
      }
    }
    memo.emplace(y, found);
    return found;
  };
  return reachable(z);
}

NormalityResult is_normal_kp(const CycloParams& p, std::optional<int> max_degree,
                             std::uint64_t budget) {
  const int top = max_degree.value_or(p.d());
  const PolytopeCone cone(p, Frame::transformed);
  std::vector<std::vector<Int>> generators;
  cone.visit_with_slacks(1, false, budget, [&](const IntVec&, const std::vector<Int>& s) {
    generators.push_back(s);
    return true;
  });
  NormalityResult result;
  result.max_degree_checked = std::max(top, 1);
  // Degrees are checked in increasing order, so when degree k is examined
  // every lattice point of degree k-1 is already known to be in the
  // semigroup: z is reachable iff z - a stays in the cone for some generator
  // a, that is iff the facet values of a are bounded by those of z.
  const std::size_t facet_count = cone.facets().size();
  auto dominates = [&](const std::vector<Int>& z, const std::vector<Int>& a) {
    for (std::size_t j = 0; j < facet_count; ++j)
      if (a[j] > z[j]) return false;
    return true;
  };
  std::size_t last_good = 0;
  for (int k = 2; k <= top; ++k) {
    std::vector<IntVec> gaps;
    cone.visit_with_slacks(k, false, budget, [&](const IntVec& z, const std::vector<Int>& zs) {
      for (std::size_t t = 0; t < generators.size(); ++t) {
        const std::size_t idx = (last_good + t) % generators.size();
        if (dominates(zs, generators[idx])) {
          last_good = idx;
          return true;
        }
      }
      gaps.push_back(cone.to_moment(z));
      return true;
    });
    if (!gaps.empty()) {
      result.normal = false;
      result.witness = *std::min_element(gaps.begin(), gaps.end());
      result.max_degree_checked = k;
      return result;
    }
  }
  return result;
}

R1Verification verify_r1(const CycloParams& p) {
  R1Verification out;
  for (const auto& w : facets(p)) {
    ++out.facets_checked;
    const FacetChainBasis chain = facet_chain_basis(w, p);
    const SupportForm sigma = support_form(w, p);
    for (std::size_t j = 0; j < chain.vectors.size(); ++j) {
      const bool on_facet = sigma.value_on(chain.vectors[j]) == 0;
      const bool in_cone = std::all_of(chain.coefficients[j].begin(), chain.coefficients[j].end(),
                                       [](const auto& kv) { return kv.second >= 0; });
      if (!on_facet || !in_cone)
        out.failures.push_back("facet " + to_string(IntVec(w.begin(), w.end())) + ": chain vector c_" +
                               std::to_string(j + 1) + " not an integer point of the facet");
    }
    if (chain.lattice_index != 1)
      out.failures.push_back("facet " + to_string(IntVec(w.begin(), w.end())) +
                             ": chain basis has lattice index " + chain.lattice_index.get_str());
    for (int k = 1; k <= p.n(); ++k) {
      if (std::binary_search(w.begin(), w.end(), k)) continue;
      ++out.witnesses_checked;
      const R1Witness x = r1_witness(w, k, p);
      if (!x.ok())
        out.failures.push_back("facet " + to_string(IntVec(w.begin(), w.end())) + ", apex " +
                               std::to_string(k) + ": witness " + to_string(x.x) + " has sigma " +
                               x.sigma.get_str() + (x.in_cone() ? "" : " and lies outside the cone"));
    }
  }
  out.holds = out.failures.empty();
  return out;
}

bool gorenstein_theorem(const CycloParams& p) {
  if (p.d() != 2 || p.n() != 3) return false;
  const auto g = p.gaps();
  return (g[0] == 1 && g[1] == 2) || (g[0] == 2 && g[1] == 1);
}

const char* status_name(GorensteinStatus s) {
  switch (s) {
    case GorensteinStatus::gorenstein: return "gorenstein";
    case GorensteinStatus::not_gorenstein: return "not_gorenstein";
    case GorensteinStatus::inconclusive: return "inconclusive";
    case GorensteinStatus::not_run: return "not_run";
  }
  return "unknown";
}

GorensteinOracle gorenstein_oracle(const CycloParams& p, std::optional<bool> normal) {
  GorensteinOracle out;
  if (normal == false) {
    out.status = GorensteinStatus::not_gorenstein;
    out.reason = "not normal, hence not Cohen-Macaulay";
    return out;
  }
  IntMat system;
  for (const auto& h : facet_hyperplanes(p, Frame::moment)) system.push_back(h.normal());
  const IntVec ones(system.size(), 1);
  const auto solution = solve_full_column_rank(system, ones);
  if (!solution) {
    out.status = GorensteinStatus::not_gorenstein;
    out.reason = "sigma_F(c) = 1 has no rational solution";
    return out;
  }
  if (!std::all_of(solution->begin(), solution->end(), [](const Rat& q) { return is_integral(q); })) {
    out.status = GorensteinStatus::not_gorenstein;
    out.reason = "unique solution of sigma_F(c) = 1 is not integral";
    return out;
  }
  IntVec c;
  for (const auto& q : *solution) c.push_back(to_int(q));
  out.generator = c;
  if (normal == true) {
    out.status = GorensteinStatus::gorenstein;
    out.reason = "integer c with sigma_F(c) = 1 on every facet";
  } else {
    out.status = GorensteinStatus::inconclusive;
    out.reason = "sigma system solvable but normality undecided";
  }
  return out;
}

bool GorensteinWitnesses::all_verified() const {
  if (oracle_needed) return true;
  if (points.size() < 2) return false;
  return std::all_of(interior_in_simplex.begin(), interior_in_simplex.end(), [](bool b) { return b; }) &&
         std::all_of(interior_in_polytope.begin(), interior_in_polytope.end(), [](bool b) { return b; });
}

namespace {

IntVec point(std::initializer_list<Int> coords) { return IntVec(coords); }

CycloParams restrict_to(const CycloParams& p, const IndexSet& subset) {
  std::vector<Int> tau;
  for (int i : subset) tau.push_back(p.tau(i));
  return CycloParams(p.d(), std::move(tau));
}

// Fills branch/points for a simplex instance; may replace `sub` by its
// reverse-negation (and then sets `reversed`).
void simplex_branch(CycloParams& sub, GorensteinWitnesses& out) {
  const int d = sub.d();
  auto g = sub.gaps();
  if (d == 2) {
    if (g[0] == 1 && g[1] == 1) {
      out.branch = "d2_gaps_1_1";
      out.oracle_needed = true;
      return;
    }
    if (g[0] < g[1]) {
      sub = reverse_negate(sub);
      out.reversed = true;
      g = sub.gaps();
    }
    if (g[1] >= 2) {
      out.branch = "d2_both_gaps_at_least_2";
      out.points = {point({1, 1, 1}), point({1, 2, 2})};
    } else {
      out.branch = "d2_gap_at_least_3_and_1";
      out.points = {point({1, 2, 1}), point({1, 3, 1})};
    }
    return;
  }
  if (d == 3) {
    if (g[0] == 1 && g[1] == 1 && g[2] == 1) {
      out.branch = "d3_gaps_1_1_1";
      out.oracle_needed = true;
      return;
    }
    if (g[1] == 1 && g[0] == 1) {
      sub = reverse_negate(sub);
      out.reversed = true;
      g = sub.gaps();
    }
    const Int d12 = sub.delta(1, 2), d13 = sub.delta(1, 3);
    if (g[1] >= 2) {
      out.branch = "d3_middle_gap_at_least_2";
      out.points = {point({1, d12 + 1, d13 + 1, 1}), point({1, d12 + 1, d13 + 1, 2})};
    } else if (g[2] >= 2) {
      out.branch = "d3_outer_gaps_at_least_2";
      out.points = {point({1, 2, 2, 1}), point({1, 2, 2, 2})};
    } else {
      out.branch = "d3_first_gap_at_least_2";
      out.points = {point({1, d12, d12, 1}), point({1, d12 + 1, d12 + 2, 3})};
    }
    return;
  }
  // d >= 4
  for (int q = 1; q <= 2; ++q) {
    IntVec x(static_cast<std::size_t>(d + 1));
    x[0] = 1;
    if (d % 2 == 0) {
      for (int j = 1; j <= d - 2; ++j) x[j] = sub.delta(1, j + 1) + 1;
      x[d - 1] = sub.delta(1, d);
      x[d] = q;
    } else {
      for (int j = 1; j <= d - 1; ++j) x[j] = sub.delta(1, j + 1) + 1;
      x[d] = sub.delta(1, d + 1) - q;
    }
    out.points.push_back(std::move(x));
  }
  out.branch = d % 2 == 0 ? "even_d_alpha" : "odd_d_beta";
}

}  // namespace

GorensteinWitnesses gorenstein_witnesses(const CycloParams& p) {
  if (gorenstein_theorem(p))
    throw NoWitnessExpected("no witness expected: parameters are in the Gorenstein case");
  GorensteinWitnesses out;
  const int d = p.d();
  const int n = p.n();
  if (d == 1) {
    out.branch = "d1_segment";
    out.oracle_needed = true;
    return out;
  }
  const auto gaps = p.gaps();
  if (d == 2) {
    if (n == 3) {
      out.subset = {1, 2, 3};
    } else if (n == 4) {
      if (gaps[0] == 1 && gaps[1] == 1 && gaps[2] == 1) {
        out.branch = "d2_n4_gaps_1_1_1";
        out.oracle_needed = true;
        return out;
      }
      out.subset = {1, 3, 4};
    } else {
      out.subset = {1, 4, 5};
    }
  } else if (d == 3) {
    out.subset = n == 4 ? IndexSet{1, 2, 3, 4} : IndexSet{1, 3, 4, 5};
  } else {
    for (int i = 1; i <= d + 1; ++i) out.subset.push_back(i);
  }

  const CycloParams original_sub = restrict_to(p, out.subset);
  CycloParams sub = original_sub;
  simplex_branch(sub, out);
  if (n > d + 1) out.branch += "_via_subsimplex";
  out.sub_tau = sub.tau();
  if (out.oracle_needed) return out;

  const std::vector<Hyperplane> halfspaces = simplex_halfspaces(sub);
  const IntMat to_moment = transform(sub).inverse_factor;
  const std::vector<Hyperplane> polytope_facets = facet_hyperplanes(p, Frame::moment);
  for (const auto& x : out.points) {
    out.interior_in_simplex.push_back(std::all_of(halfspaces.begin(), halfspaces.end(), [&](const Hyperplane& h) {
      return h.slack(x, Frame::transformed) > 0;
    }));
    IntVec y = cyclo::apply(to_moment, x);
    if (out.reversed) y = cyclo::apply(negation_map(d), y);
    out.interior_in_polytope.push_back(std::all_of(polytope_facets.begin(), polytope_facets.end(),
                                                   [&](const Hyperplane& h) { return h.slack(y, Frame::moment) > 0; }));
    out.points_moment.push_back(std::move(y));
  }
  return out;
}

RingReportKP classify_kp(const CycloParams& p, const KpOptions& options) {
  RingReportKP report;
  // A smaller bound could only certify degrees below d, which proves nothing.
  report.max_degree = std::max(options.max_degree.value_or(p.d()), p.d());
  const NormalityResult normality = is_normal_kp(p, report.max_degree, options.budget);
  report.normal = normality.normal;
  report.nonnormal_witness = normality.witness;
  report.cohen_macaulay = report.s2 = report.seminormal = report.normal;

  const R1Verification r1 = verify_r1(p);
  report.r1 = r1.holds;
  report.r1_failures = r1.failures;

  report.h_star = h_star(p, options.budget);
  report.interior_k1 = interior_count(p, 1, options.budget);
  report.gorenstein_theorem = gorenstein_theorem(p);
  if (!report.gorenstein_theorem) report.witnesses = gorenstein_witnesses(p);

  if (options.oracle) {
    report.gorenstein_oracle = gorenstein_oracle(p, report.normal);
    report.gorenstein_oracle.h_star_palindromic = report.h_star.palindromic();
    const auto status = report.gorenstein_oracle.status;
    if (status == GorensteinStatus::gorenstein || status == GorensteinStatus::not_gorenstein) {
      const bool oracle_says = status == GorensteinStatus::gorenstein;
      if (oracle_says != report.gorenstein_theorem)
        report.discrepancy = std::string("closed-form predicate says ") +
                             (report.gorenstein_theorem ? "Gorenstein" : "not Gorenstein") +
                             ", exact oracle says " + (oracle_says ? "Gorenstein" : "not Gorenstein");
    }
  }
  return report;
}

}  // namespace cyclo
