#include "cyclotoric/vertex_semigroup_kq.hpp"

#include <algorithm>
#include <unordered_set>

namespace cyclo {

GeneratorLattice::GeneratorLattice(const std::vector<IntVec>& generators)
    : basis_(hermite_normal_form(IntMat(generators.begin(), generators.end()))), index_(0) {
  const std::size_t dim = generators.empty() ? 0 : generators[0].size();
  if (basis_.size() == dim) {
    index_ = 1;
    for (std::size_t i = 0; i < dim; ++i) index_ *= basis_[i][i];
  }
}

bool GeneratorLattice::contains(const IntVec& z) const {
  IntVec rest = z;
  std::size_t row = 0;
  for (std::size_t col = 0; col < rest.size(); ++col) {
    if (row < basis_.size() && basis_[row][col] != 0) {
      const Int& pivot = basis_[row][col];
      if (!mpz_divisible_p(rest[col].get_mpz_t(), pivot.get_mpz_t())) return false;
      const Int q = rest[col] / pivot;
      for (std::size_t j = col; j < rest.size(); ++j) rest[j] -= q * basis_[row][j];
      ++row;
    } else if (rest[col] != 0) {
      return false;
    }
  }
  return true;
}

GeneratorLattice generator_lattice(const CycloParams& p) {
  return GeneratorLattice(transpose(moment_matrix(p)));
}

KernelBinomial kernel_binomial(const CycloParams& p) {
  if (p.n() != p.d() + 2) throw ValidationError("kernel_binomial requires n = d+2");
  KernelBinomial k;
  k.c = primitive(cofactor_normal(moment_matrix(p)));
  if (k.c[0] < 0) k.c = negate(std::move(k.c));
  k.degree = 0;
  for (int i = 1; i <= p.n(); ++i) {
    const Int& ci = k.c[static_cast<std::size_t>(i - 1)];
    if (ci > 0) {
      k.u_support.push_back(i);
      k.u_exponents.push_back(ci);
      k.degree += ci;
    } else if (ci < 0) {
      k.v_support.push_back(i);
      k.v_exponents.push_back(-ci);
    }
  }
  auto squarefree = [](const std::vector<Int>& e) {
    return std::all_of(e.begin(), e.end(), [](const Int& x) { return x == 1; });
  };
  k.u_squarefree = squarefree(k.u_exponents);
  k.v_squarefree = squarefree(k.v_exponents);
  return k;
}

std::optional<int> divisibility_test(const CycloParams& p) {
  const int d = p.d();
  if (p.n() < d + 3) throw ValidationError("divisibility_test requires n >= d+3");
  const Int base = p.delta_tilde(d, d + 1);
  for (int s = d + 2; s <= p.n(); ++s) {
    const Int value = p.delta_tilde(d, s);
    if (!mpz_divisible_p(value.get_mpz_t(), base.get_mpz_t())) return s;
  }
  return std::nullopt;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

BruteforceResult is_normal_kq_bruteforce(const CycloParams& p, std::optional<int> max_degree,
                                         std::uint64_t budget) {
  const int top = max_degree.value_or(p.d());
  const PolytopeCone cone(p, Frame::transformed);
  const GeneratorLattice lattice(cone.vertices());
  BruteforceResult out;
  // sums of exactly k vertices, grown one degree at a time
  std::unordered_set<IntVec, IntVecHash> sums{IntVec(static_cast<std::size_t>(p.d() + 1), 0)};
  for (int k = 1; k <= top; ++k) {
    std::unordered_set<IntVec, IntVecHash> next;
    for (const auto& s : sums)
      for (const auto& v : cone.vertices()) next.insert(add(s, v));
    sums = std::move(next);
    std::vector<IntVec> gaps;
    try {
      cone.visit(k, false, budget, [&](const IntVec& z) {
        if (lattice.contains(z) && !sums.contains(z)) gaps.push_back(cone.to_moment(z));
        return true;
      });
    } catch (const BudgetExceeded& e) {
      out.normal = Tri::unknown;
      out.note = e.what();
      return out;
    }
    if (!gaps.empty()) {
      out.normal = Tri::no;
      out.witness = *std::min_element(gaps.begin(), gaps.end());
      out.degrees_completed = k;
      return out;
    }
    out.degrees_completed = k;
  }
  if (top < p.d()) {
    out.note = "no gap up to degree " + std::to_string(top) + ", but completeness needs degree " +
               std::to_string(p.d());
    return out;
  }
  out.normal = Tri::yes;
  return out;
}

const char* case_name(KqCase c) {
  switch (c) {
    case KqCase::simplex_regular: return "simplex_regular";
    case KqCase::curve_d1: return "curve_d1";
    case KqCase::principal_d2: return "principal_d2";
    case KqCase::general: return "general";
  }
  return "general";
}

const char* evidence_name(KqEvidence e) {
  switch (e) {
    case KqEvidence::regularity: return "regularity";
    case KqEvidence::equal_spacing: return "equal_spacing";
    case KqEvidence::kernel_binomial: return "kernel_binomial";
    case KqEvidence::divisibility_witness: return "divisibility_witness";
    case KqEvidence::bruteforce_witness: return "bruteforce_witness";
    case KqEvidence::bruteforce_exhaustive: return "bruteforce_exhaustive";
    case KqEvidence::none: return "none";
  }
  return "none";
}

RingReportKQ classify_kq(const CycloParams& p, bool use_bruteforce, std::optional<int> max_degree,
                         std::uint64_t budget) {
  RingReportKQ r;
  const int d = p.d();
  const int n = p.n();
  r.complete_intersection = n == d + 2;
  if (n == d + 2) r.kernel = kernel_binomial(p);

  if (n == d + 1) {
    r.kq_case = KqCase::simplex_regular;
    r.normal = Tri::yes;
    r.evidence = KqEvidence::regularity;
  } else if (d == 1) {
    r.kq_case = KqCase::curve_d1;
    const auto g = p.gaps();
    r.normal = std::all_of(g.begin(), g.end(), [&](const Int& x) { return x == g[0]; }) ? Tri::yes : Tri::no;
    r.evidence = KqEvidence::equal_spacing;
  } else if (n == d + 2) {
    r.kq_case = KqCase::principal_d2;
    r.evidence = KqEvidence::kernel_binomial;
    if (r.kernel->u_squarefree || r.kernel->v_squarefree) {
      r.normal = Tri::unknown;
      r.discrepancy = "kernel binomial has a squarefree side although d >= 2 and n = d+2";
    } else {
      r.normal = Tri::no;
    }
  } else {
    r.kq_case = KqCase::general;
    r.divisibility_index = divisibility_test(p);
    if (r.divisibility_index) {
      r.normal = Tri::no;
      r.evidence = KqEvidence::divisibility_witness;
    }
  }

  if (use_bruteforce) {
    r.bruteforce = is_normal_kq_bruteforce(p, max_degree, budget);
    const Tri oracle = r.bruteforce->normal;
    if (oracle != Tri::unknown) {
      if (r.normal == Tri::unknown) {
        r.normal = oracle;
        r.evidence = oracle == Tri::no ? KqEvidence::bruteforce_witness : KqEvidence::bruteforce_exhaustive;
      } else if (r.normal != oracle && !r.discrepancy) {
        r.discrepancy = std::string("case rule says normal=") + tri_name(r.normal) +
                        ", brute force says normal=" + tri_name(oracle);
      }
    }
  }
  return r;
}

}  // namespace cyclo
