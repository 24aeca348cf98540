// K[Q]: the semigroup generated by the vertices v_1..v_n alone.

#pragma once

#include "cyclotoric/lattice_geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclo {

/// The lattice ZQ spanned by a set of generators, in Hermite normal form.
class GeneratorLattice {
 public:
  explicit GeneratorLattice(const std::vector<IntVec>& generators);

  const IntMat& hnf_basis() const { return basis_; }
  /// [Z^{d+1} : ZQ]; zero when the generators do not have full rank.
  const Int& index_in_ambient() const { return index_; }
  bool contains(const IntVec& z) const;

 private:
  IntMat basis_;
  Int index_;
};

GeneratorLattice generator_lattice(const CycloParams& p);

struct KernelBinomial {
  IntVec c;  // primitive, c_1 > 0, moment_matrix * c = 0
  IndexSet u_support;
  IndexSet v_support;
  std::vector<Int> u_exponents;  // a_i = c_i for i in u_support
  std::vector<Int> v_exponents;  // b_j = -c_j for j in v_support
  bool u_squarefree = false;
  bool v_squarefree = false;
  Int degree;  // sum of a_i
};

/// The generator u - v of the principal toric ideal when n = d+2.
KernelBinomial kernel_binomial(const CycloParams& p);

/// Least s in [d+2, n] with delta_tilde(d, d+1) not dividing delta_tilde(d, s).
std::optional<int> divisibility_test(const CycloParams& p);

enum class Tri { yes, no, unknown };
const char* tri_name(Tri t);

struct BruteforceResult {
  Tri normal = Tri::unknown;  // unknown means the budget ran out
  std::optional<LatticePoint> witness;  // moment coordinates
  int degrees_completed = 0;
  std::string note;
};

/// Searches cone cap ZQ for points of degree 1..max_degree (default d) that
/// are not sums of vertices. Budget exhaustion yields Tri::unknown, and so
/// does a clean search that stops below degree d: points of degree at most
/// d together with the vertices generate cone cap ZQ, so only a search
/// reaching d can certify normality.
BruteforceResult is_normal_kq_bruteforce(const CycloParams& p, std::optional<int> max_degree = std::nullopt,
                                         std::uint64_t budget = default_budget());

enum class KqCase { simplex_regular, curve_d1, principal_d2, general };
const char* case_name(KqCase c);

enum class KqEvidence {
  regularity,
  equal_spacing,
  kernel_binomial,
  divisibility_witness,
  bruteforce_witness,
  bruteforce_exhaustive,
  none
};
const char* evidence_name(KqEvidence e);

struct RingReportKQ {
  KqCase kq_case = KqCase::general;
  Tri normal = Tri::unknown;
  bool complete_intersection = false;
  KqEvidence evidence = KqEvidence::none;
  std::optional<KernelBinomial> kernel;
  std::optional<int> divisibility_index;
  std::optional<BruteforceResult> bruteforce;
  std::optional<std::string> discrepancy;
};

RingReportKQ classify_kq(const CycloParams& p, bool use_bruteforce = false,
                         std::optional<int> max_degree = std::nullopt,
                         std::uint64_t budget = default_budget());

}  // namespace cyclo
