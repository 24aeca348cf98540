// Classification of K[P], the semigroup ring of all lattice points of P*:
// membership and normality, the (R1) certificate, Cohen-Macaulay / (S2) /
// seminormal flags (all equal to normality here), and Gorensteinness by the
// closed-form predicate, by an exact support-form oracle, and by explicit
// interior points.

#pragma once

#include "cyclotoric/bvector.hpp"
#include "cyclotoric/lattice_geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclo {

/// Raised when asking for non-Gorenstein witnesses of the Gorenstein case.
class NoWitnessExpected : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Is z a nonnegative integer combination of the degree-1 lattice points?
/// z is in moment coordinates.
bool member_kp(const LatticePoint& z, const CycloParams& p, std::uint64_t budget = default_budget());

struct NormalityResult {
  bool normal = true;
  std::optional<LatticePoint> witness;  // least (degree, lex) gap, moment coordinates
  int max_degree_checked = 0;
};

/// Checks degrees 2..max_degree (default d). Every cone lattice point is a
/// nonnegative integer combination of vertices plus a remainder of degree
/// at most d, so the default bound is complete.
NormalityResult is_normal_kp(const CycloParams& p, std::optional<int> max_degree = std::nullopt,
                             std::uint64_t budget = default_budget());

struct R1Verification {
  bool holds = true;
  int facets_checked = 0;
  int witnesses_checked = 0;
  std::vector<std::string> failures;
};

/// For every facet: the chain basis has lattice index 1 and every apex
/// yields a point at height one in the cone. Failures are collected.
R1Verification verify_r1(const CycloParams& p);

bool gorenstein_theorem(const CycloParams& p);

enum class GorensteinStatus { gorenstein, not_gorenstein, inconclusive, not_run };
const char* status_name(GorensteinStatus s);

struct GorensteinOracle {
  GorensteinStatus status = GorensteinStatus::not_run;
  std::optional<LatticePoint> generator;  // moment coordinates
  std::string reason;
  std::optional<bool> h_star_palindromic;
};

/// `normal` is the normality verdict, or nullopt when it could not be
/// decided. Infeasibility of sigma_F(c) = 1 rules out Gorensteinness either
/// way; feasibility needs normality to conclude.
GorensteinOracle gorenstein_oracle(const CycloParams& p, std::optional<bool> normal);

struct GorensteinWitnesses {
  std::string branch;
  IndexSet subset;          // parameters of the sub-simplex, 1-based in p
  bool reversed = false;    // sub-simplex was replaced by its reverse-negation
  std::vector<Int> sub_tau; // parameters in whose transformed frame `points` live
  std::vector<IntVec> points;
  std::vector<IntVec> points_moment;  // same points in p's moment coordinates
  std::vector<bool> interior_in_simplex;
  std::vector<bool> interior_in_polytope;
  bool oracle_needed = false;

  bool all_verified() const;
};

/// The interior points ruling out Gorensteinness, chosen by the case table
/// on (d, n, gaps). Throws NoWitnessExpected for the Gorenstein cases.
GorensteinWitnesses gorenstein_witnesses(const CycloParams& p);

struct KpOptions {
  bool oracle = true;
  std::optional<int> max_degree;
  std::uint64_t budget = default_budget();
};

struct RingReportKP {
  bool normal = false;
  std::optional<LatticePoint> nonnormal_witness;
  bool cohen_macaulay = false;
  bool s2 = false;
  bool r1 = false;
  bool seminormal = false;
  bool gorenstein_theorem = false;
  GorensteinOracle gorenstein_oracle;
  std::optional<GorensteinWitnesses> witnesses;
  std::optional<std::string> discrepancy;
  std::vector<std::string> r1_failures;
  HStarVector h_star;
  Int interior_k1 = 0;
  int max_degree = 0;
};

RingReportKP classify_kp(const CycloParams& p, const KpOptions& options = {});

}  // namespace cyclo
