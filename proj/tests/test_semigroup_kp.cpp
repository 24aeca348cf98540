#include "cyclotoric/semigroup_kp.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cyclo;

namespace {
CycloParams P(int d, std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return build_params(d, v);
}

// Normality up to degree d by explicit sumsets of degree-one points.
bool sumset_normal(const std::vector<Int>& tau, int d) {
  const auto gens = oracle::brute_points(tau, d, 1, false);
  std::set<oracle::IntVec> sums(gens.begin(), gens.end());
  for (int k = 2; k <= d; ++k) {
    std::set<oracle::IntVec> next;
    for (const auto& s : sums)
      for (const auto& g : gens) {
        oracle::IntVec z(s.size());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = s[i] + g[i];
        next.insert(z);
      }
    for (const auto& z : oracle::brute_points(tau, d, k, false))
      if (!next.count(z)) return false;
    sums = next;
  }
  return true;
}
}  // namespace

TEST_CASE("membership") {
  const CycloParams p = P(2, {0, 1, 3});
  CHECK(member_kp(add(vertex(p, 1), vertex(p, 2)), p));
  CHECK_FALSE(member_kp({0, 1, 0}, p));
  for (const auto& z : enumerate_points(p, 1, false)) CHECK(member_kp(z, p));
  CHECK_FALSE(member_kp({1, 5, 0}, p));
}

TEST_CASE("normality examples") {
  CHECK(is_normal_kp(P(2, {0, 1, 3})).normal);
  CHECK(is_normal_kp(P(1, {0, 7})).normal);
  CHECK(is_normal_kp(P(3, {0, 1, 2, 3})).normal);
  CHECK(is_normal_kp(P(2, {0, 1, 2})).normal);
  // consecutive parameters stop being normal at d = 4
  const NormalityResult r = is_normal_kp(P(4, {0, 1, 2, 3, 4}));
  CHECK_FALSE(r.normal);
  REQUIRE(r.witness);
  CHECK(*r.witness == IntVec{2, 3, 6, 14, 37});
  CHECK_FALSE(member_kp(*r.witness, P(4, {0, 1, 2, 3, 4})));
}

TEST_CASE("normality agrees with explicit sumsets") {
  for (const auto& tau : std::vector<std::vector<Int>>{{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 5}, {0, 1, 2, 3, 5}}) {
    const CycloParams p = build_params(3, tau);
    const NormalityResult r = is_normal_kp(p);
    CHECK(r.normal == sumset_normal(tau, 3));
    if (!r.normal) {
      REQUIRE(r.witness);
      CHECK_FALSE(member_kp(*r.witness, p));
    }
  }
}

TEST_CASE("(R1) certificates") {
  CHECK(verify_r1(P(2, {0, 1, 3})).holds);
  CHECK(verify_r1(P(3, {0, 1, 2, 3, 5})).holds);
}

TEST_CASE("Gorenstein predicate") {
  CHECK(gorenstein_theorem(P(2, {0, 1, 3})));
  CHECK(gorenstein_theorem(P(2, {0, 2, 3})));
  CHECK_FALSE(gorenstein_theorem(P(3, {0, 1, 2, 3})));
  CHECK_FALSE(gorenstein_theorem(P(2, {0, 2, 4})));
}

TEST_CASE("Gorenstein oracle") {
  const GorensteinOracle g = gorenstein_oracle(P(2, {0, 1, 3}), true);
  CHECK(g.status == GorensteinStatus::gorenstein);
  REQUIRE(g.generator);
  CHECK(*g.generator == IntVec{1, 1, 2});
  // the generator solves sigma = 1 on the brute-force facets
  for (const auto& f : oracle::brute_facets({0, 1, 3}, 2)) CHECK(oracle::dot(f.normal, *g.generator) == 1);
  CHECK(gorenstein_oracle(P(2, {0, 2, 4}), true).status == GorensteinStatus::not_gorenstein);
  CHECK(gorenstein_oracle(P(2, {0, 1, 3}), false).status == GorensteinStatus::not_gorenstein);
  CHECK(gorenstein_oracle(P(2, {0, 1, 3}), std::nullopt).status == GorensteinStatus::inconclusive);
}

TEST_CASE("Gorenstein witnesses") {
  const GorensteinWitnesses w = gorenstein_witnesses(P(2, {0, 2, 4}));
  CHECK(w.points == std::vector<IntVec>{{1, 1, 1}, {1, 2, 2}});
  CHECK(w.all_verified());
  CHECK_THROWS_AS(gorenstein_witnesses(P(2, {0, 1, 3})), NoWitnessExpected);
  CHECK(gorenstein_witnesses(P(2, {0, 1, 2})).oracle_needed);

  const GorensteinWitnesses a = gorenstein_witnesses(P(4, {0, 1, 2, 3, 4}));
  CHECK(a.branch == "even_d_alpha");
  CHECK(a.points == std::vector<IntVec>{{1, 2, 3, 3, 1}, {1, 2, 3, 3, 2}});
  CHECK(a.all_verified());
  const GorensteinWitnesses b = gorenstein_witnesses(P(5, {0, 1, 2, 3, 4, 5}));
  CHECK(b.branch == "odd_d_beta");
  CHECK(b.points == std::vector<IntVec>{{1, 2, 3, 4, 5, 4}, {1, 2, 3, 4, 5, 3}});
  CHECK(b.all_verified());
}

TEST_CASE("witness points are interior by brute-force facets") {
  for (const auto& [d, tau] : std::vector<std::pair<int, std::vector<Int>>>{
           {2, {0, 3, 4}}, {2, {0, 1, 4}}, {2, {0, 1, 2, 4}}, {2, {0, 1, 2, 3, 4}}, {3, {0, 1, 3, 4}},
           {3, {0, 2, 3, 4}}, {3, {0, 1, 2, 3, 4}}, {4, {0, 1, 3, 4, 6}}}) {
    const GorensteinWitnesses w = gorenstein_witnesses(build_params(d, tau));
    REQUIRE_FALSE(w.oracle_needed);
    CHECK(w.all_verified());
    const auto brute = oracle::brute_facets(tau, d);
    for (const auto& x : w.points_moment)
      for (const auto& f : brute) CHECK(oracle::dot(f.normal, x) > 0);
  }
}

TEST_CASE("classification reports") {
  const RingReportKP a = classify_kp(P(2, {0, 1, 3}));
  CHECK(a.normal);
  CHECK(a.cohen_macaulay);
  CHECK(a.r1);
  CHECK(a.gorenstein_theorem);
  CHECK(a.gorenstein_oracle.status == GorensteinStatus::gorenstein);
  CHECK_FALSE(a.discrepancy);
  CHECK(a.interior_k1 == 1);

  const RingReportKP b = classify_kp(P(2, {0, 2, 4}));
  CHECK(b.normal);
  CHECK_FALSE(b.gorenstein_theorem);
  CHECK(b.gorenstein_oracle.status == GorensteinStatus::not_gorenstein);
  CHECK_FALSE(b.discrepancy);

  const RingReportKP c = classify_kp(P(2, {0, 1, 2}));
  const bool decided = c.gorenstein_oracle.status == GorensteinStatus::gorenstein ||
                       c.gorenstein_oracle.status == GorensteinStatus::not_gorenstein;
  REQUIRE(decided);
  const bool oracle_says = c.gorenstein_oracle.status == GorensteinStatus::gorenstein;
  CHECK(c.discrepancy.has_value() == (oracle_says != c.gorenstein_theorem));

  KpOptions no_oracle;
  no_oracle.oracle = false;
  CHECK(classify_kp(P(2, {0, 1, 3}), no_oracle).gorenstein_oracle.status == GorensteinStatus::not_run);
}
