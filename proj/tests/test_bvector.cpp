#include "cyclotoric/bvector.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cyclo;

namespace {
CycloParams P(int d, std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return build_params(d, v);
}

IntVec as_int(const std::vector<Rat>& q) {
  IntVec out;
  for (const auto& x : q) {
    REQUIRE(x.get_den() == 1);
    out.push_back(x.get_num());
  }
  return out;
}
}  // namespace

TEST_CASE("b-vector examples") {
  const CycloParams p = P(2, {0, 1, 3});
  CHECK(bvec({1}, p).value == vertex(p, 1));
  CHECK(bvec({1, 2, 3}, p).value == IntVec{0, 0, 1});
  CHECK(is_zero(bvec({1, 2, 3, 4}, P(2, {0, 1, 2, 5})).value));
  CHECK_THROWS_AS(bvec({}, p), ValidationError);
}

TEST_CASE("b-vectors match the rational definition and the alternating form") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const int d = 1 + static_cast<int>(rng() % 5);
    const int n = d + 1 + static_cast<int>(rng() % 3);
    const auto tau = oracle::tau_from_gaps(oracle::random_gaps(rng, n - 1, 4), Int(static_cast<long>(rng() % 7) - 3));
    const CycloParams p = build_params(d, tau);
    IndexSet s;
    for (int i = 1; i <= n; ++i)
      if (rng() % 2) s.push_back(i);
    if (s.empty()) s.push_back(1);
    const IntVec expect = as_int(oracle::b_rational(s, tau, d));
    CHECK(bvec(s, p).value == expect);
    CHECK(bvec_alternating(s, p) == expect);
    CHECK(is_zero(expect) == (static_cast<int>(s.size()) >= d + 2));
  }
}

TEST_CASE("recursion identity") {
  CHECK(bvec_recursion_check({1, 2, 3}, 1, 3, P(2, {0, 1, 3})));
  CHECK(bvec_recursion_check({1, 2}, 1, 2, P(2, {0, 1, 3})));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 500; ++t) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const int n = d + 1 + static_cast<int>(rng() % 3);
    const CycloParams p = build_params(d, oracle::tau_from_gaps(oracle::random_gaps(rng, n - 1, 4)));
    IndexSet s;
    for (int i = 1; i <= n; ++i)
      if (rng() % 2) s.push_back(i);
    if (s.size() < 2) s = {1, n};
    const int a = s[rng() % s.size()];
    int b = a;
    while (b == a) b = s[rng() % s.size()];
    CHECK(bvec_recursion_check(s, a, b, p));
  }
  CHECK_THROWS_AS(bvec_recursion_check({1, 2}, 1, 1, P(2, {0, 1, 3})), ValidationError);
}

TEST_CASE("basis matrices are unimodular in any order") {
  CHECK(std::abs(oracle::det_int(basis_matrix({1, 2, 3}, P(2, {0, 1, 3}))).get_si()) == 1);
  CHECK(std::abs(oracle::det_int(basis_matrix({3, 1, 2}, P(2, {0, 1, 3}))).get_si()) == 1);
  CHECK(std::abs(oracle::det_int(basis_matrix({1, 2}, P(1, {0, 5}))).get_si()) == 1);
  const IntMat rows = basis_matrix({1, 2, 3}, P(2, {0, 1, 3}));
  CHECK(rows[0] == IntVec{1, 0, 0});
  CHECK(rows[2] == IntVec{0, 0, 1});
}

TEST_CASE("support forms") {
  const CycloParams p = P(2, {0, 1, 3});
  CHECK(support_form({2, 3}, p).normal == IntVec{3, -4, 1});
  CHECK(support_form({1, 2}, p).normal == IntVec{0, -1, 1});
  const CycloParams q = P(3, {0, 1, 2, 4, 7, 8});
  for (const auto& w : facets(q)) {
    const SupportForm s = support_form(w, q);
    for (int i = 1; i <= q.n(); ++i) {
      const bool in = std::binary_search(w.begin(), w.end(), i);
      CHECK((s.value_on(vertex(q, i)) == 0) == in);
      CHECK(s.value_on(vertex(q, i)) >= 0);
    }
  }
}

TEST_CASE("facet chain basis") {
  const FacetChainBasis c = facet_chain_basis({2, 3}, P(2, {0, 1, 3}));
  REQUIRE(c.vectors.size() == 2);
  CHECK(c.vectors[0] == IntVec{1, 2, 5});
  CHECK(c.vectors[1] == IntVec{1, 3, 9});
  CHECK(c.lattice_index == 1);
}

TEST_CASE("chain basis index agrees with the gcd of maximal minors") {
  // The span of c_1..c_d is saturated in the facet lattice iff the gcd of
  // the d x d minors of (c_1..c_d) is 1.
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const int d = 1 + t % 4;
    const int n = d + 1 + static_cast<int>(rng() % 3);
    const CycloParams p = build_params(d, oracle::tau_from_gaps(oracle::random_gaps(rng, n - 1, 3)));
    for (const auto& w : facets(p)) {
      const FacetChainBasis c = facet_chain_basis(w, p);
      CHECK(c.lattice_index == oracle::gcd_of_maximal_minors(c.vectors));
    }
  }
}

TEST_CASE("r1 witness examples") {
  const CycloParams p = P(2, {0, 1, 3});
  const R1Witness w = r1_witness({2, 3}, 1, p);
  CHECK(w.x == IntVec{1, 1, 2});
  CHECK(w.sigma == 1);
  CHECK(w.ok());
  const R1Witness v = r1_witness({1, 2}, 3, p);
  CHECK(v.sigma == 1);
  CHECK(v.ok());
  CHECK_THROWS_AS(r1_witness({1, 2}, 2, p), ValidationError);
}

TEST_CASE("r1 witnesses lie in the cone by brute-force facets") {
  const std::vector<Int> tau{0, 1, 2, 3, 5};
  const CycloParams p = build_params(3, tau);
  const auto brute = oracle::brute_facets(tau, 3);
  for (const auto& w : facets(p))
    for (int a = 1; a <= p.n(); ++a) {
      if (std::binary_search(w.begin(), w.end(), a)) continue;
      const R1Witness r = r1_witness(w, a, p);
      CHECK(r.ok());
      for (const auto& f : brute) {
        CHECK(oracle::dot(f.normal, r.x) >= 0);
        if (f.w == w) CHECK(oracle::dot(f.normal, r.x) == 1);
      }
    }
}
