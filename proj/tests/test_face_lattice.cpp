#include "cyclotoric/face_lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cyclo;

namespace {
CycloParams P(int d, std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return build_params(d, v);
}
}  // namespace

TEST_CASE("decomposition into end sets and inner blocks") {
  const auto dec = decompose({1, 2, 5, 6, 7, 9}, 10);
  CHECK(dec.y1 == IndexSet{1, 2});
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0] == IndexSet{5, 6, 7});
  CHECK(dec.blocks[1] == IndexSet{9});
  CHECK(dec.y2.empty());
  CHECK(decompose({1, 2, 3, 4, 5}, 5).y1 == IndexSet{1, 2, 3, 4, 5});
  const auto single = decompose({3}, 5);
  CHECK(single.blocks == std::vector<IndexSet>{{3}});
  CHECK(single.y1.empty());
  CHECK(single.y2.empty());
}

TEST_CASE("face types") {
  CHECK(face_type({1, 2, 5, 6, 7, 9}, 10) == FaceType{6, 2});
  CHECK(face_type({1, 2}, 4) == FaceType{2, 0});
  CHECK(face_type({2, 4}, 4) == FaceType{2, 1});
}

TEST_CASE("face predicate examples") {
  CHECK_FALSE(is_face({1, 3}, P(2, {0, 1, 2, 3})));
  CHECK(is_face({2, 3}, P(3, {0, 1, 2, 3, 4})));
  CHECK(is_face({}, P(2, {0, 1, 3})));
  CHECK_THROWS_AS(normalize_subset({0, 2}, 3), ValidationError);
}

TEST_CASE("facet lists") {
  CHECK(facets(P(2, {0, 1, 2, 3})) == std::vector<IndexSet>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(facets(P(2, {0, 1, 3})) == std::vector<IndexSet>{{1, 2}, {1, 3}, {2, 3}});
  const auto f = facets(P(4, {0, 1, 2, 3, 4, 5}));
  CHECK(std::find(f.begin(), f.end(), IndexSet{1, 2, 3, 4}) != f.end());
  CHECK(std::find(f.begin(), f.end(), IndexSet{1, 2, 3, 5}) == f.end());
}

TEST_CASE("faces and facets agree with brute force") {
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= d + 3; ++n) {
      std::mt19937_64 rng(static_cast<unsigned>(d * 10 + n));
      const auto tau = oracle::tau_from_gaps(oracle::random_gaps(rng, n - 1, 3));
      const CycloParams p = build_params(d, tau);
      const auto brute = oracle::brute_facets(tau, d);
      std::vector<IndexSet> expected;
      for (const auto& b : brute) expected.push_back(b.w);
      CHECK(facets(p) == expected);
      for (int k = 0; k <= std::min(d, n - 1); ++k)
        for (const auto& w : oracle::subsets(n, k)) CHECK(is_face(w, p) == oracle::brute_is_face(w, brute, n));
    }
}

TEST_CASE("facet hyperplane examples") {
  const CycloParams p = P(2, {0, 1, 3});
  const Hyperplane h = facet_hyperplane({2, 3}, p);
  CHECK(h.normal() == IntVec{3, -4, 1});
  CHECK(h.rhs() == 0);
  CHECK(h.sense() == Sense::geq);
  CHECK(facet_hyperplane({1, 2}, p).normal() == IntVec{0, -1, 1});
  CHECK(facet_hyperplane({1}, P(1, {0, 2})).normal() == IntVec{0, 1});
  CHECK_THROWS_AS(facet_hyperplane({1, 3}, P(2, {0, 1, 2, 3})), ValidationError);
}

TEST_CASE("frames are not mixed") {
  const CycloParams p = P(2, {0, 1, 3});
  const Hyperplane h = facet_hyperplane({2, 3}, p, Frame::transformed);
  CHECK_THROWS_AS(h.slack({1, 0, 0}, Frame::moment), ValidationError);
  const TransformedMatrix t = transform(p);
  for (int i = 1; i <= 3; ++i) {
    const IntVec v = cyclo::apply(t.unimodular_factor, vertex(p, i));
    CHECK((h.slack(v, Frame::transformed) == 0) == (i != 1));
  }
}

TEST_CASE("closed-form simplex halfspaces") {
  const auto hs = simplex_halfspaces(P(2, {0, 1, 3}));
  REQUIRE(hs.size() == 3);
  CHECK(hs[0].normal() == IntVec{0, 3, -1});
  CHECK(hs[0].rhs() == 3);
  CHECK(hs[0].sense() == Sense::leq);
  CHECK(hs[1].normal() == IntVec{0, 2, -1});
  CHECK(hs[1].rhs() == 0);
  CHECK(hs[2].normal() == IntVec{0, 0, 1});
  const auto h3 = simplex_halfspaces(P(3, {0, 1, 3, 7}));
  CHECK(h3[2].normal() == IntVec{0, 0, 4, -1});
}

TEST_CASE("simplex halfspaces are the transformed facet hyperplanes") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const int d = 1 + t % 6;
    const CycloParams p = build_params(d, oracle::tau_from_gaps(oracle::random_gaps(rng, d, 4)));
    const auto hs = simplex_halfspaces(p);
    const TransformedMatrix tm = transform(p);
    // H_i is the facet [n] \ {i}: it vanishes there at degree one and is valid at vertex i
    for (int i = 1; i <= d + 1; ++i) {
      const Hyperplane& h = hs[static_cast<std::size_t>(i - 1)];
      for (int j = 1; j <= d + 1; ++j) {
        const IntVec v = cyclo::apply(tm.unimodular_factor, vertex(p, j));
        const Int s = h.slack(v, Frame::transformed);
        if (j == i) CHECK(s > 0);
        else CHECK(s == 0);
      }
      IndexSet w;
      for (int j = 1; j <= d + 1; ++j)
        if (j != i) w.push_back(j);
      const Hyperplane f = facet_hyperplane(w, p, Frame::transformed);
      const Hyperplane o = h.oriented();
      // same halfspace up to a positive multiple once homogenized
      IntVec homog = o.normal();
      homog[0] -= o.rhs();
      CHECK(primitive(homog) == f.normal());
    }
  }
}

TEST_CASE("nonface partitions") {
  using Part = std::pair<IndexSet, IndexSet>;
  CHECK(nonface_partitions(P(2, {0, 1, 2, 3})) == std::vector<Part>{{{1, 3}, {2, 4}}});
  CHECK(nonface_partitions(P(3, {0, 1, 2, 3, 4})) == std::vector<Part>{{{1, 3, 5}, {2, 4}}});
  CHECK(nonface_partitions(P(4, {0, 1, 2, 3, 4, 5})) == std::vector<Part>{{{1, 3, 5}, {2, 4, 6}}});
}
