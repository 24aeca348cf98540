#include "cyclotoric/polytope_core.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cyclo;

namespace {
std::vector<Int> T(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(build_params(2, T({0, 1, 3})));
  CHECK_THROWS_WITH_AS(build_params(2, T({0, 0, 3})), "tau must be strictly increasing", ValidationError);
  CHECK_THROWS_AS(build_params(3, T({0, 1, 2})), ValidationError);
  CHECK_THROWS_AS(build_params(0, T({0, 1})), ValidationError);
}

TEST_CASE("moment matrix columns") {
  const IntMat m = moment_matrix(build_params(2, T({0, 1, 3})));
  CHECK(transpose(m) == IntMat{{1, 0, 0}, {1, 1, 1}, {1, 3, 9}});
  CHECK(transpose(moment_matrix(build_params(1, T({0, 2})))) == IntMat{{1, 0}, {1, 2}});
  const IntMat big = moment_matrix(build_params(3, T({0, 1, 2, 3, 4})));
  CHECK(big.size() == 4);
  CHECK(transpose(big)[4] == IntVec{1, 4, 16, 64});
}

TEST_CASE("transform examples") {
  CHECK(transpose(transform(build_params(2, T({0, 1, 3}))).entries) == IntMat{{1, 0, 0}, {1, 1, 0}, {1, 3, 6}});
  CHECK(transpose(transform(build_params(2, T({0, 1, 2, 3}))).entries) ==
        IntMat{{1, 0, 0}, {1, 1, 0}, {1, 2, 2}, {1, 3, 6}});
}

TEST_CASE("transform matches the delta product formula on random instances") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const int d = 1 + t % 5;
    const int n = d + 1 + static_cast<int>(rng() % 3);
    const auto tau = oracle::tau_from_gaps(oracle::random_gaps(rng, n - 1, 5), Int(static_cast<long>(rng() % 11) - 5));
    const CycloParams p = build_params(d, tau);
    const TransformedMatrix tm = transform(p);
    for (int r = 0; r <= d; ++r)
      for (int j = 1; j <= n; ++j) {
        Int expect = 1;
        for (int k = 1; k <= r; ++k) expect *= tau[static_cast<std::size_t>(j - 1)] - tau[static_cast<std::size_t>(k - 1)];
        CHECK(tm.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)] == expect);
      }
    CHECK(multiply(tm.unimodular_factor, moment_matrix(p)) == tm.entries);
    CHECK(oracle::det_int(tm.unimodular_factor) == 1);
    CHECK(multiply(tm.unimodular_factor, tm.inverse_factor) == identity(static_cast<std::size_t>(d + 1)));
  }
}

TEST_CASE("reverse-negation, translation and canonical form") {
  const CycloParams p = build_params(2, T({0, 1, 3}));
  CHECK(reverse_negate(p).tau() == T({-3, -1, 0}));
  CHECK(reverse_negate(p).gaps() == T({2, 1}));
  CHECK(translate(p, 5).tau() == T({5, 6, 8}));
  CHECK(canonical_form(build_params(2, T({5, 6, 8}))).tau() == T({0, 1, 3}));
  CHECK(canonical_form(build_params(2, T({0, 2, 3}))).tau() == T({0, 1, 3}));
  CHECK(canonical_form(p) == p);
  const CycloParams q = translate(p, -p.tau(1));
  CHECK(q.tau(1) == 0);
}

TEST_CASE("translation and negation maps act on vertices") {
  const CycloParams p = build_params(3, T({-2, 1, 4, 5}));
  const IntMat tm = translation_map(3, 7);
  const IntMat nm = negation_map(3);
  const CycloParams shifted = translate(p, 7);
  for (int i = 1; i <= p.n(); ++i) {
    CHECK(cyclo::apply(tm, vertex(p, i)) == vertex(shifted, i));
    IntVec neg = vertex(p, i);
    for (std::size_t r = 1; r < neg.size(); r += 2) neg[r] = -neg[r];
    CHECK(cyclo::apply(nm, vertex(p, i)) == neg);
  }
  CHECK(std::abs(oracle::det_int(tm).get_si()) == 1);
}

TEST_CASE("arbitrary magnitude parameters") {
  const Int big("100000000000000000000");
  const CycloParams p = build_params(2, {big, big + 1, big + 3});
  CHECK(canonical_form(p).tau() == T({0, 1, 3}));
  CHECK(p.delta_tilde(2, 3) == 6);
}
