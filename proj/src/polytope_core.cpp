#include "cyclotoric/polytope_core.hpp"

#include <algorithm>
#include <utility>

namespace cyclo {

CycloParams::CycloParams(int d, std::vector<Int> tau) : d_(d), tau_(std::move(tau)) {
  if (d_ < 1) throw ValidationError("d must be at least 1");
  if (static_cast<int>(tau_.size()) < d_ + 1)
    throw ValidationError("need n >= d+1 parameters (d=" + std::to_string(d_) +
                          ", n=" + std::to_string(tau_.size()) + ")");
  for (std::size_t i = 1; i < tau_.size(); ++i)
    if (!(tau_[i - 1] < tau_[i])) throw ValidationError("tau must be strictly increasing");
}

Int CycloParams::delta_tilde(int i, int j) const {
  Int product = 1;
  for (int k = 1; k <= i; ++k) product *= delta(k, j);
  return product;
}

std::vector<Int> CycloParams::gaps() const {
  std::vector<Int> g;
  g.reserve(tau_.size() - 1);
  for (std::size_t i = 1; i < tau_.size(); ++i) g.push_back(tau_[i] - tau_[i - 1]);
  return g;
}

CycloParams build_params(int d, std::vector<Int> tau) { return CycloParams(d, std::move(tau)); }

CycloParams params_from_gaps(int d, const std::vector<Int>& gaps) {
  std::vector<Int> tau{Int(0)};
  for (const auto& g : gaps) tau.push_back(tau.back() + g);
  return CycloParams(d, std::move(tau));
}

IntVec vertex(const CycloParams& p, int i) {
  IntVec v(static_cast<std::size_t>(p.d() + 1));
  v[0] = 1;
  for (int r = 1; r <= p.d(); ++r) v[r] = v[r - 1] * p.tau(i);
  return v;
}

IntMat moment_matrix(const CycloParams& p) {
  IntMat m(static_cast<std::size_t>(p.d() + 1), IntVec(static_cast<std::size_t>(p.n())));
  for (int i = 1; i <= p.n(); ++i) {
    const IntVec v = vertex(p, i);
    for (int r = 0; r <= p.d(); ++r) m[r][i - 1] = v[r];
  }
  return m;
}

TransformedMatrix transform(const CycloParams& p) {
  const int d = p.d();
  IntMat m = moment_matrix(p);
  IntMat u = identity(static_cast<std::size_t>(d + 1));
  // Stage k multiplies every row r >= k by (x - tau_k) in the Newton basis:
  // row_r -= tau_k * row_{r-1}, bottom-up so row_{r-1} is still the old one.
  for (int k = 1; k <= d; ++k) {
    const Int& t = p.tau(k);
    for (int r = d; r >= k; --r) {
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= t * m[r - 1][c];
      for (std::size_t c = 0; c < u[r].size(); ++c) u[r][c] -= t * u[r - 1][c];
    }
  }
  TransformedMatrix result{std::move(m), std::move(u), {}};
  result.inverse_factor = unimodular_inverse(result.unimodular_factor);
  return result;
}

CycloParams reverse_negate(const CycloParams& p) {
  std::vector<Int> tau(p.tau().rbegin(), p.tau().rend());
  for (auto& t : tau) t = -t;
  return CycloParams(p.d(), std::move(tau));
}

CycloParams translate(const CycloParams& p, const Int& m) {
  std::vector<Int> tau = p.tau();
  for (auto& t : tau) t += m;
  return CycloParams(p.d(), std::move(tau));
}

CycloParams canonical_form(const CycloParams& p) {
  std::vector<Int> g = p.gaps();
  std::vector<Int> rev(g.rbegin(), g.rend());
  if (std::lexicographical_compare(rev.begin(), rev.end(), g.begin(), g.end())) g = rev;
  return params_from_gaps(p.d(), g);
}

IntMat translation_map(int d, const Int& m) {
  // (tau + m)^r = sum_j C(r, j) m^(r-j) tau^j
  IntMat t(static_cast<std::size_t>(d + 1), IntVec(static_cast<std::size_t>(d + 1), 0));
  for (int r = 0; r <= d; ++r) {
    for (int j = 0; j <= r; ++j) {
      Int power;
      mpz_pow_ui(power.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(r - j));
      t[r][j] = binomial(static_cast<unsigned>(r), static_cast<unsigned>(j)) * power;
    }
  }
  return t;
}

IntMat negation_map(int d) {
  IntMat t = identity(static_cast<std::size_t>(d + 1));
  for (int r = 1; r <= d; r += 2) t[r][r] = -1;
  return t;
}

}  // namespace cyclo
