#include "cyclotoric/integer.hpp"

#include <algorithm>
#include <utility>

namespace cyclo {

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntVec primitive(IntVec v) {
  const Int g = gcd_of(v);
  if (g == 0 || g == 1) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ValidationError("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ValidationError("add: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ValidationError("sub: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scale(const Int& c, const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

IntVec negate(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntMat identity(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat t(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMat multiply(const IntMat& a, const IntMat& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMat r(a.size(), IntVec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw ValidationError("multiply: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

IntVec apply(const IntMat& m, const IntVec& v) {
  IntVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

Int determinant(IntMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw ValidationError("determinant: matrix not square");
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Gauss-Jordan over Q. Returns reduced row echelon form and pivot columns.
std::pair<RatMat, std::vector<std::size_t>> rref(RatMat a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& x : m[i]) r[i].emplace_back(x);
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMat& m) { return rref(to_rat(m)).second.size(); }

IntMat unimodular_inverse(const IntMat& m) {
  const std::size_t n = m.size();
  RatMat aug(n, RatVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw ValidationError("unimodular_inverse: not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw InvariantFailure("unimodular_inverse: singular matrix");
  IntMat inv(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = to_int(red[i][n + j]);
  return inv;
}

IntVec cofactor_normal(const IntMat& rows) {
  const std::size_t k = rows.size();
  IntVec normal(k + 1);
  for (std::size_t col = 0; col <= k; ++col) {
    IntMat minor(k, IntVec());
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].size() != k + 1) throw ValidationError("cofactor_normal: shape mismatch");
      minor[i].reserve(k);
      for (std::size_t j = 0; j <= k; ++j)
        if (j != col) minor[i].push_back(rows[i][j]);
    }
    const Int det = determinant(std::move(minor));
    normal[col] = (col % 2 == 0) ? det : Int(-det);
  }
  return normal;
}

IntMat hermite_normal_form(IntMat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        if (best == rows || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == rows) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

std::optional<RatVec> solve_full_column_rank(const IntMat& a, const IntVec& b) {
  if (a.size() != b.size()) throw ValidationError("solve: shape mismatch");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  RatMat aug = to_rat(a);
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].emplace_back(b[i]);
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() != cols) throw ValidationError("solve: matrix is rank-deficient");
  RatVec x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[i] = red[i][cols];
  return x;
}

Int saturation_index(const IntMat& rows) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  const std::size_t m = rows[0].size();
  if (k > m) throw ValidationError("saturation_index: more rows than columns");
  // gcd over all k-subsets of columns
  Int g = 0;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    IntMat minor(k, IntVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = rows[i][pick[j]];
    const Int det = determinant(std::move(minor));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (g == 0) throw ValidationError("saturation_index: rows are dependent");
  return g;
}

IntVec bezout_vector(const IntVec& coeffs) {
  IntVec w(coeffs.size(), 0);
  Int g = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Int new_g, s, t;
    mpz_gcdext(new_g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
               coeffs[i].get_mpz_t());
    // new_g = s*g + t*c_i: rescale previous combination by s
    for (std::size_t j = 0; j < i; ++j) w[j] *= s;
    w[i] = t;
    g = new_g;
  }
  return w;
}

bool is_integral(const Rat& q) { return q.get_den() == 1; }

Int to_int(const Rat& q) {
  if (!is_integral(q)) throw InvariantFailure("expected an integer, got " + q.get_str());
  return q.get_num();
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

bool fits_int64(const Int& z) {
  static const Int lo("-9223372036854775808");
  static const Int hi("9223372036854775807");
  return z >= lo && z <= hi;
}

Int parse_int(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size())
    throw ValidationError("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ValidationError("not an integer: '" + text + "'");
  Int z;
  const std::string digits = text[0] == '+' ? text.substr(1) : text;
  if (z.set_str(digits, 10) != 0) throw ValidationError("not an integer: '" + text + "'");
  return z;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& x : v) {
    const std::size_t limb = mpz_size(x.get_mpz_t()) ? mpz_getlimbn(x.get_mpz_t(), 0) : 0;
    const std::size_t part = limb ^ (static_cast<std::size_t>(mpz_sgn(x.get_mpz_t()) + 1) << 62);
    h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace cyclo
