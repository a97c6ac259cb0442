#include "casson/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace casson::oracle {

namespace {

using Grid = std::vector<std::vector<std::int64_t>>;

constexpr int kMaxTorusDim = 6;
constexpr std::int64_t kMaxTorusEntry = 1000;
constexpr std::int64_t kMaxCandidates = 50'000'000;

Grid to_grid(const IntMat& a, std::int64_t entry_limit) {
  Grid g(static_cast<std::size_t>(a.rows()), std::vector<std::int64_t>(static_cast<std::size_t>(a.cols())));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (abs(a(i, j)) > entry_limit)
        throw SizeLimitExceeded("oracle entry " + a(i, j).str() + " exceeds " + std::to_string(entry_limit));
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j).convert_to<std::int64_t>();
    }
  return g;
}

Grid minor_of(const Grid& a, std::size_t row, std::size_t col) {
  Grid m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == row) continue;
    std::vector<std::int64_t> r;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != col) r.push_back(a[i][j]);
    m.push_back(std::move(r));
  }
  return m;
}

Grid adjugate(const Grid& a) {
  const std::size_t n = a.size();
  Grid adj(n, std::vector<std::int64_t>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t c = cofactor_determinant(minor_of(a, i, j));
      adj[j][i] = (i + j) % 2 ? -c : c;
    }
  return adj;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Rank over Q by fraction-free elimination on a copy.
int rational_rank(Grid m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  int r = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[static_cast<std::size_t>(r)]);
    const auto& pivot = m[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows; ++i) {
      const std::int64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * pivot[c] - f * pivot[j];
      std::int64_t g = 0;
      for (std::int64_t v : m[i]) g = std::gcd(g, v);
      if (g > 1)
        for (std::int64_t& v : m[i]) v /= g;
    }
    ++r;
  }
  return r;
}

} // namespace

std::int64_t cofactor_determinant(const Grid& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    const std::int64_t term = a[0][j] * cofactor_determinant(minor_of(a, 0, j));
    det += j % 2 ? -term : term;
  }
  return det;
}

LatticeCountResult torus_preimage_count(const IntMat& a, const RationalTarget& t) {
  const auto n = static_cast<std::size_t>(a.rows());
  if (a.rows() != a.cols()) throw ShapeError("torus map needs a square matrix");
  if (n > kMaxTorusDim) throw SizeLimitExceeded("torus oracle limited to dimension " + std::to_string(kMaxTorusDim));
  if (t.numerators.size() != n || t.denominator <= 0) throw std::invalid_argument("target does not match the torus");
  const Grid m = to_grid(a, kMaxTorusEntry);
  const std::int64_t det = cofactor_determinant(m);
  if (det == 0) throw SingularMatrix("torus map is singular");
  const Grid adj = adjugate(m);
  const std::int64_t q = t.denominator;

  // t + k = A x with x in [0,1)^N bounds each k_i by the row's sign pattern.
  std::vector<std::int64_t> lo(n), hi(n);
  std::int64_t candidates = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t neg = 0, pos = 0;
    for (std::int64_t v : m[i]) (v < 0 ? neg : pos) += v;
    lo[i] = floor_div(neg * q - t.numerators[i], q);
    hi[i] = -floor_div(-(pos * q - t.numerators[i]), q);
    candidates *= hi[i] - lo[i] + 1;
    if (candidates > kMaxCandidates) throw SizeLimitExceeded("torus oracle enumeration too large");
  }

  // x = adj (q k + num) / (q det), compared exactly in 128-bit integers.
  const __int128 scale = static_cast<__int128>(q) * det;
  LatticeCountResult result{0, t};
  std::vector<std::int64_t> k = lo;
  std::vector<__int128> y(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<__int128>(q) * k[i] + t.numerators[i];
    bool inside = true, boundary = false;
    for (std::size_t i = 0; i < n && inside; ++i) {
      __int128 s = 0;
      for (std::size_t j = 0; j < n; ++j) s += adj[i][j] * y[j];
      if (scale < 0) s = -s;
      const __int128 d = scale < 0 ? -scale : scale;
      if (s < 0 || s > d) inside = false;
      else if (s == 0 || s == d) boundary = true;
    }
    if (inside && boundary) throw NonGenericTarget("target hits the boundary of the fundamental domain");
    if (inside) ++result.count;

    std::size_t i = 0;
    while (i < n && k[i] == hi[i]) {
      k[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++k[i];
  }
  return result;
}

std::vector<RationalTarget> generic_targets(const IntMat& a, int count, std::uint64_t seed) {
  const Grid m = to_grid(a, kMaxTorusEntry);
  std::int64_t p = std::max<std::int64_t>(std::abs(cofactor_determinant(m)) + 1, 5);
  std::mt19937_64 rng(seed);
  std::vector<RationalTarget> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 1000) throw NonGenericTarget("could not find generic targets");
    while (!is_prime(p)) ++p;
    std::uniform_int_distribution<std::int64_t> numerator(1, p - 1);
    RationalTarget t;
    t.denominator = p;
    for (Index i = 0; i < a.rows(); ++i) t.numerators.push_back(numerator(rng));
    try {
      (void)torus_preimage_count(a, t);
      out.push_back(std::move(t));
    } catch (const NonGenericTarget&) {
    }
    ++p;
  }
  return out;
}

std::int64_t numeric_degree_u1(const FreeHom& f, const RationalTarget& t) {
  if (f.source_rank() != f.target_rank()) throw ShapeError("numeric degree needs a square word map");
  // Row i acts as the exponent vector of f(y_i).
  return torus_preimage_count(abelianize(f).transpose(), t).count;
}

GroupOrder cokernel_enumeration(const IntMat& a) {
  if (a.rows() > 3 || a.cols() > 3) throw SizeLimitExceeded("cokernel enumeration limited to 3x3");
  const Grid m = to_grid(a, 4);
  const std::size_t rows = m.size();
  const std::size_t cols = static_cast<std::size_t>(a.cols());
  if (rows == 0) return GroupOrder::finite(1);
  if (rational_rank(m) < static_cast<int>(rows)) return GroupOrder::infinite();

  // d = smallest nonzero |maximal minor|; then d Z^rows lies in the column lattice.
  std::int64_t d = 0;
  std::vector<bool> choose(cols, false);
  std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(rows), true);
  std::sort(choose.begin(), choose.end());
  do {
    Grid sub(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (choose[j]) sub[i].push_back(m[i][j]);
    const std::int64_t minor = std::abs(cofactor_determinant(sub));
    if (minor != 0 && (d == 0 || minor < d)) d = minor;
  } while (std::next_permutation(choose.begin(), choose.end()));

  std::int64_t states = 1;
  for (std::size_t i = 0; i < rows; ++i) states *= d;
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::int64_t code = 0;
    for (std::int64_t x : v) code = code * d + x;
    return code;
  };

  // Breadth-first closure of {0} under adding columns modulo d.
  std::vector<bool> seen(static_cast<std::size_t>(states), false);
  std::deque<std::vector<std::int64_t>> queue{std::vector<std::int64_t>(rows, 0)};
  seen[0] = true;
  std::int64_t reached = 1;
  while (!queue.empty()) {
    const std::vector<std::int64_t> v = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<std::int64_t> w(rows);
      for (std::size_t i = 0; i < rows; ++i) w[i] = ((v[i] + m[i][j]) % d + d) % d;
      const auto code = static_cast<std::size_t>(encode(w));
      if (seen[code]) continue;
      seen[code] = true;
      ++reached;
      queue.push_back(std::move(w));
    }
  }
  return GroupOrder::finite(BigInt(states / reached));
}

} // namespace casson::oracle
