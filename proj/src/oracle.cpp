#include "cyclo/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <optional>

namespace cyclo::oracle {

BigInt permutohedron_lattice_points_direct(int n) {
  if (n < 1) throw InputError("n must be positive");
  if (n > kPermutohedronOracleBound) throw zonotope::BoundError("oracle bound: permutohedron scan needs n <= 5");
  const int total = n * (n + 1) / 2;
  std::vector<int> x(n, 1);
  BigInt count = 0;
  while (true) {
    int sum = 0;
    for (int v : x) sum += v;
    if (sum == total) {
      bool inside = true;
      for (unsigned mask = 1; inside && mask + 1 < (1u << n); ++mask) {
        int s = 0, size = 0;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) {
            s += x[i];
            ++size;
          }
        inside = s >= size * (size + 1) / 2;
      }
      if (inside) ++count;
    }
    int i = n - 1;
    while (i >= 0 && x[i] == n) x[i--] = 1;
    if (i < 0) break;
    ++x[i];
  }
  return count;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Indices of a maximal independent set of rows of `a`, picked greedily top to
// bottom; its size is the rank.
std::vector<int> independent_rows(const RationalMatrix& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> picked;
  RationalMatrix basis;  // reduced row vectors (length cols)
  std::vector<int> pivot_col;
  for (int r = 0; r < rows && static_cast<int>(picked.size()) < cols; ++r) {
    std::vector<Rational> v = a[r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = v[pivot_col[b]];
      if (f == 0) continue;
      for (int c = 0; c < cols; ++c) v[c] -= f * basis[b][c];
    }
    int p = 0;
    while (p < cols && v[p] == 0) ++p;
    if (p == cols) continue;
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = basis[b][p];
      if (f == 0) continue;
      for (int c = 0; c < cols; ++c) basis[b][c] -= f * v[c];
    }
    basis.push_back(std::move(v));
    pivot_col.push_back(p);
    picked.push_back(r);
  }
  return picked;
}

// Inverse of a square rational matrix, or nullopt when singular.
std::optional<RationalMatrix> invert(RationalMatrix a) {
  const int k = static_cast<int>(a.size());
  RationalMatrix inv(k, std::vector<Rational>(k, 0));
  for (int i = 0; i < k; ++i) inv[i][i] = 1;
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && a[p][c] == 0) ++p;
    if (p == k) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational lead = a[c][c];
    for (int j = 0; j < k; ++j) {
      a[c][j] /= lead;
      inv[c][j] /= lead;
    }
    for (int r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (int j = 0; j < k; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

BigInt semiopen_count_direct(const intlin::IntMatrix& columns) {
  const int dim = columns.rows(), k = columns.cols();
  if (dim > kBrickOracleMaxDim || k > dim) throw zonotope::BoundError("oracle bound: need dim <= 6 and k <= dim");
  if (k == 0) return 1;

  RationalMatrix a(dim, std::vector<Rational>(k));
  std::vector<long> lo(dim, 0), hi(dim, 0);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < k; ++c) {
      const BigInt& x = columns(r, c);
      a[r][c] = Rational(x);
      if (!x.fits_slong_p()) throw zonotope::BoundError("oracle bound: entries too large");
      (x < 0 ? lo[r] : hi[r]) += x.get_si();
    }
  const std::vector<int> pivots = independent_rows(a);
  if (static_cast<int>(pivots.size()) < k) return 0;  // dependent columns

  RationalMatrix square;
  for (int r : pivots) square.push_back(a[r]);
  const auto inv = invert(square);
  if (!inv) return 0;

  long long box = 1;
  for (int r = 0; r < dim; ++r) {
    box *= hi[r] - lo[r] + 1;
    if (box > kBrickOracleMaxBox) throw zonotope::BoundError("oracle bound: bounding box too large");
  }

  BigInt count = 0;
  std::vector<long> x(lo);
  std::vector<Rational> coef(k);
  while (true) {
    // Coefficients from the pivot rows, then confirm every coordinate.
    bool inside = true;
    for (int i = 0; i < k && inside; ++i) {
      coef[i] = 0;
      for (int j = 0; j < k; ++j) coef[i] += (*inv)[i][j] * x[pivots[j]];
      inside = coef[i] >= 0 && coef[i] < 1;
    }
    for (int r = 0; r < dim && inside; ++r) {
      Rational s = 0;
      for (int c = 0; c < k; ++c) s += a[r][c] * coef[c];
      inside = s == x[r];
    }
    if (inside) ++count;

    int r = dim - 1;
    while (r >= 0 && x[r] == hi[r]) {
      x[r] = lo[r];
      --r;
    }
    if (r < 0) break;
    ++x[r];
  }
  return count;
}

void for_each_forest_direct(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 1) throw InputError("n must be positive");
  if (n > kForestOracleBound) throw zonotope::BoundError("oracle bound: forest scan needs n <= 6");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  const unsigned long subsets = 1UL << edges.size();
  std::vector<int> parent(n);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (unsigned long mask = 0; mask < subsets; ++mask) {
    if (__builtin_popcountl(mask) > n - 1) continue;
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (std::size_t e = 0; e < edges.size() && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      acyclic = a != b;
      parent[a] = b;
    }
    if (!acyclic) continue;
    std::vector<int> sizes(n, 0);
    for (int v = 0; v < n; ++v) ++sizes[find(v)];
    std::vector<int> out;
    for (int s : sizes)
      if (s) out.push_back(s);
    std::sort(out.begin(), out.end());
    fn(out);
  }
}

zonotope::NormalizedVolume hexagon_area_direct() {
  // Walk the hexagon: consecutive vertices differ by swapping the values k, k+1.
  std::vector<std::array<int, 3>> ring{{1, 2, 3}};
  std::vector<std::array<int, 3>> all;
  std::array<int, 3> p{1, 2, 3};
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto adjacent = [](const std::array<int, 3>& u, const std::array<int, 3>& v) {
    int diff = 0;
    std::array<int, 2> vals{};
    for (int i = 0; i < 3; ++i)
      if (u[i] != v[i]) {
        if (diff < 2) vals[diff] = u[i];
        ++diff;
      }
    return diff == 2 && std::abs(vals[0] - vals[1]) == 1;
  };
  while (ring.size() < all.size()) {
    for (const auto& q : all) {
      if (std::find(ring.begin(), ring.end(), q) != ring.end()) continue;
      if (adjacent(ring.back(), q)) {
        ring.push_back(q);
        break;
      }
    }
  }
  // Orthonormal frame of the plane x1 + x2 + x3 = 6:
  //   u = (1,-1,0)/sqrt(2), w = (1,1,-2)/sqrt(6).
  // With P = x1 - x2 and Q = x1 + x2 - 2 x3, the planar coordinates are
  // P/sqrt(2), Q/sqrt(6), so the shoelace sum picks up 1/sqrt(12) = 1/(2 sqrt 3).
  long twice = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& s = ring[i];
    const auto& t = ring[(i + 1) % ring.size()];
    long ps = s[0] - s[1], qs = s[0] + s[1] - 2 * s[2];
    long pt = t[0] - t[1], qt = t[0] + t[1] - 2 * t[2];
    twice += ps * qt - pt * qs;
  }
  // area = |twice| / 2 / (2 sqrt 3) = (|twice| / 4) / sqrt 3
  Rational coeff(BigInt(std::abs(twice)), BigInt(4));
  coeff.canonicalize();
  return {coeff, 3};
}

}  // namespace cyclo::oracle
