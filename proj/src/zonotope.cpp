#include "cyclo/zonotope.hpp"

#include "cyclo/combinatorics.hpp"
#include "parallel.hpp"

#include <utility>

namespace cyclo::zonotope {

using forests::DecoratedForest;
using forests::PartialDecoratedForest;
using intlin::IntMatrix;

namespace {

void require_n(int n, int lo) {
  if (n < lo) throw InputError("n too small (need n >= " + std::to_string(lo) + ")");
}

int effective_bound(const BruteForceOptions& opts, int fallback) {
  return opts.bound > 0 ? opts.bound : fallback;
}

std::vector<std::int64_t> edge_vector(int n, int i, int j) {
  std::vector<std::int64_t> v(n, 0);
  v[i - 1] = -1;
  v[j - 1] = 1;
  return v;
}

std::vector<std::int64_t> radial_vector(int n, int i) {
  std::vector<std::int64_t> v(n, 1);
  v[i - 1] = 1 - n;
  return v;
}

// Edge and radial generators only (the translation does not enter brick sums).
std::vector<Generator> segment_generators(int n) {
  auto z = cyclopermutohedron_generators(n);
  z.generators.pop_back();
  return z.generators;
}

}  // namespace

VirtualZonotope cyclopermutohedron_generators(int n) {
  require_n(n, 2);
  VirtualZonotope z;
  z.dim = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      z.generators.push_back({edge_vector(n, i, j), GeneratorKind::edge, i, j, +1});
  for (int i = 1; i <= n; ++i) z.generators.push_back({radial_vector(n, i), GeneratorKind::radial, i, 0, -1});
  z.generators.push_back({std::vector<std::int64_t>(n, 1), GeneratorKind::translation, 0, 0, +1});
  return z;
}

std::vector<std::vector<std::int64_t>> forest_columns(const PartialDecoratedForest& f) {
  const int n = f.vertex_count();
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& e : f.forest().edges()) cols.push_back(edge_vector(n, e.u, e.v));
  for (int k : f.marked()) cols.push_back(radial_vector(n, k));
  return cols;
}

NormalizedVolume volume_bruteforce(int n, BruteForceOptions opts) {
  require_n(n, 2);
  if (n > effective_bound(opts, kVolumeBruteBound))
    throw BoundError("n above brute-force bound; use volume_by_forests or closed form");
  const auto gens = segment_generators(n);
  const int m = static_cast<int>(gens.size());
  const int k = n - 1;

  BigInt coeff = detail::parallel_sum(m, opts.jobs, [&](std::size_t first) {
    BigInt sum = 0;
    IntMatrix mat(n, n);
    for (int r = 0; r < n; ++r) mat(r, n - 1) = 1;
    for_each_combination(
        m, k,
        [&](std::span<const int> pick) {
          int radials = 0;
          for (int c = 0; c < k; ++c) {
            const Generator& g = gens[pick[c]];
            radials += g.kind == GeneratorKind::radial;
            for (int r = 0; r < n; ++r) mat(r, c) = static_cast<long>(g.vector[r]);
          }
          BigInt d = abs(intlin::determinant(mat));
          if (radials % 2) sum -= d;
          else sum += d;
        },
        static_cast<int>(first), static_cast<int>(first) + 1);
    return sum;
  });
  return {Rational(coeff), static_cast<unsigned long>(n)};
}

NormalizedVolume volume_by_forests(int n) {
  require_n(n, 2);
  // Tally forests by (|M|, N(F)) and weight afterwards.
  std::vector<std::vector<unsigned long long>> tally(n, std::vector<unsigned long long>(n + 1, 0));
  forests::for_each_decorated_forest(n, [&](const DecoratedForest& f) {
    ++tally[f.marked().size()][f.free_tree_size()];
  });
  BigInt coeff = 0;
  for (int marks = 0; marks < n; ++marks) {
    BigInt weight = ipow(BigInt(-n), marks);
    for (int size = 1; size <= n; ++size) {
      if (tally[marks][size] == 0) continue;
      coeff += weight * size * BigInt(std::to_string(tally[marks][size]));
    }
  }
  return {Rational(coeff), static_cast<unsigned long>(n)};
}

NormalizedVolume volume_closed_form(int n) {
  require_n(n, 2);
  Rational sum = 0;
  for (int size = 1; size <= n; ++size)
    sum += Rational(binomial(n, size) * rooted_cayley(size)) * forests::abel_eval(n - size, -1, Rational(-n));
  return {sum, static_cast<unsigned long>(n)};
}

BigInt det_of_decorated_forest(const DecoratedForest& f) { return f.free_tree_size(); }

NormalizedVolume permutohedron_volume(int n) {
  require_n(n, 2);
  // Each labeled tree spans a brick with |det(edges, e)| = n.
  return {Rational(cayley(n) * n), static_cast<unsigned long>(n)};
}

BigInt sharp_of_partial_forest(const PartialDecoratedForest& f, int n) {
  if (f.vertex_count() != n) throw InputError("forest vertex count does not match n");
  const auto marks = f.marked().size();
  if (marks == 0) return 1;
  const auto free = f.free_components();
  if (free.empty()) return 0;
  BigInt g = 0;
  for (const auto& comp : free) g = gcd(g, BigInt(static_cast<unsigned long>(comp.size())));
  return ipow(BigInt(n), marks - 1) * g;
}

BigInt lattice_count_bruteforce(int n, BruteForceOptions opts) {
  require_n(n, 2);
  if (n > effective_bound(opts, kLatticeBruteBound))
    throw BoundError("n above brute-force bound; use lattice_count_closed_form");
  const auto gens = segment_generators(n);
  const int m = static_cast<int>(gens.size());

  // One task per (subset size, first element).
  std::vector<std::pair<int, int>> tasks;
  for (int k = 0; k <= n - 1; ++k)
    for (int first = 0; first < (k == 0 ? 1 : m); ++first) tasks.emplace_back(k, first);

  return detail::parallel_sum(tasks.size(), opts.jobs, [&](std::size_t t) {
    const auto [k, first] = tasks[t];
    BigInt sum = 0;
    std::vector<std::vector<std::int64_t>> cols(k);
    auto visit = [&](std::span<const int> pick) {
      int radials = 0;
      for (int c = 0; c < k; ++c) {
        cols[c] = gens[pick[c]].vector;
        radials += gens[pick[c]].kind == GeneratorKind::radial;
      }
      BigInt sharp = intlin::semiopen_lattice_count(IntMatrix::from_columns(cols, n));
      if (radials % 2) sum -= sharp;
      else sum += sharp;
    };
    if (k == 0) for_each_combination(m, 0, visit);
    else for_each_combination(m, k, visit, first, first + 1);
    return sum;
  });
}

BigInt lattice_count_closed_form(int n) {
  require_n(n, 2);
  BigInt sum = forests::forest_count(n);
  for (int v = 1; v <= n - 1; ++v)
    sum -= binomial(n, v) * ipow(BigInt(-v), n - v - 1) * forests::forest_gcd_sum(v);
  return sum;
}

BigInt permutohedron_lattice_count(int n) {
  require_n(n, 1);
  return forests::forest_count(n);
}

}  // namespace cyclo::zonotope
