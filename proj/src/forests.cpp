#include "cyclo/forests.hpp"

#include "cyclo/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cyclo::forests {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::vector<int> canonical_marks(std::vector<int> marked, int n) {
  std::sort(marked.begin(), marked.end());
  if (std::adjacent_find(marked.begin(), marked.end()) != marked.end())
    throw ForestError("duplicate marked vertex");
  for (int m : marked)
    if (m < 1 || m > n) throw ForestError("marked vertex outside [n]");
  return marked;
}

void check_one_mark_per_component(const LabeledForest& forest, const std::vector<int>& marked) {
  std::vector<char> seen(forest.component_count(), 0);
  for (int m : marked) {
    int c = forest.component_of(m);
    if (seen[c]) throw ForestError("component carries more than one marked vertex");
    seen[c] = 1;
  }
}

// All trees on {0..s-1} as index edges, in Pruefer-lex order.
std::vector<std::vector<Edge>> index_trees(int s) {
  std::vector<int> labels(s);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<std::vector<Edge>> out;
  if (s <= 2) {
    out.push_back(prufer_decode(labels, {}));
    return out;
  }
  std::vector<int> code(s - 2, 0);
  while (true) {
    out.push_back(prufer_decode(labels, code));
    int i = s - 3;
    while (i >= 0 && code[i] == s - 1) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
  return out;
}

class TreeCache {
 public:
  const std::vector<std::vector<Edge>>& get(int s) {
    if (static_cast<int>(cache_.size()) <= s) cache_.resize(s + 1);
    if (cache_[s].empty()) cache_[s] = index_trees(s);
    return cache_[s];
  }

 private:
  std::vector<std::vector<std::vector<Edge>>> cache_;
};

// Runs fn(edges) over the product of per-block trees, first block slowest.
template <class Fn>
void for_each_block_forest(const std::vector<std::vector<int>>& blocks, TreeCache& cache, Fn&& fn) {
  const std::size_t b = blocks.size();
  std::vector<const std::vector<std::vector<Edge>>*> lists(b);
  for (std::size_t i = 0; i < b; ++i) lists[i] = &cache.get(static_cast<int>(blocks[i].size()));
  std::vector<std::size_t> pick(b, 0);
  std::vector<Edge> edges;
  while (true) {
    edges.clear();
    for (std::size_t i = 0; i < b; ++i) {
      for (const Edge& e : (*lists[i])[pick[i]]) edges.push_back({blocks[i][e.u], blocks[i][e.v]});
    }
    std::sort(edges.begin(), edges.end());
    fn(edges);
    std::size_t i = b;
    while (i > 0) {
      --i;
      if (++pick[i] < lists[i]->size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (b == 0) return;
  }
}

std::vector<int> block_ids(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ids(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) ids[v - 1] = static_cast<int>(b);
  return ids;
}

}  // namespace

// ---------------------------------------------------------------------------

LabeledForest::LabeledForest(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 1) throw ForestError("vertex count must be positive");
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw ForestError("self loop");
    if (e.u < 1 || e.v > n_) throw ForestError("edge references vertex outside [n]");
  }
  std::sort(edges.begin(), edges.end());
  UnionFind uf(n_);
  for (const Edge& e : edges)
    if (!uf.unite(e.u - 1, e.v - 1)) throw ForestError("edge set contains a cycle");
  edges_ = std::move(edges);

  component_.assign(n_, -1);
  std::vector<int> root_id(n_, -1);
  for (int v = 0; v < n_; ++v) {
    int r = uf.find(v);
    if (root_id[r] < 0) root_id[r] = component_count_++;
    component_[v] = root_id[r];
  }
}

LabeledForest::LabeledForest(int vertex_count, std::vector<Edge> edges, std::vector<int> component_ids,
                             int component_count, detail::Unchecked)
    : n_(vertex_count),
      edges_(std::move(edges)),
      component_(std::move(component_ids)),
      component_count_(component_count) {}

std::vector<std::vector<int>> LabeledForest::components() const {
  std::vector<std::vector<int>> out(component_count_);
  for (int v = 1; v <= n_; ++v) out[component_of(v)].push_back(v);
  return out;
}

DecoratedForest::DecoratedForest(LabeledForest forest, std::vector<int> marked)
    : forest_(std::move(forest)), marked_(canonical_marks(std::move(marked), forest_.vertex_count())) {
  const int n = forest_.vertex_count();
  if (static_cast<int>(marked_.size() + forest_.edges().size()) != n - 1)
    throw ForestError("decorated forest needs |M| + |edges| = n - 1");
  check_one_mark_per_component(forest_, marked_);
  std::vector<char> has_mark(forest_.component_count(), 0);
  for (int m : marked_) has_mark[forest_.component_of(m)] = 1;
  free_component_ = static_cast<int>(std::find(has_mark.begin(), has_mark.end(), 0) - has_mark.begin());
}

DecoratedForest::DecoratedForest(LabeledForest forest, std::vector<int> marked, int free_component,
                                 detail::Unchecked)
    : forest_(std::move(forest)), marked_(std::move(marked)), free_component_(free_component) {}

std::vector<int> DecoratedForest::free_tree() const {
  std::vector<int> out;
  for (int v = 1; v <= forest_.vertex_count(); ++v)
    if (forest_.component_of(v) == free_component_) out.push_back(v);
  return out;
}

int DecoratedForest::free_tree_size() const {
  int count = 0;
  for (int v = 1; v <= forest_.vertex_count(); ++v) count += forest_.component_of(v) == free_component_;
  return count;
}

PartialDecoratedForest::PartialDecoratedForest(LabeledForest forest, std::vector<int> marked)
    : forest_(std::move(forest)), marked_(canonical_marks(std::move(marked), forest_.vertex_count())) {
  if (static_cast<int>(marked_.size() + forest_.edges().size()) > forest_.vertex_count() - 1)
    throw ForestError("partial decorated forest needs |M| + |edges| <= n - 1");
  check_one_mark_per_component(forest_, marked_);
}

PartialDecoratedForest::PartialDecoratedForest(const DecoratedForest& f)
    : forest_(f.forest()), marked_(f.marked()) {}

std::vector<std::vector<int>> PartialDecoratedForest::free_components() const {
  auto comps = forest_.components();
  std::vector<char> has_mark(comps.size(), 0);
  for (int m : marked_) has_mark[forest_.component_of(m)] = 1;
  std::vector<std::vector<int>> out;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (!has_mark[c]) out.push_back(std::move(comps[c]));
  return out;
}

std::vector<std::vector<int>> PartialDecoratedForest::marked_components() const {
  std::vector<std::vector<int>> out;
  for (int m : marked_) {
    std::vector<int> comp;
    for (int v = 1; v <= forest_.vertex_count(); ++v)
      if (forest_.component_of(v) == forest_.component_of(m)) comp.push_back(v);
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt RootedForestCountTable::at(int k) const {
  auto it = counts.find(k);
  return it == counts.end() ? BigInt(0) : it->second;
}

Rational RootedForestCountTable::evaluate(const Rational& x) const {
  if (n == 0) return 1;
  Rational sum = 0;
  for (const auto& [k, t] : counts) sum += Rational(t) * rpow(x, k);
  return sum;
}

// ---------------------------------------------------------------------------

std::vector<int> prufer_encode(std::span<const int> labels, std::span<const Edge> tree) {
  const int s = static_cast<int>(labels.size());
  if (s <= 2) return {};
  auto index_of = [&](int label) {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) throw ForestError("edge label not in vertex set");
    return static_cast<int>(it - labels.begin());
  };
  if (static_cast<int>(tree.size()) != s - 1) throw ForestError("not a spanning tree");
  std::vector<std::vector<int>> adj(s);
  for (const Edge& e : tree) {
    int a = index_of(e.u), b = index_of(e.v);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> degree(s);
  for (int i = 0; i < s; ++i) degree[i] = static_cast<int>(adj[i].size());
  std::vector<char> removed(s, 0);
  std::vector<int> code;
  for (int step = 0; step < s - 2; ++step) {
    int leaf = 0;
    while (removed[leaf] || degree[leaf] != 1) ++leaf;
    removed[leaf] = 1;
    for (int nb : adj[leaf]) {
      if (removed[nb]) continue;
      code.push_back(labels[nb]);
      --degree[nb];
    }
  }
  return code;
}

std::vector<Edge> prufer_decode(std::span<const int> labels, std::span<const int> code) {
  const int s = static_cast<int>(labels.size());
  std::vector<Edge> edges;
  if (s <= 1) return edges;
  if (static_cast<int>(code.size()) != s - 2) throw ForestError("Pruefer code has wrong length");
  auto index_of = [&](int label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw ForestError("Pruefer code entry not in vertex set");
    return static_cast<int>(it - labels.begin());
  };
  std::vector<int> degree(s, 1);
  std::vector<int> idx(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    idx[i] = index_of(code[i]);
    ++degree[idx[i]];
  }
  auto add = [&](int a, int b) {
    Edge e{labels[a], labels[b]};
    if (e.u > e.v) std::swap(e.u, e.v);
    edges.push_back(e);
  };
  for (int c : idx) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    add(leaf, c);
    degree[leaf] = 0;
    --degree[c];
  }
  int a = -1, b = -1;
  for (int i = 0; i < s; ++i) {
    if (degree[i] == 1) (a < 0 ? a : b) = i;
  }
  add(a, b);
  std::sort(edges.begin(), edges.end());
  return edges;
}

void for_each_tree(std::span<const int> labels, const std::function<void(std::span<const Edge>)>& fn) {
  const int s = static_cast<int>(labels.size());
  std::vector<Edge> mapped;
  for (const auto& tree : index_trees(s)) {
    mapped.clear();
    for (const Edge& e : tree) mapped.push_back({labels[e.u], labels[e.v]});
    std::sort(mapped.begin(), mapped.end());
    fn(mapped);
  }
}

std::vector<LabeledForest> enumerate_trees(std::span<const int> labels) {
  if (labels.empty()) throw ForestError("empty vertex set");
  if (labels.front() < 1 || !std::is_sorted(labels.begin(), labels.end()) ||
      std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw ForestError("vertex labels must be positive and strictly increasing");
  const int n = labels.back();
  std::vector<LabeledForest> out;
  for_each_tree(labels, [&](std::span<const Edge> edges) {
    out.emplace_back(n, std::vector<Edge>(edges.begin(), edges.end()));
  });
  return out;
}

// Counting below recurses on the size s of the block holding the least
// vertex: C(m-1, s-1) ways to pick its companions, times the trees on it.

BigInt forest_count(int n) {
  if (n < 0) throw ForestError("negative vertex count");
  std::vector<BigInt> f(n + 1);
  f[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int s = 1; s <= m; ++s) f[m] += binomial(m - 1, s - 1) * cayley(s) * f[m - s];
  return f[n];
}

RootedForestCountTable rooted_forest_counts(int n) {
  if (n < 0) throw ForestError("negative vertex count");
  std::vector<std::vector<BigInt>> t(n + 1, std::vector<BigInt>(n + 1));
  t[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k)
      for (int s = 1; s <= m - k + 1; ++s)
        t[m][k] += binomial(m - 1, s - 1) * rooted_cayley(s) * t[m - s][k - 1];
  RootedForestCountTable table;
  table.n = n;
  for (int k = 1; k <= n; ++k) table.counts[k] = t[n][k];
  return table;
}

Rational abel_eval(int n, long a, const Rational& x) {
  if (n < 0) throw ForestError("negative Abel index");
  if (n == 0) return 1;
  return x * rpow(x - Rational(a) * n, n - 1);
}

BigInt forest_gcd_sum(int v) {
  if (v < 1) throw ForestError("forest_gcd_sum needs v >= 1");
  // by_gcd[m][g]: forests on m labeled vertices whose component sizes have gcd g
  // (g = 0 only for the empty forest).
  std::vector<std::map<int, BigInt>> by_gcd(v + 1);
  by_gcd[0][0] = 1;
  for (int m = 1; m <= v; ++m) {
    for (int s = 1; s <= m; ++s) {
      BigInt ways = binomial(m - 1, s - 1) * cayley(s);
      for (const auto& [g, count] : by_gcd[m - s]) by_gcd[m][std::gcd(s, g)] += ways * count;
    }
  }
  BigInt sum = 0;
  for (const auto& [g, count] : by_gcd[v]) sum += BigInt(g) * count;
  return sum;
}

void for_each_decorated_forest(int n, const std::function<void(const DecoratedForest&)>& fn) {
  if (n < 1) throw ForestError("vertex count must be positive");
  TreeCache cache;
  for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    const int b = static_cast<int>(blocks.size());
    const std::vector<int> ids = block_ids(n, blocks);
    for_each_block_forest(blocks, cache, [&](const std::vector<Edge>& edges) {
      std::vector<int> root(b, 0);
      for (int free = 0; free < b; ++free) {
        std::fill(root.begin(), root.end(), 0);
        while (true) {
          std::vector<int> marked;
          marked.reserve(b - 1);
          for (int i = 0; i < b; ++i)
            if (i != free) marked.push_back(blocks[i][root[i]]);
          std::sort(marked.begin(), marked.end());
          fn(DecoratedForest(LabeledForest(n, edges, ids, b, detail::Unchecked{}), std::move(marked), free,
                             detail::Unchecked{}));
          int i = b - 1;
          for (; i >= 0; --i) {
            if (i == free) continue;
            if (++root[i] < static_cast<int>(blocks[i].size())) break;
            root[i] = 0;
          }
          if (i < 0) break;
        }
      }
    });
  });
}

std::vector<DecoratedForest> enumerate_decorated_forests(int n) {
  std::vector<DecoratedForest> out;
  for_each_decorated_forest(n, [&](const DecoratedForest& f) { out.push_back(f); });
  return out;
}

void for_each_partial_decorated_forest(int n, const std::function<void(const PartialDecoratedForest&)>& fn) {
  if (n < 1) throw ForestError("vertex count must be positive");
  TreeCache cache;
  for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    const int b = static_cast<int>(blocks.size());
    const std::vector<int> ids = block_ids(n, blocks);
    for_each_block_forest(blocks, cache, [&](const std::vector<Edge>& edges) {
      // state[i] = -1: block i unmarked; otherwise index of its marked vertex.
      std::vector<int> state(b, -1);
      while (true) {
        int marked_blocks = 0;
        for (int s : state) marked_blocks += s >= 0;
        if (marked_blocks < b) {
          std::vector<int> marked;
          for (int i = 0; i < b; ++i)
            if (state[i] >= 0) marked.push_back(blocks[i][state[i]]);
          std::sort(marked.begin(), marked.end());
          LabeledForest forest(n, edges, ids, b, detail::Unchecked{});
          fn(PartialDecoratedForest(std::move(forest), std::move(marked)));
        }
        int i = b - 1;
        for (; i >= 0; --i) {
          if (++state[i] < static_cast<int>(blocks[i].size())) break;
          state[i] = -1;
        }
        if (i < 0) break;
      }
    });
  });
}

std::vector<PartialDecoratedForest> enumerate_partial_decorated_forests(int n) {
  std::vector<PartialDecoratedForest> out;
  for_each_partial_decorated_forest(n, [&](const PartialDecoratedForest& f) { out.push_back(f); });
  return out;
}

PartialDecoratedForest reduce_decorated_forest(const PartialDecoratedForest& f) {
  const LabeledForest& forest = f.forest();
  std::vector<char> marked_component(forest.component_count(), 0);
  for (int m : f.marked()) marked_component[forest.component_of(m)] = 1;

  std::vector<Edge> edges;
  for (const Edge& e : forest.edges())
    if (!marked_component[forest.component_of(e.u)]) edges.push_back(e);
  std::vector<int> marked;
  for (int v = 1; v <= forest.vertex_count(); ++v)
    if (marked_component[forest.component_of(v)]) marked.push_back(v);
  return PartialDecoratedForest(LabeledForest(forest.vertex_count(), std::move(edges)), std::move(marked));
}

}  // namespace cyclo::forests
