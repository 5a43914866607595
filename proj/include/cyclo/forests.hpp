// Labeled trees, forests, rooted forests and (partial) decorated forests.
//
// Vertices are labeled 1..n. A decorated forest is a forest on [n] together with
// a set of marked vertices, at most one per component, such that
// |marked| + |edges| = n - 1; exactly one component (the free tree) is then
// unmarked. A partial decorated forest relaxes the size condition to <= n - 1,
// leaving a free forest of one or more unmarked components.
//
// Enumeration order is fixed: set partitions of [n] in restricted-growth-string
// order, then the per-block trees as an odometer over Pruefer-lex sequences
// (first block varies slowest), then the marking choices as an odometer in
// block order.
#pragma once

#include "cyclo/exact.hpp"

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace cyclo::forests {

class ForestError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

namespace detail {
struct Unchecked {};
}  // namespace detail

/// Acyclic graph on vertices 1..vertex_count. Edges are stored as sorted pairs
/// in lexicographic order.
class LabeledForest {
 public:
  LabeledForest() = default;
  LabeledForest(int vertex_count, std::vector<Edge> edges);
  // Used by the enumerators, which already know the components.
  LabeledForest(int vertex_count, std::vector<Edge> edges, std::vector<int> component_ids,
                int component_count, detail::Unchecked);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int component_count() const { return component_count_; }
  /// Component index of vertex v; components are numbered by least vertex.
  int component_of(int v) const { return component_[v - 1]; }
  std::vector<std::vector<int>> components() const;

  bool operator==(const LabeledForest& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> component_;
  int component_count_ = 0;
};

class DecoratedForest {
 public:
  DecoratedForest(LabeledForest forest, std::vector<int> marked);
  DecoratedForest(LabeledForest forest, std::vector<int> marked, int free_component, detail::Unchecked);

  const LabeledForest& forest() const { return forest_; }
  int vertex_count() const { return forest_.vertex_count(); }
  const std::vector<int>& marked() const { return marked_; }
  /// Vertex set of the unique unmarked component.
  std::vector<int> free_tree() const;
  /// N(F): number of vertices of the free tree.
  int free_tree_size() const;

  bool operator==(const DecoratedForest& other) const {
    return forest_ == other.forest_ && marked_ == other.marked_;
  }

 private:
  LabeledForest forest_;
  std::vector<int> marked_;
  int free_component_ = 0;
};

class PartialDecoratedForest {
 public:
  PartialDecoratedForest(LabeledForest forest, std::vector<int> marked);
  PartialDecoratedForest(const DecoratedForest& f);  // NOLINT: every decorated forest is partial

  const LabeledForest& forest() const { return forest_; }
  int vertex_count() const { return forest_.vertex_count(); }
  const std::vector<int>& marked() const { return marked_; }
  /// Unmarked components (the free forest T(F)), each sorted, by least vertex.
  std::vector<std::vector<int>> free_components() const;
  /// Marked components (the rooted forest R(F)).
  std::vector<std::vector<int>> marked_components() const;

  bool operator==(const PartialDecoratedForest& other) const {
    return forest_ == other.forest_ && marked_ == other.marked_;
  }

 private:
  LabeledForest forest_;
  std::vector<int> marked_;
};

struct RootedForestCountTable {
  int n = 0;
  /// k -> t_{n,k} for 1 <= k <= n (empty when n = 0).
  std::map<int, BigInt> counts;

  BigInt at(int k) const;
  /// sum_k t_{n,k} x^k; the empty table evaluates to 1.
  Rational evaluate(const Rational& x) const;
};

// Pruefer code of a tree on `labels` (sequence of labels, length v-2).
std::vector<int> prufer_encode(std::span<const int> labels, std::span<const Edge> tree);
std::vector<Edge> prufer_decode(std::span<const int> labels, std::span<const int> code);

/// Calls fn(edges) for every labeled tree on `labels`, in Pruefer-lex order.
void for_each_tree(std::span<const int> labels, const std::function<void(std::span<const Edge>)>& fn);

/// Every labeled tree spanning `labels`; each forest has vertex_count equal to
/// the largest label. Throws ForestError("empty vertex set").
std::vector<LabeledForest> enumerate_trees(std::span<const int> labels);

/// Number of forests on n labeled vertices (phi(0) = 1).
BigInt forest_count(int n);

RootedForestCountTable rooted_forest_counts(int n);

/// Abel polynomial x (x - a n)^{n-1}; A_{0,a}(x) = 1.
Rational abel_eval(int n, long a, const Rational& x);

/// Sum over all forests on v labeled vertices of the gcd of the component sizes.
BigInt forest_gcd_sum(int v);

void for_each_decorated_forest(int n, const std::function<void(const DecoratedForest&)>& fn);
std::vector<DecoratedForest> enumerate_decorated_forests(int n);

void for_each_partial_decorated_forest(int n, const std::function<void(const PartialDecoratedForest&)>& fn);
std::vector<PartialDecoratedForest> enumerate_partial_decorated_forests(int n);

/// Replaces every marked component by its vertices, isolated and all marked.
/// Unmarked components are untouched.
PartialDecoratedForest reduce_decorated_forest(const PartialDecoratedForest& f);

}  // namespace cyclo::forests
