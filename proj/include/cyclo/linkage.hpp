// Planar polygonal linkages L = (l_1, ..., l_{n+1}): short/long subsets, the
// a-profile, the volume of the configuration-space complex K(L) (by the
// a-profile formula and by non-admissible decorated forests), Betti numbers,
// and the cells of K(L) labeled by cyclically ordered admissible partitions.
#pragma once

#include "cyclo/exact.hpp"
#include "cyclo/zonotope.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclo::linkage {

enum class LinkageErrorKind { too_few_bars, too_many_bars, non_positive_length, longest_not_last, on_wall, triangle };

class LinkageError : public std::invalid_argument {
 public:
  LinkageError(LinkageErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  LinkageErrorKind kind() const { return kind_; }

 private:
  LinkageErrorKind kind_;
};

inline constexpr int kMaxBars = 24;

class LinkageSpec {
 public:
  /// Validates and wraps the lengths. Checks, in order: bar count, positivity,
  /// longest bar last, genericity (no signed sum vanishes), triangle inequality.
  static LinkageSpec validate(std::vector<Rational> lengths);

  /// Number of bars minus one.
  int n() const { return static_cast<int>(lengths_.size()) - 1; }
  int bars() const { return static_cast<int>(lengths_.size()); }
  const std::vector<Rational>& lengths() const { return lengths_; }
  const Rational& perimeter() const { return perimeter_; }

 private:
  explicit LinkageSpec(std::vector<Rational> lengths);
  std::vector<Rational> lengths_;
  Rational perimeter_;
};

/// Parses "1.2,1,1,0.8,2.2" (integers, p/q or finite decimals) into lengths.
std::vector<Rational> parse_lengths(std::string_view csv);

/// A cyclically ordered partition of [N]. Stored with each block sorted and
/// rotated so that the block containing N comes last.
class CyclicPartition {
 public:
  explicit CyclicPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int ground_size() const { return ground_; }
  std::size_t size() const { return blocks_.size(); }
  std::string to_string() const;

  bool operator==(const CyclicPartition&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int ground_ = 0;
};

struct ShortSetProfile {
  /// a[k] = number of k-subsets S of [n] with S + {n+1} short, k = 0..n.
  std::vector<BigInt> a;
  BigInt at(int k) const { return k < 0 || k >= static_cast<int>(a.size()) ? BigInt(0) : a[k]; }
};

enum class BettiConvention {
  shifted,  // beta_k = a_k + a_{(n-2)-k}
  literal   // beta_k = a_k + a_{n-k-3}, the form written with a different n
};

/// Subset given as 1-based bar indices. Throws InputError on an empty subset.
bool is_short(std::span<const int> subset, const LinkageSpec& L);

ShortSetProfile a_profile(const LinkageSpec& L);

/// coeff = n * sum_k (-1)^k a_k (n-k)^{n-2}, radicand n.
zonotope::NormalizedVolume moduli_volume_theorem(const LinkageSpec& L);

/// Sum over decorated forests on [n] whose free tree is a long set of
/// (-n)^{|M|} N(F). Default bound n <= 6.
zonotope::NormalizedVolume moduli_volume_forests(const LinkageSpec& L, int bound = 0);

inline constexpr int kForestVolumeBound = 6;

/// beta_k for 0 <= k <= n-2.
BigInt betti(const LinkageSpec& L, int k, BettiConvention convention = BettiConvention::shifted);
std::vector<BigInt> betti_numbers(const LinkageSpec& L, BettiConvention convention = BettiConvention::shifted);

/// Admissible cyclically ordered partitions of [n+1] with at least three
/// blocks. Order: set partitions in restricted-growth order, then the blocks
/// other than the one holding n+1 in lexicographic permutation order.
void for_each_cell(const LinkageSpec& L, const std::function<void(const CyclicPartition&)>& fn);
std::vector<CyclicPartition> enumerate_cells(const LinkageSpec& L);

/// Dimension of the cell labeled by p: (n+1) - #blocks.
int cell_dimension(const CyclicPartition& p);

/// f_k for k = 0..n-2.
std::vector<BigInt> f_vector(const LinkageSpec& L);
BigInt euler_characteristic(const LinkageSpec& L);

/// True iff q arises from p by merging cyclically consecutive blocks.
/// Throws InputError if the ground sets differ.
bool is_refinement(const CyclicPartition& p, const CyclicPartition& q);

struct EquilateralVolumes {
  int m = 0;
  zonotope::NormalizedVolume corollary;  // closed sum weighted by C(2m, k)
  zonotope::NormalizedVolume corollary_profile;  // a_k = C(n-1, k) for k <= m
  zonotope::NormalizedVolume theorem;    // a-profile computed from the definition
  std::optional<zonotope::NormalizedVolume> forests;  // when n <= forest bound
  bool disagreement = false;             // corollary differs from the theorem route
};

/// Equilateral linkage with 2m+1 unit bars (n = 2m), m >= 2.
EquilateralVolumes equilateral_volume(int m);

}  // namespace cyclo::linkage
