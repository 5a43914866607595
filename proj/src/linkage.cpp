#include "cyclo/linkage.hpp"

#include "cyclo/combinatorics.hpp"
#include "cyclo/forests.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace cyclo::linkage {

using zonotope::NormalizedVolume;

namespace {

// Lengths scaled to integers by the lcm of their denominators.
struct ScaledLengths {
  std::vector<BigInt> value;
  BigInt perimeter;
  bool fits_int64 = false;
};

ScaledLengths scale(const std::vector<Rational>& lengths) {
  BigInt lcm = 1;
  for (const auto& l : lengths) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), l.get_den().get_mpz_t());
  ScaledLengths s;
  for (const auto& l : lengths) {
    BigInt v = l.get_num() * (lcm / l.get_den());
    s.value.push_back(v);
    s.perimeter += v;
  }
  s.fits_int64 = s.perimeter < BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  return s;
}

// True iff some subset of the scaled lengths sums to exactly half the perimeter.
template <class Int>
bool hits_wall(const std::vector<Int>& v, const Int& perimeter) {
  // A signed sum vanishes iff a subset sums to perimeter/2. Fixing the sign of
  // the last bar halves the scan.
  const int count = static_cast<int>(v.size());
  const Int target = perimeter;  // compare 2 * subset with perimeter
  const unsigned long long subsets = 1ULL << (count - 1);
  Int sum = v[count - 1];
  unsigned long long gray = 0;
  for (unsigned long long i = 0;; ++i) {
    if (sum + sum == target) return true;
    if (i + 1 == subsets) break;
    // Flip the bit that changes between gray(i) and gray(i+1).
    int bit = __builtin_ctzll(i + 1);
    gray ^= 1ULL << bit;
    if (gray & (1ULL << bit)) sum += v[bit];
    else sum -= v[bit];
  }
  return false;
}

template <class Int>
std::vector<BigInt> count_short_profile(const std::vector<Int>& v, const Int& perimeter) {
  const int n = static_cast<int>(v.size()) - 1;
  std::vector<unsigned long long> counts(n + 1, 0);
  const unsigned long long subsets = 1ULL << n;
  Int sum = v[n];
  unsigned long long gray = 0;
  int size = 0;
  for (unsigned long long i = 0;; ++i) {
    if (sum + sum < perimeter) ++counts[size];
    if (i + 1 == subsets) break;
    int bit = __builtin_ctzll(i + 1);
    gray ^= 1ULL << bit;
    if (gray & (1ULL << bit)) {
      sum += v[bit];
      ++size;
    } else {
      sum -= v[bit];
      --size;
    }
  }
  std::vector<BigInt> out;
  for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

std::vector<std::int64_t> to_int64(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

bool is_long_set(const std::vector<int>& subset, const LinkageSpec& L) {
  Rational sum = 0;
  for (int i : subset) sum += L.lengths()[i - 1];
  return 2 * sum > L.perimeter();
}

}  // namespace

LinkageSpec::LinkageSpec(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
  for (const auto& l : lengths_) perimeter_ += l;
}

LinkageSpec LinkageSpec::validate(std::vector<Rational> lengths) {
  using K = LinkageErrorKind;
  if (lengths.size() < 3) throw LinkageError(K::too_few_bars, "a linkage needs at least 3 bars");
  if (lengths.size() > static_cast<std::size_t>(kMaxBars))
    throw LinkageError(K::too_many_bars, "too many bars (at most " + std::to_string(kMaxBars) + ")");
  for (std::size_t i = 0; i < lengths.size(); ++i)
    if (lengths[i] <= 0)
      throw LinkageError(K::non_positive_length, "non-positive length at bar " + std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i)
    if (lengths[i] > lengths.back())
      throw LinkageError(K::longest_not_last, "the longest bar must be last (bar " + std::to_string(i + 1) +
                                                  " is longer than bar " + std::to_string(lengths.size()) + ")");
  const ScaledLengths s = scale(lengths);
  const bool wall = s.fits_int64 ? hits_wall(to_int64(s.value), s.perimeter.get_si())
                                 : hits_wall(s.value, s.perimeter);
  if (wall) throw LinkageError(K::on_wall, "lengths lie on a wall: some signed sum of lengths vanishes");
  LinkageSpec spec(std::move(lengths));
  for (std::size_t i = 0; i < spec.lengths_.size(); ++i)
    if (2 * spec.lengths_[i] >= spec.perimeter_)
      throw LinkageError(K::triangle, "triangle inequality violated at bar " + std::to_string(i + 1));
  return spec;
}

std::vector<Rational> parse_lengths(std::string_view csv) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = csv.find(',', start);
    std::string_view item = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
    out.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

CyclicPartition::CyclicPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::set<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw InputError("cyclic partition has an empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1) throw InputError("cyclic partition elements must be positive");
      if (!seen.insert(x).second) throw InputError("cyclic partition blocks overlap");
    }
  }
  ground_ = static_cast<int>(seen.size());
  if (ground_ == 0) throw InputError("cyclic partition is empty");
  if (*seen.rbegin() != ground_) throw InputError("cyclic partition must cover 1..N");
  auto last = std::find_if(blocks_.begin(), blocks_.end(),
                           [&](const std::vector<int>& b) { return b.back() == ground_; });
  std::rotate(blocks_.begin(), last + 1, blocks_.end());
}

std::string CyclicPartition::to_string() const {
  std::string s = "(";
  for (const auto& b : blocks_) {
    s += "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += "}";
  }
  return s + ")";
}

bool is_short(std::span<const int> subset, const LinkageSpec& L) {
  if (subset.empty()) throw InputError("is_short needs a non-empty subset");
  std::set<int> distinct(subset.begin(), subset.end());
  if (distinct.size() != subset.size()) throw InputError("subset has repeated bars");
  if (*distinct.begin() < 1 || *distinct.rbegin() > L.bars()) throw InputError("bar index out of range");
  Rational sum = 0;
  for (int i : subset) sum += L.lengths()[i - 1];
  return 2 * sum < L.perimeter();
}

ShortSetProfile a_profile(const LinkageSpec& L) {
  const ScaledLengths s = scale(L.lengths());
  ShortSetProfile p;
  p.a = s.fits_int64 ? count_short_profile(to_int64(s.value), s.perimeter.get_si())
                     : count_short_profile(s.value, s.perimeter);
  return p;
}

NormalizedVolume moduli_volume_theorem(const LinkageSpec& L) {
  const int n = L.n();
  const ShortSetProfile p = a_profile(L);
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    if (p.at(k) == 0) continue;
    BigInt term = p.at(k) * ipow(BigInt(n - k), n - 2);
    if (k % 2) sum -= term;
    else sum += term;
  }
  return {Rational(sum * n), static_cast<unsigned long>(n)};
}

NormalizedVolume moduli_volume_forests(const LinkageSpec& L, int bound) {
  const int n = L.n();
  if (n > (bound > 0 ? bound : kForestVolumeBound))
    throw zonotope::BoundError("n above forest-enumeration bound; use moduli_volume_theorem");
  BigInt coeff = 0;
  forests::for_each_decorated_forest(n, [&](const forests::DecoratedForest& f) {
    if (!is_long_set(f.free_tree(), L)) return;
    coeff += ipow(BigInt(-n), f.marked().size()) * f.free_tree_size();
  });
  return {Rational(coeff), static_cast<unsigned long>(n)};
}

BigInt betti(const LinkageSpec& L, int k, BettiConvention convention) {
  const int n = L.n();
  if (k < 0 || k > n - 2) throw InputError("Betti index k out of range [0, n-2]");
  const ShortSetProfile p = a_profile(L);
  const int partner = convention == BettiConvention::shifted ? (n - 2) - k : n - k - 3;
  return p.at(k) + p.at(partner);
}

std::vector<BigInt> betti_numbers(const LinkageSpec& L, BettiConvention convention) {
  std::vector<BigInt> out;
  for (int k = 0; k <= L.n() - 2; ++k) out.push_back(betti(L, k, convention));
  return out;
}

namespace {

template <class Fn>
void for_each_admissible_partition(const LinkageSpec& L, Fn&& fn) {
  const int ground = L.bars();
  for_each_set_partition(ground, [&](const std::vector<std::vector<int>>& blocks) {
    if (blocks.size() < 3) return;
    for (const auto& b : blocks)
      if (!is_short(b, L)) return;
    fn(blocks);
  });
}

}  // namespace

void for_each_cell(const LinkageSpec& L, const std::function<void(const CyclicPartition&)>& fn) {
  const int ground = L.bars();
  for_each_admissible_partition(L, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<std::vector<int>> others;
    std::vector<int> last;
    for (const auto& b : blocks) {
      if (b.back() == ground) last = b;
      else others.push_back(b);
    }
    std::vector<int> order(others.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<std::vector<int>> cell;
      for (int i : order) cell.push_back(others[i]);
      cell.push_back(last);
      fn(CyclicPartition(std::move(cell)));
    } while (std::next_permutation(order.begin(), order.end()));
  });
}

std::vector<CyclicPartition> enumerate_cells(const LinkageSpec& L) {
  std::vector<CyclicPartition> out;
  for_each_cell(L, [&](const CyclicPartition& c) { out.push_back(c); });
  return out;
}

int cell_dimension(const CyclicPartition& p) { return p.ground_size() - static_cast<int>(p.size()); }

std::vector<BigInt> f_vector(const LinkageSpec& L) {
  const int n = L.n();
  std::vector<BigInt> f(n - 1, 0);
  for_each_admissible_partition(L, [&](const std::vector<std::vector<int>>& blocks) {
    const int b = static_cast<int>(blocks.size());
    f[(n + 1) - b] += factorial(b - 1);
  });
  return f;
}

BigInt euler_characteristic(const LinkageSpec& L) {
  const auto f = f_vector(L);
  BigInt chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -f[k] : f[k]);
  return chi;
}

bool is_refinement(const CyclicPartition& p, const CyclicPartition& q) {
  if (p.ground_size() != q.ground_size()) throw InputError("partitions have different ground sets");
  const auto& fine = p.blocks();
  const auto& coarse = q.blocks();
  const std::size_t P = fine.size(), Q = coarse.size();
  if (Q > P) return false;
  for (std::size_t start = 0; start < P; ++start) {
    std::size_t at = 0;
    bool ok = true;
    for (std::size_t j = 0; j < Q && ok; ++j) {
      std::vector<int> merged;
      while (merged.size() < coarse[j].size() && at < P) {
        const auto& b = fine[(start + at++) % P];
        merged.insert(merged.end(), b.begin(), b.end());
      }
      std::sort(merged.begin(), merged.end());
      ok = merged == coarse[j];
    }
    if (ok && at == P) return true;
  }
  return false;
}

EquilateralVolumes equilateral_volume(int m) {
  if (m < 2) throw InputError("equilateral_volume needs m >= 2");
  const int n = 2 * m;
  EquilateralVolumes out;
  out.m = m;

  auto from_profile = [&](auto&& a_k, int k_max) {
    BigInt sum = 0;
    for (int k = 0; k <= k_max; ++k) {
      BigInt term = a_k(k) * ipow(BigInt(n - k), n - 2);
      if (k % 2) sum -= term;
      else sum += term;
    }
    return NormalizedVolume{Rational(sum * n), static_cast<unsigned long>(n)};
  };
  out.corollary = from_profile([&](int k) { return binomial(n, k); }, m);
  out.corollary_profile = from_profile([&](int k) { return binomial(n - 1, k); }, m);

  const auto L = LinkageSpec::validate(std::vector<Rational>(n + 1, Rational(1)));
  out.theorem = moduli_volume_theorem(L);
  if (n <= kForestVolumeBound) out.forests = moduli_volume_forests(L);
  out.disagreement = !(out.corollary == out.theorem);
  return out;
}

}  // namespace cyclo::linkage
