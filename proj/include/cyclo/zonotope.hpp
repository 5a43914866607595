// The cyclopermutohedron as a virtual zonotope: generator system, volume and
// signed lattice-point count, each by a brute-force brick sum and by forest
// formulas; plus the permutohedron specializations.
//
// Everything lives in R^n. Edge generators are e_j - e_i (i < j, weight +1),
// radial generators are R_i = e - n e_i (weight -1), and the translation is
// e = (1,...,1). Volumes of the (n-1)-dimensional objects are reported as
// c / sqrt(n) with c exact: c is the sum of |det(brick vectors, e)|.
#pragma once

#include "cyclo/exact.hpp"
#include "cyclo/forests.hpp"
#include "cyclo/intlin.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclo::zonotope {

/// Raised when a brute-force routine is asked for n beyond its bound.
class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GeneratorKind { edge, radial, translation };

struct Generator {
  std::vector<std::int64_t> vector;
  GeneratorKind kind = GeneratorKind::edge;
  int i = 0;  // edge(i, j) or radial(i); unused for the translation
  int j = 0;
  int weight = 1;
};

struct VirtualZonotope {
  int dim = 0;
  /// Edges in lexicographic (i, j) order, then radials by index, then e.
  std::vector<Generator> generators;
};

/// Exact value coeff / sqrt(radicand).
struct NormalizedVolume {
  Rational coeff;
  unsigned long radicand = 1;

  bool coeff_is_integer() const { return coeff.get_den() == 1; }
  std::string approx(int digits = 15) const { return approx_string(coeff, radicand, digits); }
  bool operator==(const NormalizedVolume& o) const { return coeff == o.coeff && radicand == o.radicand; }
};

struct BruteForceOptions {
  int bound = 0;       // 0 selects the routine's default bound
  unsigned jobs = 1;   // worker threads
};

VirtualZonotope cyclopermutohedron_generators(int n);

/// Column vectors (edge / radial) of a partial decorated forest in the order
/// edges then marked radials, as used for determinants and lattice counts.
std::vector<std::vector<std::int64_t>> forest_columns(const forests::PartialDecoratedForest& f);

/// Sum over (n-1)-subsets of edge and radial generators of
/// (-1)^{#radial} |det(vectors, e)|. Default bound n <= 7.
NormalizedVolume volume_bruteforce(int n, BruteForceOptions opts = {});

/// Sum over decorated forests of (-n)^{|M|} N(F).
NormalizedVolume volume_by_forests(int n);

/// Forests grouped by the free-tree size:
/// sum_N C(n,N) N^{N-1} A_{n-N}(-n), with A the Abel polynomial at a = -1.
NormalizedVolume volume_closed_form(int n);

/// N(F), the absolute determinant of (edge columns, unit columns e_k for the
/// marked k, e). With the raw radial columns the determinant is n^{|M|} N(F).
BigInt det_of_decorated_forest(const forests::DecoratedForest& f);

NormalizedVolume permutohedron_volume(int n);

/// Lattice points of the semiopen brick of a partial decorated forest:
/// 1 without marks, otherwise n^{|M|-1} gcd(free component sizes), and 0 when
/// the free forest is empty.
BigInt sharp_of_partial_forest(const forests::PartialDecoratedForest& f, int n);

/// Signed sum over all subsets of edge and radial generators of size <= n-1
/// of (-1)^{#radial} times the semiopen brick count. Default bound n <= 6.
BigInt lattice_count_bruteforce(int n, BruteForceOptions opts = {});

/// phi(n) - sum_{v=1}^{n-1} C(n,v) (-v)^{n-v-1} Phi(v).
BigInt lattice_count_closed_form(int n);

BigInt permutohedron_lattice_count(int n);

inline constexpr int kVolumeBruteBound = 7;
inline constexpr int kLatticeBruteBound = 6;

}  // namespace cyclo::zonotope
