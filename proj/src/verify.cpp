#include "cyclo/verify.hpp"

#include "cyclo/combinatorics.hpp"
#include "cyclo/forests.hpp"
#include "cyclo/intlin.hpp"
#include "cyclo/linkage.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/zonotope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <random>
#include <sstream>

namespace cyclo::verify {

namespace z = zonotope;
namespace f = forests;
namespace lk = linkage;
using intlin::IntMatrix;

linkage::LinkageSpec random_linkage(int bars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den(1, 6);
  while (true) {
    std::vector<Rational> lengths;
    for (int i = 0; i < bars; ++i) {
      int q = den(rng);
      std::uniform_int_distribution<int> num(1, 6 * q);
      Rational l(num(rng), q);
      l.canonicalize();
      lengths.push_back(l);
    }
    std::sort(lengths.begin(), lengths.end());
    try {
      return lk::LinkageSpec::validate(lengths);
    } catch (const lk::LinkageError&) {
    }
  }
}

std::vector<IntMatrix> worked_example_matrices() {
  return {
      IntMatrix::from_rows({{1, 0, 0, -1}, {-1, 1, 0, -1}, {0, -1, 0, -1}, {0, 0, 1, -1}, {0, 0, -1, -1}, {0, 0, 0, 5}}),
      IntMatrix::from_rows({{1, 0, 0, 0, -1},
                            {-1, 0, 0, 0, 5},
                            {0, -1, 0, 0, -1},
                            {0, 1, -1, 0, -1},
                            {0, 0, 1, 1, -1},
                            {0, 0, 0, -1, -1}}),
      IntMatrix::from_rows({{1, 0, 0, 0, -1},
                            {-1, 0, 0, 0, -1},
                            {0, -1, 0, 0, -1},
                            {0, 1, -1, 0, 5},
                            {0, 0, 1, 1, -1},
                            {0, 0, 0, -1, -1}}),
  };
}

std::vector<f::PartialDecoratedForest> worked_example_forests() {
  using f::Edge;
  using f::LabeledForest;
  return {
      f::PartialDecoratedForest(LabeledForest(6, {Edge{1, 2}, Edge{2, 3}, Edge{4, 5}}), {6}),
      f::PartialDecoratedForest(LabeledForest(6, {Edge{1, 2}, Edge{3, 4}, Edge{4, 5}, Edge{5, 6}}), {2}),
      f::PartialDecoratedForest(LabeledForest(6, {Edge{1, 2}, Edge{3, 4}, Edge{4, 5}, Edge{5, 6}}), {4}),
  };
}

namespace {

class Suite {
 public:
  void check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, true, ""};
    try {
      r.detail = body();
    } catch (const Failure& e) {
      r.passed = false;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }

  struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  static void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
  }

  std::vector<CheckResult> results;
};

std::string str(const BigInt& z) { return z.get_str(); }
std::string str(const Rational& q) { return to_string(q); }

}  // namespace

std::vector<CheckResult> run_all(int n_max, unsigned jobs) {
  if (n_max < 2) throw InputError("verify needs --n-max >= 2");
  Suite s;
  const z::BruteForceOptions opts{0, jobs};
  const int brute_volume_max = std::min(n_max, 6);
  const int brute_lattice_max = std::min(n_max, 6);
  const int small_max = std::min(n_max, 5);

  s.check("volume.brute_equals_forests", [&] {
    std::ostringstream out;
    for (int n = 2; n <= brute_volume_max; ++n) {
      auto brute = z::volume_bruteforce(n, opts);
      auto forest = z::volume_by_forests(n);
      Suite::expect(brute == forest, "n=" + std::to_string(n) + ": brute " + str(brute.coeff) + " vs forests " +
                                         str(forest.coeff));
      out << "n=" << n << ":" << str(brute.coeff) << " ";
    }
    return out.str();
  });

  s.check("volume.zero_for_n_ge_3", [&] {
    for (int n = 3; n <= n_max; ++n) {
      auto v = n <= brute_volume_max ? z::volume_bruteforce(n, opts) : z::volume_by_forests(n);
      Suite::expect(v.coeff == 0, "n=" + std::to_string(n) + ": coeff " + str(v.coeff));
      Suite::expect(z::volume_closed_form(n).coeff == 0, "closed form nonzero at n=" + std::to_string(n));
    }
    return "n=3.." + std::to_string(n_max);
  });

  s.check("volume.n2_exception", [&] {
    auto brute = z::volume_bruteforce(2, opts), forest = z::volume_by_forests(2);
    Suite::expect(brute.coeff == -2 && forest.coeff == -2, "expected coeff -2 at n=2");
    return "coeff -2 (value -sqrt 2)";
  });

  s.check("volume.determinant_lemma", [&] {
    long forests_seen = 0, zero_subsets = 0;
    for (int n = 2; n <= small_max; ++n) {
      f::for_each_decorated_forest(n, [&](const f::DecoratedForest& F) {
        auto cols = z::forest_columns(F);
        cols.emplace_back(n, 1);
        BigInt raw = abs(intlin::determinant(IntMatrix::from_columns(cols)));
        const BigInt N = z::det_of_decorated_forest(F);
        Suite::expect(raw == ipow(BigInt(n), F.marked().size()) * N, "raw determinant mismatch");
        // Reduced matrix: radial columns replaced by unit vectors.
        const std::size_t edges = F.forest().edges().size();
        for (std::size_t i = 0; i < F.marked().size(); ++i) {
          std::vector<std::int64_t> unit(n, 0);
          unit[F.marked()[i] - 1] = 1;
          cols[edges + i] = unit;
        }
        Suite::expect(abs(intlin::determinant(IntMatrix::from_columns(cols))) == N, "reduced determinant != N(F)");
        ++forests_seen;
      });
      // Every (n-1)-subset that is not a decorated forest has determinant 0.
      std::set<std::pair<std::vector<f::Edge>, std::vector<int>>> decorated;
      f::for_each_decorated_forest(n, [&](const f::DecoratedForest& F) {
        decorated.insert({F.forest().edges(), F.marked()});
      });
      auto gens = z::cyclopermutohedron_generators(n).generators;
      gens.pop_back();
      for_each_combination(static_cast<int>(gens.size()), n - 1, [&](std::span<const int> pick) {
        std::vector<f::Edge> edges;
        std::vector<int> marked;
        std::vector<std::vector<std::int64_t>> cols;
        for (int p : pick) {
          const auto& g = gens[p];
          if (g.kind == z::GeneratorKind::edge) edges.push_back({g.i, g.j});
          else marked.push_back(g.i);
          cols.push_back(g.vector);
        }
        if (decorated.count({edges, marked})) return;
        cols.emplace_back(n, 1);
        Suite::expect(intlin::determinant(IntMatrix::from_columns(cols)) == 0, "non-forest subset with det != 0");
        ++zero_subsets;
      });
    }
    return std::to_string(forests_seen) + " forests, " + std::to_string(zero_subsets) + " zero subsets";
  });

  s.check("lattice.brute_equals_closed", [&] {
    std::ostringstream out;
    for (int n = 2; n <= brute_lattice_max; ++n) {
      BigInt brute = z::lattice_count_bruteforce(n, opts), closed = z::lattice_count_closed_form(n);
      Suite::expect(brute == closed, "n=" + std::to_string(n) + ": " + str(brute) + " vs " + str(closed));
      out << "n=" << n << ":" << str(closed) << " ";
    }
    const std::map<int, int> known{{2, 0}, {3, 1}, {4, 18}};
    for (auto [n, v] : known) Suite::expect(z::lattice_count_closed_form(n) == v, "known value mismatch");
    return out.str();
  });

  s.check("lattice.sharp_formula", [&] {
    long count = 0;
    for (int n = 1; n <= small_max; ++n) {
      f::for_each_partial_decorated_forest(n, [&](const f::PartialDecoratedForest& F) {
        BigInt formula = z::sharp_of_partial_forest(F, n);
        BigInt minors = intlin::semiopen_lattice_count(IntMatrix::from_columns(z::forest_columns(F), n));
        Suite::expect(formula == minors, "sharp mismatch at n=" + std::to_string(n));
        ++count;
      });
    }
    return std::to_string(count) + " partial forests";
  });

  s.check("lattice.worked_examples", [&] {
    const int expected[] = {1, 4, 2};
    auto mats = worked_example_matrices();
    auto fs = worked_example_forests();
    for (int i = 0; i < 3; ++i) {
      Suite::expect(intlin::semiopen_lattice_count(mats[i]) == expected[i], "minor gcd");
      Suite::expect(oracle::semiopen_count_direct(mats[i]) == expected[i], "point scan");
      Suite::expect(z::sharp_of_partial_forest(fs[i], 6) == expected[i], "gcd formula");
    }
    return "1, 4, 2";
  });

  s.check("permutohedron.lattice_points", [&] {
    for (int n = 1; n <= small_max; ++n)
      Suite::expect(z::permutohedron_lattice_count(n) == oracle::permutohedron_lattice_points_direct(n),
                    "n=" + std::to_string(n));
    return "n=1.." + std::to_string(small_max);
  });

  s.check("permutohedron.volume", [&] {
    Suite::expect(oracle::hexagon_area_direct() == z::permutohedron_volume(3), "hexagon area");
    for (int n = 2; n <= std::min(n_max, 6); ++n) {
      BigInt sum = 0;
      std::vector<int> labels(n);
      for (int i = 0; i < n; ++i) labels[i] = i + 1;
      f::for_each_tree(labels, [&](std::span<const f::Edge> tree) {
        std::vector<std::vector<std::int64_t>> cols;
        for (const auto& e : tree) {
          std::vector<std::int64_t> c(n, 0);
          c[e.u - 1] = -1;
          c[e.v - 1] = 1;
          cols.push_back(c);
        }
        cols.emplace_back(n, 1);
        sum += abs(intlin::determinant(IntMatrix::from_columns(cols)));
      });
      Suite::expect(sum == z::permutohedron_volume(n).coeff, "n=" + std::to_string(n));
    }
    return "coeff n^(n-1)";
  });

  s.check("forests.counts_vs_scan", [&] {
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
      BigInt forests = 0, gcds = 0;
      oracle::for_each_forest_direct(n, [&](const std::vector<int>& sizes) {
        ++forests;
        int g = 0;
        for (int sz : sizes) g = std::gcd(g, sz);
        gcds += g;
      });
      Suite::expect(forests == f::forest_count(n), "phi(" + std::to_string(n) + ")");
      Suite::expect(gcds == f::forest_gcd_sum(n), "Phi(" + std::to_string(n) + ")");
    }
    return "phi, Phi";
  });

  s.check("forests.abel_identity", [&] {
    for (int n = 0; n <= 8; ++n) {
      auto table = f::rooted_forest_counts(n);
      for (int x : {-n, -1, 0, 1, 2})
        Suite::expect(table.evaluate(x) == f::abel_eval(n, -1, x), "n=" + std::to_string(n));
    }
    return "n<=8";
  });

  s.check("forests.grouped_sum_identity", [&] {
    for (int n = 3; n <= 10; ++n) {
      Rational lhs = z::volume_closed_form(n).coeff;
      BigInt alt = 0, p_at_minus_one = 0;
      for (int N = 1; N <= n; ++N) {
        BigInt term = binomial(n, N) * ipow(BigInt(N), n - 2);
        alt += N % 2 ? BigInt(-term) : term;
      }
      p_at_minus_one = alt;  // the N = 0 term vanishes for n >= 3
      BigInt rhs = (n % 2 ? -1 : 1) * n * alt;
      Suite::expect(lhs == Rational(rhs), "n=" + std::to_string(n));
      Suite::expect(p_at_minus_one == 0, "p(-1) at n=" + std::to_string(n));
    }
    return "3<=n<=10";
  });

  s.check("linkage.volume_routes", [&] {
    std::vector<lk::LinkageSpec> specs;
    for (auto csv : {"6/5,1,1,4/5,11/5", "1,1,1,1,1", "1,1,1,1,39/10"})
      specs.push_back(lk::LinkageSpec::validate(lk::parse_lengths(csv)));
    for (int bars = 4; bars <= std::min(n_max, 5) + 1; ++bars)
      for (int i = 0; i < 20; ++i) specs.push_back(random_linkage(bars, 1000 * bars + i));
    for (const auto& L : specs)
      Suite::expect(lk::moduli_volume_theorem(L) == lk::moduli_volume_forests(L), "theorem != forests");
    return std::to_string(specs.size()) + " linkages";
  });

  s.check("linkage.topology", [&] {
    std::vector<lk::LinkageSpec> specs;
    for (auto csv : {"6/5,1,1,4/5,11/5", "1,1,1,1,1", "1,1,1,1,39/10"})
      specs.push_back(lk::LinkageSpec::validate(lk::parse_lengths(csv)));
    for (int bars = 4; bars <= std::min(n_max, 5) + 1; ++bars)
      for (int i = 0; i < 10; ++i) specs.push_back(random_linkage(bars, 7000 * bars + i));
    for (const auto& L : specs) {
      auto beta = lk::betti_numbers(L);
      BigInt alt = 0;
      for (std::size_t k = 0; k < beta.size(); ++k) alt += k % 2 ? BigInt(-beta[k]) : beta[k];
      Suite::expect(alt == lk::euler_characteristic(L), "sum (-1)^k beta_k != chi");
      for (std::size_t k = 0; k < beta.size(); ++k)
        Suite::expect(beta[k] == beta[beta.size() - 1 - k], "Poincare duality");
    }
    auto eq = lk::LinkageSpec::validate(lk::parse_lengths("1,1,1,1,1"));
    Suite::expect(lk::betti_numbers(eq) == std::vector<BigInt>{1, 8, 1}, "equilateral pentagon Betti");
    Suite::expect(lk::f_vector(eq) == std::vector<BigInt>{24, 60, 30}, "equilateral f-vector");
    auto near = lk::LinkageSpec::validate(lk::parse_lengths("1,1,1,1,39/10"));
    Suite::expect(lk::f_vector(near) == std::vector<BigInt>{24, 36, 14}, "near-degenerate f-vector");
    return std::to_string(specs.size()) + " linkages";
  });

  s.check("linkage.equilateral_corollary_flagged", [&] {
    auto v = lk::equilateral_volume(2);
    Suite::expect(v.disagreement, "corollary unexpectedly agrees");
    Suite::expect(v.corollary.coeff == 16 && v.theorem.coeff == -80, "m=2 values");
    Suite::expect(v.forests && *v.forests == v.theorem, "forest route disagrees with theorem");
    return "corollary 8 vs theorem -40";
  });

  return s.results;
}

}  // namespace cyclo::verify
