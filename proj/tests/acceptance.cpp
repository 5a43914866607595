// Acceptance suite: one PASS/FAIL line per criterion. Expected values come from
// independent recomputation inside this file (point scans, subset scans,
// shoelace, direct polynomial evaluation) or from the published examples.

#include "cyclo/combinatorics.hpp"
#include "cyclo/forests.hpp"
#include "cyclo/intlin.hpp"
#include "cyclo/linkage.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/verify.hpp"
#include "cyclo/zonotope.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace cyclo;
namespace z = zonotope;
namespace f = forests;
namespace lk = linkage;
using intlin::IntMatrix;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string s(const Rational& q) { return to_string(q); }

lk::LinkageSpec linkage_of(const std::string& csv) { return lk::LinkageSpec::validate(lk::parse_lengths(csv)); }

// a_k recounted from the definition: k-subsets S of [n] with S + {n+1} short.
std::vector<BigInt> a_profile_scan(const lk::LinkageSpec& L) {
  const auto& len = L.lengths();
  const int n = L.n();
  std::vector<BigInt> a(n + 1, 0);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Rational sum = len[n];
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sum += len[i];
    if (2 * sum < L.perimeter()) ++a[__builtin_popcountl(mask)];
  }
  return a;
}

// f-vector recounted from admissible set partitions: b >= 3 short blocks give
// (b-1)! cells of dimension n + 1 - b.
std::vector<BigInt> f_vector_scan(const lk::LinkageSpec& L) {
  const int bars = L.bars();
  std::vector<BigInt> fv(bars - 2, 0);
  for_each_set_partition(bars, [&](const std::vector<std::vector<int>>& blocks) {
    const int b = static_cast<int>(blocks.size());
    if (b < 3) return;
    for (const auto& block : blocks) {
      Rational sum = 0;
      for (int i : block) sum += L.lengths()[i - 1];
      if (2 * sum >= L.perimeter()) return;
    }
    fv[bars - b] += factorial(b - 1);
  });
  return fv;
}

// Free-tree size of a decorated forest from its edge list and marks alone.
int free_tree_size_scan(const f::DecoratedForest& F) {
  const int n = F.vertex_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& e : F.forest().edges()) parent[find(e.u)] = find(e.v);
  std::vector<bool> marked_root(n + 1, false);
  for (int m : F.marked()) marked_root[find(m)] = true;
  std::vector<int> size(n + 1, 0);
  for (int v = 1; v <= n; ++v) ++size[find(v)];
  int free_size = 0, free_count = 0;
  for (int v = 1; v <= n; ++v)
    if (find(v) == v && !marked_root[v]) {
      free_size = size[v];
      ++free_count;
    }
  expect(free_count == 1, "decorated forest without exactly one free tree");
  return free_size;
}

struct Outcome {
  int exit_code = -1;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(ZONOLINK_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Outcome o;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), got);
  const int status = pclose(pipe);
  o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing golden file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

std::string criterion1() {
  const auto t0 = Clock::now();
  std::ostringstream d;
  for (int n = 3; n <= 6; ++n) {
    auto brute = z::volume_bruteforce(n);
    auto forest = z::volume_by_forests(n);
    expect(brute.coeff == 0, "brute coeff nonzero at n=" + std::to_string(n) + ": " + s(brute.coeff));
    expect(brute == forest, "methods disagree at n=" + std::to_string(n));
  }
  for (int n = 7; n <= 8; ++n) {
    auto forest = z::volume_by_forests(n);
    expect(forest.coeff == 0, "forest coeff nonzero at n=" + std::to_string(n) + ": " + s(forest.coeff));
  }
  const double secs = seconds_since(t0);
  expect(secs < 300, "took " + std::to_string(secs) + " s");
  d << "coeff 0 for n=3..6 (brute = forests) and n=7,8 (forests), " << secs << " s";
  return d.str();
}

std::string criterion2() {
  // Every generator at n = 2 is parallel to (-1, 1); signed length is
  // sum w * |v|, written over sqrt 2 as sum w * sqrt(2 |v|^2).
  Rational segment = 0;
  for (const auto& g : z::cyclopermutohedron_generators(2).generators) {
    if (g.kind == z::GeneratorKind::translation) continue;
    expect(g.vector[0] == -g.vector[1], "generator not parallel to (-1, 1)");
    const long sq = 2 * (g.vector[0] * g.vector[0] + g.vector[1] * g.vector[1]);
    BigInt root = sqrt(BigInt(sq));
    expect(root * root == sq, "segment length not a multiple of 1/sqrt 2");
    segment += g.weight * root;
  }
  auto brute = z::volume_bruteforce(2), forest = z::volume_by_forests(2), closed = z::volume_closed_form(2);
  expect(segment == -2, "virtual segment gives " + s(segment));
  expect(brute.coeff == segment && forest.coeff == segment && closed.coeff == segment, "methods disagree at n=2");
  expect(brute.radicand == 2, "radicand");
  expect(brute.coeff != 0, "volume vanishes at n=2");
  return "coeff -2 by brute, forests, closed form and virtual segment; the vanishing statement fails at n=2";
}

std::string criterion3() {
  const auto t0 = Clock::now();
  const std::array<int, 3> expected{0, 1, 18};
  for (int n = 2; n <= 4; ++n) {
    BigInt brute = z::lattice_count_bruteforce(n), closed = z::lattice_count_closed_form(n);
    expect(brute == expected[n - 2], "summand sum at n=" + std::to_string(n) + " is " + brute.get_str());
    expect(closed == expected[n - 2], "closed form at n=" + std::to_string(n) + " is " + closed.get_str());
  }
  // Third route for n <= 4: the same signed sum with each brick counted by a point scan.
  for (int n = 2; n <= 4; ++n) {
    auto gens = z::cyclopermutohedron_generators(n).generators;
    gens.pop_back();
    BigInt total = 0;
    for (int k = 0; k <= n - 1; ++k)
      for_each_combination(static_cast<int>(gens.size()), k, [&](std::span<const int> pick) {
        std::vector<std::vector<std::int64_t>> cols;
        int radials = 0;
        for (int p : pick) {
          cols.push_back(gens[p].vector);
          radials += gens[p].kind == z::GeneratorKind::radial;
        }
        BigInt c = oracle::semiopen_count_direct(IntMatrix::from_columns(cols, n));
        total += radials % 2 ? BigInt(-c) : c;
      });
    expect(total == expected[n - 2], "point-scan sum at n=" + std::to_string(n) + " is " + total.get_str());
  }
  BigInt b5 = z::lattice_count_bruteforce(5), c5 = z::lattice_count_closed_form(5);
  expect(b5 == c5, "n=5: " + b5.get_str() + " vs " + c5.get_str());
  const double secs = seconds_since(t0);
  expect(secs < 120, "took " + std::to_string(secs) + " s");
  return "0, 1, 18 at n=2,3,4 by three routes; n=5 both give " + c5.get_str();
}

std::string criterion4() {
  const std::array<int, 3> expected{1, 4, 2};
  auto mats = verify::worked_example_matrices();
  auto fs = verify::worked_example_forests();
  for (int i = 0; i < 3; ++i) {
    const std::string tag = "example " + std::to_string(i + 1);
    expect(z::sharp_of_partial_forest(fs[i], 6) == expected[i], tag + ": gcd formula");
    expect(intlin::semiopen_lattice_count(mats[i]) == expected[i], tag + ": minor gcd");
    expect(oracle::semiopen_count_direct(mats[i]) == expected[i], tag + ": point scan");
    expect(intlin::semiopen_lattice_count(IntMatrix::from_columns(z::forest_columns(fs[i]), 6)) == expected[i],
           tag + ": forest columns");
  }
  return "1, 4, 2 by gcd formula, minor gcd and point scan";
}

std::string criterion5() {
  const std::array<int, 5> phi{1, 2, 7, 38, 291};
  for (int n = 1; n <= 5; ++n) {
    BigInt scanned = oracle::permutohedron_lattice_points_direct(n);
    expect(scanned == phi[n - 1], "oracle at n=" + std::to_string(n) + " gives " + scanned.get_str());
    expect(z::permutohedron_lattice_count(n) == scanned, "formula at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 8; ++n) {
    auto v = z::permutohedron_volume(n);
    expect(v.radicand == static_cast<unsigned long>(n) && v.coeff == ipow(n, n - 1),
           "volume coeff at n=" + std::to_string(n));
    // The short formula sqrt(n) n^(n-3) equals n^(n-2) / sqrt(n): off by a factor n.
    expect(Rational(ipow(n, n - 2)) != v.coeff, "short formula unexpectedly agrees at n=" + std::to_string(n));
  }
  auto hex = oracle::hexagon_area_direct();
  expect(hex == z::permutohedron_volume(3), "shoelace area " + s(hex.coeff) + "/sqrt " + std::to_string(hex.radicand));
  expect(hex.coeff == 9 && hex.radicand == 3, "hexagon area is not 3 sqrt 3");
  return "phi = 1,2,7,38,291; coeff n^(n-1); hexagon 3 sqrt 3; sqrt(n) n^(n-3) off by factor n";
}

std::string criterion6() {
  // Rooted forest counts: library table vs x (x + n)^(n-1) evaluated here.
  for (int n = 0; n <= 8; ++n) {
    auto table = f::rooted_forest_counts(n);
    for (int x : {-n, -1, 0, 1, 2}) {
      Rational direct = n == 0 ? Rational(1) : Rational(x * ipow(x + n, n - 1));
      expect(table.evaluate(x) == direct, "table at n=" + std::to_string(n) + ", x=" + std::to_string(x));
      expect(f::abel_eval(n, -1, x) == direct, "abel_eval at n=" + std::to_string(n));
    }
  }
  // And the table entries against a forest scan weighted by product of component sizes.
  for (int n = 1; n <= oracle::kForestOracleBound; ++n) {
    std::vector<BigInt> t(n + 1, 0);
    oracle::for_each_forest_direct(n, [&](const std::vector<int>& sizes) {
      BigInt roots = 1;
      for (int sz : sizes) roots *= sz;
      t[sizes.size()] += roots;
    });
    auto table = f::rooted_forest_counts(n);
    for (int k = 1; k <= n; ++k) expect(table.at(k) == t[k], "t_{n,k} at n=" + std::to_string(n));
  }
  for (int n = 3; n <= 10; ++n) {
    Rational lhs = 0;
    BigInt alt = 0;
    for (int N = 1; N <= n; ++N) {
      lhs += Rational(binomial(n, N) * ipow(N, N - 1)) * f::abel_eval(n - N, -1, -n);
      BigInt term = binomial(n, N) * ipow(N, n - 2);
      alt += N % 2 ? BigInt(-term) : term;
    }
    BigInt rhs = (n % 2 ? -n : n) * alt;
    expect(lhs == Rational(rhs), "grouped sum at n=" + std::to_string(n));
    // p(-1) with 0^(n-2) = 0: the N = 0 term drops out, leaving alt.
    expect(alt == 0, "p(-1) = " + alt.get_str() + " at n=" + std::to_string(n));
    expect(z::volume_closed_form(n).coeff == lhs, "closed-form volume vs grouped sum at n=" + std::to_string(n));
  }
  return "Abel identity n<=8 at 5 points; t_{n,k} vs scan n<=6; grouped sum and p(-1)=0 for 3<=n<=10";
}

std::string criterion7() {
  struct Named {
    const char* csv;
    int value;
  };
  for (auto [csv, value] : {Named{"6/5,1,1,4/5,11/5", 14}, Named{"1,1,1,1,1", -40}, Named{"1,1,1,1,39/10", 32}}) {
    auto L = linkage_of(csv);
    auto th = lk::moduli_volume_theorem(L), fo = lk::moduli_volume_forests(L);
    expect(th == fo, std::string(csv) + ": theorem " + s(th.coeff) + " vs forests " + s(fo.coeff));
    // radicand 4 means value = coeff / 2
    expect(th.radicand == 4 && th.coeff == 2 * value, std::string(csv) + ": got " + th.approx());
    expect(lk::a_profile(L).a == a_profile_scan(L), std::string(csv) + ": a-profile");
  }
  auto pi4 = z::permutohedron_volume(4);
  expect(pi4 == lk::moduli_volume_theorem(linkage_of("1,1,1,1,39/10")), "32 != Vol(Pi_4)");

  int random_checked = 0;
  for (int bars : {5, 6})
    for (int i = 0; i < 20; ++i) {
      auto L = verify::random_linkage(bars, 424242u * bars + i);
      auto th = lk::moduli_volume_theorem(L), fo = lk::moduli_volume_forests(L);
      expect(th == fo, "random linkage " + std::to_string(bars) + "/" + std::to_string(i));
      expect(lk::a_profile(L).a == a_profile_scan(L), "random a-profile");
      ++random_checked;
    }

  auto eq = lk::equilateral_volume(2);
  expect(eq.corollary.coeff == 16 && eq.corollary.radicand == 4, "corollary display value is not 8");
  expect(eq.theorem.coeff == -80 && eq.forests && *eq.forests == eq.theorem, "consistent routes do not give -40");
  expect(eq.disagreement && !(eq.corollary == eq.theorem), "corollary agrees with the theorem route");
  return "14, -40, 32 by both routes; " + std::to_string(random_checked) +
         " random linkages agree; equilateral display 8 disagrees with -40";
}

std::string criterion8() {
  struct Named {
    const char* csv;
    std::vector<BigInt> fv;
    long chi;
  };
  const std::vector<Named> named{{"1,1,1,1,39/10", {24, 36, 14}, 2},
                                 {"1,1,1,1,1", {24, 60, 30}, -6},
                                 {"6/5,1,1,4/5,11/5", {}, 0}};
  std::vector<lk::LinkageSpec> specs;
  for (const auto& nm : named) {
    auto L = linkage_of(nm.csv);
    auto fv = lk::f_vector(L);
    expect(fv == f_vector_scan(L), std::string(nm.csv) + ": f-vector vs partition scan");
    if (!nm.fv.empty()) expect(fv == nm.fv, std::string(nm.csv) + ": f-vector");
    expect(lk::euler_characteristic(L) == nm.chi, std::string(nm.csv) + ": chi");
    specs.push_back(L);
  }
  expect(lk::betti_numbers(linkage_of("1,1,1,1,1")) == std::vector<BigInt>{1, 8, 1}, "equilateral pentagon Betti");
  for (int bars : {5, 6})
    for (int i = 0; i < 10; ++i) specs.push_back(verify::random_linkage(bars, 9191u * bars + i));
  for (const auto& L : specs) {
    auto beta = lk::betti_numbers(L);
    auto fv = lk::f_vector(L);
    BigInt chi_b = 0, chi_f = 0;
    for (std::size_t k = 0; k < beta.size(); ++k) chi_b += k % 2 ? BigInt(-beta[k]) : beta[k];
    for (std::size_t k = 0; k < fv.size(); ++k) chi_f += k % 2 ? BigInt(-fv[k]) : fv[k];
    expect(chi_b == chi_f, "sum (-1)^k beta_k != chi from cells");
    const int top = L.n() - 2;
    expect(static_cast<int>(beta.size()) == top + 1, "Betti vector length");
    for (int k = 0; k <= top; ++k) expect(beta[k] == beta[top - k], "beta_k != beta_{n-2-k}");
  }
  return "f-vectors (24,36,14), (24,60,30); chi 2, -6, 0; duality and chi on " + std::to_string(specs.size()) +
         " linkages; pentagon beta (1,8,1)";
}

std::string criterion9() {
  long seen = 0, zeros = 0;
  for (int n = 2; n <= 5; ++n) {
    std::set<std::pair<std::vector<f::Edge>, std::vector<int>>> decorated;
    f::for_each_decorated_forest(n, [&](const f::DecoratedForest& F) {
      decorated.insert({F.forest().edges(), F.marked()});
      const int N = free_tree_size_scan(F);
      auto cols = z::forest_columns(F);
      cols.emplace_back(n, 1);
      const BigInt raw = abs(intlin::determinant(IntMatrix::from_columns(cols)));
      // Radial e - n e_i reduces to e_i modulo the column e, scaling by -n.
      const std::size_t edges = F.forest().edges().size();
      for (std::size_t i = 0; i < F.marked().size(); ++i) {
        std::vector<std::int64_t> unit(n, 0);
        unit[F.marked()[i] - 1] = 1;
        cols[edges + i] = unit;
      }
      const BigInt reduced = abs(intlin::determinant(IntMatrix::from_columns(cols)));
      expect(reduced == N, "|Det(F)| != N(F) at n=" + std::to_string(n));
      expect(raw == ipow(n, F.marked().size()) * N, "raw determinant != n^|M| N(F)");
      expect(z::det_of_decorated_forest(F) == N, "det_of_decorated_forest");
      ++seen;
    });
    auto gens = z::cyclopermutohedron_generators(n).generators;
    gens.pop_back();
    for_each_combination(static_cast<int>(gens.size()), n - 1, [&](std::span<const int> pick) {
      std::vector<f::Edge> edges;
      std::vector<int> marked;
      std::vector<std::vector<std::int64_t>> cols;
      for (int p : pick) {
        if (gens[p].kind == z::GeneratorKind::edge) edges.push_back({gens[p].i, gens[p].j});
        else marked.push_back(gens[p].i);
        cols.push_back(gens[p].vector);
      }
      if (decorated.count({edges, marked})) return;
      cols.emplace_back(n, 1);
      expect(intlin::determinant(IntMatrix::from_columns(cols)) == 0, "non-forest subset with nonzero det");
      ++zeros;
    });
  }
  return std::to_string(seen) + " decorated forests with |Det| = N(F); " + std::to_string(zeros) +
         " other subsets with det 0";
}

std::string criterion10() {
  struct Golden {
    const char* args;
    const char* file;
  };
  const Golden goldens[] = {
      {"cyclo points --n 4 --method closed", "cyclo_points_n4_closed.json"},
      {"cyclo volume --n 5 --method forests", "cyclo_volume_n5_forests.json"},
      {"linkage volume --lengths 1.2,1,1,0.8,2.2", "linkage_volume_example.json"},
  };
  for (const auto& g : goldens) {
    const std::string want = slurp(std::string(GOLDEN_DIR) + "/" + g.file);
    for (int rep = 0; rep < 2; ++rep) {
      auto o = run_cli(g.args);
      expect(o.exit_code == 0, std::string(g.args) + ": exit " + std::to_string(o.exit_code));
      expect(o.out == want, std::string(g.args) + ": output differs from " + g.file);
    }
  }
  const auto t0 = Clock::now();
  auto v = run_cli("verify --n-max 5");
  const double secs = seconds_since(t0);
  expect(v.exit_code == 0, "verify exit " + std::to_string(v.exit_code));
  expect(secs < 600, "verify took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << "3 goldens byte-stable; verify --n-max 5 exit 0 in " << secs << " s";
  return d.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria{
      {"volume vanishes for n>=3", criterion1},
      {"n=2 exception", criterion2},
      {"lattice counts", criterion3},
      {"worked brick examples", criterion4},
      {"permutohedron", criterion5},
      {"Abel identities", criterion6},
      {"linkage volumes", criterion7},
      {"topology cross-checks", criterion8},
      {"determinant lemma", criterion9},
      {"CLI goldens", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = true;
    try {
      detail = criteria[i].second();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
