#include "cyclo/cli.hpp"

#include "cyclo/forests.hpp"
#include "cyclo/linkage.hpp"
#include "cyclo/verify.hpp"
#include "cyclo/zonotope.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cyclo::cli {

namespace z = zonotope;
namespace lk = linkage;
using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json to_json(const ResultRecord& r) {
  ordered_json j;
  j["quantity"] = r.quantity;
  j["coeff"] = to_string(r.coeff);
  j["radicand"] = r.radicand;
  j["approx"] = approx_string(r.coeff, r.radicand);
  j["method"] = r.method;
  j["n"] = r.n;
  return j;
}

ResultRecord volume_record(std::string quantity, const z::NormalizedVolume& v, std::string method, long n) {
  return {std::move(quantity), v.coeff, v.radicand, std::move(method), n};
}

ResultRecord integer_record(std::string quantity, const BigInt& value, std::string method, long n) {
  return {std::move(quantity), Rational(value), 1, std::move(method), n};
}

std::string indexed(const std::string& name, std::size_t k) { return name + "[" + std::to_string(k) + "]"; }

void emit_checks(const std::vector<verify::CheckResult>& checks, const std::string& format, std::ostream& out) {
  if (format == "text") {
    for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["check"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << "\n";
}

}  // namespace

std::string render_json(const std::vector<ResultRecord>& records) {
  if (records.size() == 1) return to_json(records.front()).dump(2) + "\n";
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string render_text(const std::vector<ResultRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records)
    out << r.quantity << " coeff=" << to_string(r.coeff) << " radicand=" << r.radicand
        << " approx=" << approx_string(r.coeff, r.radicand) << " method=" << r.method << " n=" << r.n << "\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact volumes, lattice counts and linkage invariants of the (cyclo)permutohedron", "zonolink"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  unsigned jobs = 1;
  app.add_option("--format", format, "Output rendering")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", jobs, "Worker threads for brute-force sums")->check(CLI::Range(1u, 256u));

  int n = 0;
  std::string method;
  std::string lengths;
  std::string convention = "shifted";
  long a = -1;
  std::string x;
  int n_max = 5;

  auto* cyclo = app.add_subcommand("cyclo", "Cyclopermutohedron CP_{n+1}");
  cyclo->require_subcommand(1);
  auto* cyclo_volume = cyclo->add_subcommand("volume", "Volume as coeff/sqrt(n)");
  cyclo_volume->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  cyclo_volume->add_option("--method", method)->check(CLI::IsMember({"brute", "forests", "closed"}));
  auto* cyclo_points = cyclo->add_subcommand("points", "Signed lattice-point count");
  cyclo_points->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  cyclo_points->add_option("--method", method)->check(CLI::IsMember({"brute", "closed"}));

  auto* perm = app.add_subcommand("perm", "Standard permutohedron");
  perm->require_subcommand(1);
  auto* perm_volume = perm->add_subcommand("volume", "Volume as coeff/sqrt(n)");
  perm_volume->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  auto* perm_points = perm->add_subcommand("points", "Lattice-point count");
  perm_points->add_option("--n", n)->required()->check(CLI::Range(1, 64));

  auto* link = app.add_subcommand("linkage", "Polygonal linkage invariants");
  link->require_subcommand(1);
  auto add_lengths = [&](CLI::App* sub) {
    sub->add_option("--lengths", lengths, "Comma-separated bar lengths, longest last")->required();
  };
  auto* link_volume = link->add_subcommand("volume", "Volume of the configuration-space complex");
  add_lengths(link_volume);
  link_volume->add_option("--method", method)->check(CLI::IsMember({"theorem", "forests"}));
  auto* link_betti = link->add_subcommand("betti", "Betti numbers");
  add_lengths(link_betti);
  link_betti->add_option("--convention", convention)->check(CLI::IsMember({"shifted", "literal"}));
  auto* link_cells = link->add_subcommand("cells", "f-vector and Euler characteristic");
  add_lengths(link_cells);
  auto* link_aprofile = link->add_subcommand("aprofile", "Short-set profile a_k");
  add_lengths(link_aprofile);

  auto* forest = app.add_subcommand("forests", "Forest counts");
  forest->require_subcommand(1);
  auto* forest_phi = forest->add_subcommand("phi", "Number of labeled forests");
  forest_phi->add_option("--n", n)->required()->check(CLI::Range(0, 512));
  auto* forest_Phi = forest->add_subcommand("Phi", "Sum of component-size gcds over labeled forests");
  forest_Phi->add_option("--n", n)->required()->check(CLI::Range(1, 512));
  auto* forest_rooted = forest->add_subcommand("rooted", "Rooted forest counts t_{n,k}");
  forest_rooted->add_option("--n", n)->required()->check(CLI::Range(0, 512));
  auto* forest_abel = forest->add_subcommand("abel", "Abel polynomial x(x - a n)^{n-1}");
  forest_abel->add_option("--n", n)->required()->check(CLI::Range(0, 512));
  forest_abel->add_option("--a", a, "Abel parameter (default -1)");
  forest_abel->add_option("--x", x, "Evaluation point (exact rational)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-check suite");
  verify_cmd->add_option("--n-max", n_max)->check(CLI::Range(2, 8));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    std::vector<ResultRecord> records;
    auto linkage_spec = [&] { return lk::LinkageSpec::validate(lk::parse_lengths(lengths)); };
    const z::BruteForceOptions opts{0, jobs};

    if (cyclo_volume->parsed()) {
      if (method.empty()) method = "closed";
      z::NormalizedVolume v = method == "brute"     ? z::volume_bruteforce(n, opts)
                              : method == "forests" ? z::volume_by_forests(n)
                                                    : z::volume_closed_form(n);
      records.push_back(volume_record("cyclopermutohedron_volume", v, method, n));
    } else if (cyclo_points->parsed()) {
      if (method.empty()) method = "closed";
      BigInt v = method == "brute" ? z::lattice_count_bruteforce(n, opts) : z::lattice_count_closed_form(n);
      records.push_back(integer_record("cyclopermutohedron_lattice_count", v, method, n));
    } else if (perm_volume->parsed()) {
      records.push_back(volume_record("permutohedron_volume", z::permutohedron_volume(n), "closed", n));
    } else if (perm_points->parsed()) {
      records.push_back(integer_record("permutohedron_lattice_count", z::permutohedron_lattice_count(n), "closed", n));
    } else if (link_volume->parsed()) {
      if (method.empty()) method = "theorem";
      const auto L = linkage_spec();
      auto v = method == "forests" ? lk::moduli_volume_forests(L) : lk::moduli_volume_theorem(L);
      records.push_back(volume_record("moduli_volume", v, method, L.n()));
    } else if (link_betti->parsed()) {
      const auto L = linkage_spec();
      const auto conv = convention == "literal" ? lk::BettiConvention::literal : lk::BettiConvention::shifted;
      const auto beta = lk::betti_numbers(L, conv);
      for (std::size_t k = 0; k < beta.size(); ++k)
        records.push_back(integer_record(indexed("betti", k), beta[k], convention, L.n()));
    } else if (link_cells->parsed()) {
      const auto L = linkage_spec();
      const auto f = lk::f_vector(L);
      for (std::size_t k = 0; k < f.size(); ++k) records.push_back(integer_record(indexed("f", k), f[k], "cells", L.n()));
      records.push_back(integer_record("euler_characteristic", lk::euler_characteristic(L), "cells", L.n()));
    } else if (link_aprofile->parsed()) {
      const auto L = linkage_spec();
      const auto p = lk::a_profile(L);
      for (std::size_t k = 0; k < p.a.size(); ++k)
        records.push_back(integer_record(indexed("a", k), p.a[k], "subset_scan", L.n()));
    } else if (forest_phi->parsed()) {
      records.push_back(integer_record("forest_count", forests::forest_count(n), "recursion", n));
    } else if (forest_Phi->parsed()) {
      records.push_back(integer_record("forest_gcd_sum", forests::forest_gcd_sum(n), "recursion", n));
    } else if (forest_rooted->parsed()) {
      const auto table = forests::rooted_forest_counts(n);
      for (const auto& [k, t] : table.counts)
        records.push_back(integer_record(indexed("rooted_forest_count", k), t, "recursion", n));
    } else if (forest_abel->parsed()) {
      records.push_back({"abel", forests::abel_eval(n, a, parse_rational(x)), 1, "direct", n});
    } else if (verify_cmd->parsed()) {
      const auto checks = verify::run_all(n_max, jobs);
      emit_checks(checks, format, out);
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
      return ok ? kExitOk : kExitVerification;
    }

    out << (format == "text" ? render_text(records) : render_json(records));
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    // InputError, LinkageError, BoundError and ForestError all land here.
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace cyclo::cli
