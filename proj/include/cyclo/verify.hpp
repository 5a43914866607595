// Cross-check suite behind `zonolink verify`: every closed form is compared
// against an independent route up to the requested size.
#pragma once

#include "cyclo/forests.hpp"
#include "cyclo/intlin.hpp"
#include "cyclo/linkage.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclo::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_all(int n_max, unsigned jobs = 1);

/// Deterministic random generic linkage with `bars` bars (longest last),
/// lengths p/q with q <= 6 and length <= 6.
linkage::LinkageSpec random_linkage(int bars, std::uint64_t seed);

/// The three worked brick examples in dimension 6 (lattice counts 1, 4, 2),
/// as explicit matrices and as the partial decorated forests they come from.
std::vector<intlin::IntMatrix> worked_example_matrices();
std::vector<forests::PartialDecoratedForest> worked_example_forests();

}  // namespace cyclo::verify
