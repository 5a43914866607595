// zonolink command-line front end.
//
//   zonolink [--format json|text] [--jobs N] <command> ...
//
//   cyclo volume --n N [--method brute|forests|closed]
//   cyclo points --n N [--method brute|closed]
//   perm volume|points --n N
//   linkage volume|betti|cells|aprofile --lengths L1,L2,...
//   forests phi|Phi|rooted --n N
//   forests abel --n N --a A --x X
//   verify --n-max K
//
// JSON records carry the fields quantity, coeff, radicand, approx, method, n
// in that order. Exit codes: 0 success, 2 validation error, 3 verification
// failure.
#pragma once

#include "cyclo/exact.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclo::cli {

struct ResultRecord {
  std::string quantity;
  Rational coeff;
  unsigned long radicand = 1;
  std::string method;
  long n = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitVerification = 3;

std::string render_json(const std::vector<ResultRecord>& records);
std::string render_text(const std::vector<ResultRecord>& records);

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
