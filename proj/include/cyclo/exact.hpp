// Exact integer / rational helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised for malformed user input (bad rational literal, out-of-range argument).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// base^exp with exp >= 0; 0^0 = 1 as usual for the power function itself.
/// Call sites that need a different convention handle it explicitly.
BigInt ipow(const BigInt& base, unsigned long exp);
Rational rpow(const Rational& base, unsigned long exp);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Number of labeled trees on s vertices (s^{s-2}, and 1 for s = 1).
BigInt cayley(unsigned long s);

/// Number of rooted labeled trees on s vertices (s^{s-1}).
BigInt rooted_cayley(unsigned long s);

BigInt gcd(const BigInt& a, const BigInt& b);

/// Parses an integer ("-3"), a fraction ("p/q") or a finite decimal ("1.25",
/// "-.5") into an exact rational. No binary floating point is involved.
Rational parse_rational(std::string_view text);

/// Canonical text of a rational: "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Decimal approximation of coeff / sqrt(radicand) with up to `digits`
/// significant digits and trailing zeros trimmed ("14", "-1.4142135623731").
std::string approx_string(const Rational& coeff, unsigned long radicand, int digits = 15);

}  // namespace cyclo
