#include "cyclo/exact.hpp"

#include <cctype>
#include <vector>

namespace cyclo {

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, unsigned long exp) {
  Rational r(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  r.canonicalize();
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt cayley(unsigned long s) {
  if (s <= 2) return 1;
  return ipow(BigInt(s), s - 2);
}

BigInt rooted_cayley(unsigned long s) {
  if (s == 0) return 0;
  return ipow(BigInt(s), s - 1);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw InputError("malformed rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) malformed(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    BigInt d{std::string(den)};
    if (d == 0) throw InputError("malformed rational: zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) malformed(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) malformed(text);
    BigInt num(whole.empty() ? std::string("0") : std::string(whole));
    BigInt scale = ipow(10, frac.size());
    num = num * scale + (frac.empty() ? BigInt(0) : BigInt(std::string(frac)));
    value = Rational(num, scale);
  } else {
    if (!all_digits(s)) malformed(text);
    value = Rational(BigInt(std::string(s)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string approx_string(const Rational& coeff, unsigned long radicand, int digits) {
  if (coeff == 0) return "0";
  mpf_class value(0, 512);
  mpf_class num(coeff, 512);
  mpf_class root(radicand, 512);
  root = sqrt(root);
  value = num / root;
  std::vector<char> buf(64 + digits);
  int len = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, value.get_mpf_t());
  if (len < 0) return "nan";
  if (static_cast<std::size_t>(len) >= buf.size()) {
    buf.resize(len + 1);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, value.get_mpf_t());
  }
  return std::string(buf.data());
}

}  // namespace cyclo
