#include "bkn/rational.hpp"

#include <cctype>

namespace bkn {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Int n(num), d(den);
  if (d == 0) return std::nullopt;
  Rat q(n, d);
  q.canonicalize();
  return negative ? Rat(-q) : q;
}

std::string format_rational(const Rat& q) { return q.get_str(); }

void normalize_primitive(std::vector<Rat>& v) {
  Int den_lcm = 1;
  bool nonzero = false;
  for (const Rat& x : v) {
    if (x != 0) nonzero = true;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  if (!nonzero) return;
  Int content = 0;
  for (Rat& x : v) {
    x *= den_lcm;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num_mpz_t());
  }
  int lead = 0;
  for (Rat& x : v) {
    x /= content;
    if (lead == 0) lead = sign_of(x);
  }
  if (lead < 0)
    for (Rat& x : v) x = -x;
}

}  // namespace bkn
