#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace bkn {

/// Exact rational number. GMP keeps the canonical form (reduced,
/// positive denominator) through all arithmetic; nothing here ever rounds.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign_of(const Rat& q) { return sgn(q); }
inline Rat abs_of(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// gmpxx has no long long constructors; this platform is LP64
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_frac(long long num, long long den) {
  Rat q(int_of(num), int_of(den));
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (q a positive integer literal).
/// Returns nothing for anything else, including "1/0" and floats.
std::optional<Rat> parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rat& q);

/// Scales a rational vector to coprime integer coordinates with the first
/// nonzero coordinate positive. Zero vectors are left untouched.
void normalize_primitive(std::vector<Rat>& v);

}  // namespace bkn
