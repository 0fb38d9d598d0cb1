#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zv {

// Exact rational scalar. mpq_class keeps values canonical (gcd 1, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Serialized as "p" or "p/q", q > 0.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline Rational pow_int(const Rational& base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw std::domain_error("zero to negative power");
    Rational inv = 1 / base;
    return pow_int(inv, -e);
  }
  Rational acc = 1, b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace zv
