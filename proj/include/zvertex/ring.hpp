#pragma once

#include <string>

#include "zvertex/ratfn.hpp"

namespace zv {

// Coefficient-field glue for code templated over the working ring: symbolic
// rational functions of the framing, or plain rationals at a fixed framing.
template <class K>
struct RingOps;

template <>
struct RingOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_long(long n) { return Rational(n); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string str(const Rational& x) { return zv::to_string(x); }
};

template <>
struct RingOps<RatFn> {
  static RatFn zero() { return RatFn(); }
  static RatFn one() { return RatFn(Rational(1)); }
  static RatFn from_long(long n) { return RatFn(Rational(n)); }
  static RatFn from_rational(const Rational& r) { return RatFn(r); }
  static bool is_zero(const RatFn& x) { return x.is_zero(); }
  static std::string str(const RatFn& x) { return x.str(); }
};

// Runtime framing context: the framing value a as an element of K, with the
// combinations every formula reuses. Framing 0 and -1 are outside the curve
// family and rejected at construction.
template <class K>
struct Framing;

template <>
struct Framing<Rational> {
  explicit Framing(const Rational& a0) : a(a0), a1(a0 + 1), aa1(a0 * (a0 + 1)) {
    if (sgn(a) == 0 || sgn(a1) == 0) throw std::domain_error("framing must avoid 0 and -1");
  }
  Rational a, a1, aa1;
};

template <>
struct Framing<RatFn> {
  Framing() : a(RatFn::var()), a1(RatFn(poly_a_plus_1())), aa1(a * a1) {}
  RatFn a, a1, aa1;
};

}  // namespace zv
