#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "zvertex/rational.hpp"

namespace zv {

// Dense univariate polynomial in the framing parameter a, rational
// coefficients, ascending exponents. Invariant: no trailing zero coefficient
// (the zero polynomial has an empty coefficient vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c0) {
    if (!zv::is_zero(c0)) c_.push_back(std::move(c0));
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly var() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
  static Poly constant(long n, long d = 1) { return Poly(rat(n, d)); }

  bool is_zero() const { return c_.empty(); }
  // deg(0) = -1 by convention.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const {
    static const Rational kZero(0);
    return k < c_.size() ? c_[k] : kZero;
  }
  const Rational& lead() const {
    if (c_.empty()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }

  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly();
    std::vector<Rational> r(x.c_.size() + y.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (zv::is_zero(x.c_[i])) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& scale(const Rational& s) {
    if (zv::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Poly operator*(Poly x, const Rational& s) { return x.scale(s); }
  friend Poly operator*(const Rational& s, Poly x) { return x.scale(s); }

  Rational eval(const Rational& v) const {
    Rational r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
  }

  // Substitution a -> -1-a, an involution on polynomials.
  Poly subst_mirror() const {
    Poly acc, p(Rational(1));
    Poly m = Poly(std::vector<Rational>{Rational(-1), Rational(-1)});
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!zv::is_zero(c_[i])) acc += p * c_[i];
      if (i + 1 < c_.size()) p *= m;
    }
    return acc;
  }

  // Number of factors a (k=0) or a+1 (k=1) dividing this polynomial.
  int valuation_at(int root_kind) const {
    if (is_zero()) return 0;
    Poly p = *this;
    int v = 0;
    while (true) {
      const Rational at = (root_kind == 0) ? p[0] : p.eval(Rational(-1));
      if (!zv::is_zero(at)) break;
      p = p.divexact_linear(root_kind);
      ++v;
    }
    return v;
  }

  // Exact division by a (kind 0) or a+1 (kind 1); throws if not divisible.
  Poly divexact_linear(int root_kind) const {
    if (is_zero()) return Poly();
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    if (root_kind == 0) {
      if (!zv::is_zero(c_[0])) throw std::domain_error("not divisible by a");
      for (std::size_t i = 1; i < c_.size(); ++i) q[i - 1] = c_[i];
    } else {
      // Synthetic division by (a+1).
      Rational carry(0);
      for (std::size_t i = c_.size(); i-- > 1;) {
        q[i - 1] = c_[i] - carry;
        carry = q[i - 1];
      }
      if (c_[0] != carry) throw std::domain_error("not divisible by a+1");
    }
    return Poly(std::move(q));
  }

  // Exact division; throws if the remainder is nonzero.
  Poly divexact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return Poly();
    if (deg() < d.deg()) throw std::domain_error("inexact polynomial division");
    std::vector<Rational> rem = c_;
    std::vector<Rational> q(c_.size() - d.c_.size() + 1, Rational(0));
    for (std::size_t i = q.size(); i-- > 0;) {
      Rational f = rem[i + d.c_.size() - 1] / d.lead();
      q[i] = f;
      if (!zv::is_zero(f)) {
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= f * d.c_[j];
      }
    }
    for (const auto& r : rem) {
      if (!zv::is_zero(r)) throw std::domain_error("inexact polynomial division");
    }
    return Poly(std::move(q));
  }

  // Pseudo-remainder based gcd (primitive PRS over the integer content),
  // returned primitive with positive leading integer part.
  static Poly gcd(Poly x, Poly y) {
    if (x.is_zero()) return y.primitive_part();
    if (y.is_zero()) return x.primitive_part();
    x = x.primitive_part();
    y = y.primitive_part();
    if (x.deg() < y.deg()) std::swap(x, y);
    while (!y.is_zero()) {
      Poly r = pseudo_rem(x, y);
      x = std::move(y);
      y = r.primitive_part();
    }
    return x;
  }

  // Divides out the rational content; result has coprime integer coefficients
  // and positive leading coefficient. Zero stays zero.
  Poly primitive_part() const {
    if (is_zero()) return Poly();
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& q : c_) {
      if (zv::is_zero(q)) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(lead()) < 0) content = -content;
    Poly r = *this;
    for (auto& q : r.c_) q /= content;
    return r;
  }

  Poly pow(int e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    Poly acc(Rational(1)), b = *this;
    while (e > 0) {
      if (e & 1) acc *= b;
      b *= b;
      e >>= 1;
    }
    return acc;
  }

  // Canonical text form, descending exponents, e.g. "2*a^3 - 1/2*a + 7".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (zv::is_zero(c_[i])) continue;
      Rational cc = c_[i];
      if (out.empty()) {
        if (sgn(cc) < 0) {
          out += "-";
          cc = -cc;
        }
      } else {
        out += sgn(cc) < 0 ? " - " : " + ";
        if (sgn(cc) < 0) cc = -cc;
      }
      const bool unit = (cc == 1);
      if (i == 0) {
        out += zv::to_string(cc);
      } else {
        if (!unit) out += zv::to_string(cc) + "*";
        out += (i == 1) ? "a" : ("a^" + std::to_string(i));
      }
    }
    return out;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& q : c_) {
      h = hash_mix(h, mpz_get_ui(q.get_num().get_mpz_t()));
      h = hash_mix(h, mpz_get_ui(q.get_den().get_mpz_t()));
    }
    return h;
  }

 private:
  static Poly pseudo_rem(const Poly& x, const Poly& y) {
    Poly r = x;
    const int dy = y.deg();
    while (!r.is_zero() && r.deg() >= dy) {
      const int k = r.deg() - dy;
      Rational f = r.lead() / y.lead();
      std::vector<Rational> sub(static_cast<std::size_t>(k), Rational(0));
      sub.push_back(std::move(f));
      r -= Poly(std::move(sub)) * y;
    }
    return r;
  }

  void trim() {
    while (!c_.empty() && zv::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline Poly poly_a() { return Poly::var(); }
inline Poly poly_a_plus_1() { return Poly(std::vector<Rational>{Rational(1), Rational(1)}); }

}  // namespace zv
