#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "zvertex/polynomial.hpp"

namespace zv {

// Rational function of the framing parameter with denominator restricted to
// a^da * (a+1)^db. Every quantity in the pipeline stays in this subring; the
// restriction is asserted, not assumed, so a violation surfaces as an error
// rather than a wrong value. Invariant: gcd(num, a) and gcd(num, a+1) are
// trivial whenever the matching denominator exponent is positive.
class RatFn {
 public:
  RatFn() = default;
  explicit RatFn(Rational c) : num_(std::move(c)) {}
  explicit RatFn(Poly p) : num_(std::move(p)) {}
  RatFn(Poly num, int da, int db) : num_(std::move(num)), da_(da), db_(db) {
    if (da < 0 || db < 0) throw std::invalid_argument("negative denominator exponent");
    normalize();
  }

  static RatFn var() { return RatFn(Poly::var()); }
  static RatFn from_long(long n) { return RatFn(Rational(n)); }

  bool is_zero() const { return num_.is_zero(); }
  const Poly& num() const { return num_; }
  int den_pow_a() const { return da_; }
  int den_pow_a1() const { return db_; }

  bool operator==(const RatFn& o) const {
    return da_ == o.da_ && db_ == o.db_ && num_ == o.num_;
  }
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  RatFn operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFn operator+(const RatFn& x, const RatFn& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const int da = std::max(x.da_, y.da_), db = std::max(x.db_, y.db_);
    Poly xn = scale_up(x.num_, da - x.da_, db - x.db_);
    Poly yn = scale_up(y.num_, da - y.da_, db - y.db_);
    return RatFn(xn + yn, da, db);
  }
  friend RatFn operator-(const RatFn& x, const RatFn& y) { return x + (-y); }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }

  friend RatFn operator*(const RatFn& x, const RatFn& y) {
    if (x.is_zero() || y.is_zero()) return RatFn();
    return RatFn(x.num_ * y.num_, x.da_ + y.da_, x.db_ + y.db_);
  }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  friend RatFn operator*(const RatFn& x, const Rational& s) {
    RatFn r = x;
    r.num_.scale(s);
    return r;
  }

  // Division is defined only when the divisor is a unit of the subring,
  // i.e. a nonzero rational multiple of a power of a and of a+1.
  friend RatFn operator/(const RatFn& x, const RatFn& y) {
    int ya = 0, yb = 0;
    Rational s;
    if (!y.unit_parts(&s, &ya, &yb)) throw std::domain_error("division by non-unit rational function");
    if (x.is_zero()) return RatFn();
    Poly n = x.num_;
    n.scale(1 / s);
    // x / (s a^ya (a+1)^yb / a^da (a+1)^db)
    int na = x.da_ + ya - y.da_;
    int nb = x.db_ + yb - y.db_;
    if (na < 0) n = n * Poly::var().pow(-na), na = 0;
    if (nb < 0) n = n * poly_a_plus_1().pow(-nb), nb = 0;
    return RatFn(std::move(n), na, nb);
  }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  RatFn inv() const { return RatFn(Rational(1)) / *this; }

  // True when the value is s * a^pa * (a+1)^pb with s a nonzero rational;
  // pa/pb may be negative.
  bool unit_parts(Rational* s, int* pa, int* pb) const {
    if (is_zero()) return false;
    Poly n = num_;
    int va = n.valuation_at(0);
    for (int i = 0; i < va; ++i) n = n.divexact_linear(0);
    int vb = n.valuation_at(1);
    for (int i = 0; i < vb; ++i) n = n.divexact_linear(1);
    if (n.deg() != 0) return false;
    if (s) *s = n[0];
    if (pa) *pa = va - da_;
    if (pb) *pb = vb - db_;
    return true;
  }

  // Exact division of the numerator by a plain polynomial (used where a known
  // polynomial factor is stripped before an integer linear solve).
  RatFn divexact_poly(const Poly& d) const {
    if (is_zero()) return RatFn();
    return RatFn(num_.divexact(d), da_, db_);
  }

  const Poly& as_poly() const {
    if (da_ != 0 || db_ != 0) throw std::domain_error("value is not polynomial: denominator " + den_str());
    return num_;
  }

  Rational eval(const Rational& a0) const {
    Rational d = pow_int(a0, da_) * pow_int(a0 + 1, db_);
    if (zv::is_zero(d)) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.eval(a0) / d;
  }

  std::string den_str() const {
    std::string s;
    auto app = [&s](const std::string& base, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += base;
      if (e > 1) s += "^" + std::to_string(e);
    };
    app("a", da_);
    app("(a+1)", db_);
    return s.empty() ? "1" : s;
  }
  std::string str() const {
    if (da_ == 0 && db_ == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_str() + ")";
  }

 private:
  static Poly scale_up(const Poly& p, int ea, int eb) {
    Poly r = p;
    if (ea > 0) r = r * Poly::var().pow(ea);
    if (eb > 0) r = r * poly_a_plus_1().pow(eb);
    return r;
  }

  void normalize() {
    if (num_.is_zero()) {
      da_ = db_ = 0;
      return;
    }
    while (da_ > 0 && zv::is_zero(num_[0])) {
      num_ = num_.divexact_linear(0);
      --da_;
    }
    if (db_ > 0) {
      int vb = num_.valuation_at(1);
      int cancel = std::min(vb, db_);
      for (int i = 0; i < cancel; ++i) num_ = num_.divexact_linear(1);
      db_ -= cancel;
    }
  }

  Poly num_;
  int da_ = 0;  // exponent of a in the denominator
  int db_ = 0;  // exponent of (a+1) in the denominator
};

}  // namespace zv
