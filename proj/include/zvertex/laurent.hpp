#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "zvertex/ring.hpp"

namespace zv {

// Exponent bound marking an exact series: every coefficient is authoritative.
inline constexpr int kExactOrder = 1 << 28;

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense Laurent series in one variable over K with an explicit validity
// window: coefficients for exponents in [min_exp, trunc) are authoritative,
// everything at or above trunc is unknown. Window propagation follows the
// valuation rule: trunc(f*g) = min(trunc_f + val_g, trunc_g + val_f).
template <class K>
class Laurent {
  using R = RingOps<K>;

 public:
  Laurent() : lo_(0), trunc_(kExactOrder) {}  // exact zero

  static Laurent zero_window(long trunc) {
    Laurent s;
    s.trunc_ = clamp(trunc);
    s.lo_ = s.trunc_ == kExactOrder ? 0 : s.trunc_;
    return s;
  }
  static Laurent constant(K v) { return monomial(std::move(v), 0); }
  static Laurent monomial(K v, int e) {
    Laurent s;
    if (!R::is_zero(v)) {
      s.lo_ = e;
      s.c_.push_back(std::move(v));
    }
    return s;
  }
  static Laurent var() { return monomial(R::one(), 1); }
  static Laurent from_coeffs(int lo, std::vector<K> coeffs, long trunc = kExactOrder) {
    Laurent s;
    s.lo_ = lo;
    s.c_ = std::move(coeffs);
    s.trunc_ = clamp(trunc);
    if (s.lo_ + static_cast<long>(s.c_.size()) > s.trunc_)
      throw std::invalid_argument("coefficients extend past the validity bound");
    s.squeeze();
    return s;
  }

  int min_exp() const { return lo_; }
  int trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExactOrder; }
  bool known_zero() const { return c_.empty(); }

  // First exponent with a nonzero coefficient; trunc for a (window) zero.
  int val() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!R::is_zero(c_[i])) return lo_ + static_cast<int>(i);
    return trunc_;
  }

  // Coefficient read; exponents at or above trunc are not authoritative.
  const K& at(int e) const {
    if (e >= trunc_)
      throw TruncationError("coefficient read past validity bound (exponent " + std::to_string(e) +
                            ", bound " + std::to_string(trunc_) + ")");
    static const K kZero = R::zero();
    if (e < lo_ || e >= lo_ + static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(e - lo_)];
  }

  void require_window(int needed_trunc) const {
    if (trunc_ < needed_trunc)
      throw TruncationError("insufficient truncation: coefficients known below " + std::to_string(trunc_) +
                            ", needed below " + std::to_string(needed_trunc));
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Laurent operator+(const Laurent& x, const Laurent& y) {
    Laurent r;
    r.trunc_ = std::min(x.trunc_, y.trunc_);
    if (x.c_.empty() && y.c_.empty()) {
      r.lo_ = r.trunc_ == kExactOrder ? 0 : r.trunc_;
      return r;
    }
    const int lo = x.c_.empty() ? y.lo_ : (y.c_.empty() ? x.lo_ : std::min(x.lo_, y.lo_));
    const long hi =
        std::min<long>(r.trunc_, std::max(x.lo_ + static_cast<long>(x.c_.size()), y.lo_ + static_cast<long>(y.c_.size())));
    r.lo_ = lo;
    if (hi > lo) {
      r.c_.assign(static_cast<std::size_t>(hi - lo), R::zero());
      for (std::size_t i = 0; i < x.c_.size(); ++i) {
        const long e = x.lo_ + static_cast<long>(i);
        if (e < r.trunc_) r.c_[static_cast<std::size_t>(e - lo)] += x.c_[i];
      }
      for (std::size_t i = 0; i < y.c_.size(); ++i) {
        const long e = y.lo_ + static_cast<long>(i);
        if (e < r.trunc_) r.c_[static_cast<std::size_t>(e - lo)] += y.c_[i];
      }
    }
    r.squeeze();
    return r;
  }
  friend Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }

  friend Laurent operator*(const Laurent& x, const Laurent& y) {
    Laurent r;
    const long vx = x.val(), vy = y.val();
    r.trunc_ = clamp(std::min(static_cast<long>(x.trunc_) + vy, static_cast<long>(y.trunc_) + vx));
    const long lo = vx + vy;
    if (x.c_.empty() || y.c_.empty() || lo >= r.trunc_) {
      r.lo_ = r.trunc_ == kExactOrder ? 0 : r.trunc_;
      return r;
    }
    const long top = x.lo_ + static_cast<long>(x.c_.size()) + y.lo_ + static_cast<long>(y.c_.size()) - 1;
    const long hi = std::min(static_cast<long>(r.trunc_), top);
    r.lo_ = static_cast<int>(lo);
    r.c_.assign(static_cast<std::size_t>(hi - lo), R::zero());
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (R::is_zero(x.c_[i])) continue;
      const long ex = x.lo_ + static_cast<long>(i);
      for (std::size_t j = 0; j < y.c_.size(); ++j) {
        if (R::is_zero(y.c_[j])) continue;
        const long e = ex + y.lo_ + static_cast<long>(j);
        if (e >= lo && e < r.trunc_) r.c_[static_cast<std::size_t>(e - lo)] += x.c_[i] * y.c_[j];
      }
    }
    r.squeeze();
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator*(const Laurent& x, const K& s) {
    Laurent r = x;
    if (R::is_zero(s)) {
      r.c_.clear();
      r.lo_ = r.trunc_ == kExactOrder ? 0 : r.trunc_;
      return r;
    }
    for (auto& v : r.c_) v = v * s;
    r.squeeze();
    return r;
  }

  Laurent shifted(int k) const {
    Laurent r = *this;
    r.lo_ += k;
    r.trunc_ = clamp(static_cast<long>(r.trunc_) + k);
    return r;
  }

  Laurent truncated(long new_trunc) const {
    Laurent r = *this;
    r.trunc_ = clamp(std::min<long>(r.trunc_, new_trunc));
    if (!r.c_.empty()) {
      const long keep = static_cast<long>(r.trunc_) - r.lo_;
      if (keep <= 0)
        r.c_.clear();
      else if (keep < static_cast<long>(r.c_.size()))
        r.c_.resize(static_cast<std::size_t>(keep));
    }
    if (r.c_.empty()) r.lo_ = r.trunc_ == kExactOrder ? 0 : r.trunc_;
    r.squeeze();
    return r;
  }

  // d/dvar.
  Laurent derivative() const {
    Laurent r;
    r.trunc_ = clamp(static_cast<long>(trunc_) - 1);
    std::vector<K> c;
    c.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c.push_back(c_[i] * R::from_long(lo_ + static_cast<long>(i)));
    r.lo_ = lo_ - 1;
    r.c_ = std::move(c);
    if (r.c_.empty()) r.lo_ = r.trunc_ == kExactOrder ? 0 : r.trunc_;
    r.squeeze();
    return r;
  }

  // Termwise antiderivative; rejects an exponent -1 term.
  Laurent integral() const {
    Laurent r;
    r.trunc_ = clamp(static_cast<long>(trunc_) + 1);
    std::vector<K> c;
    c.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const long e = lo_ + static_cast<long>(i);
      if (e == -1) {
        if (!R::is_zero(c_[i])) throw std::domain_error("residue term obstructs integration");
        c.push_back(R::zero());
        continue;
      }
      c.push_back(c_[i] / R::from_long(e + 1));
    }
    r.lo_ = lo_ + 1;
    r.c_ = std::move(c);
    if (r.c_.empty()) r.lo_ = r.trunc_ == kExactOrder ? 0 : r.trunc_;
    r.squeeze();
    return r;
  }

  // Multiplicative inverse; divides only by the leading coefficient.
  Laurent inverse() const {
    const int v = val();
    if (c_.empty() || v == trunc_) throw std::domain_error("inverse of (window-)zero series");
    const K lead = at(v);
    if (is_exact() && lo_ + static_cast<long>(c_.size()) == static_cast<long>(v) + 1)
      return monomial(R::one() / lead, -v);  // exact monomial
    if (is_exact()) throw std::domain_error("inverse of exact non-monomial series requires explicit truncation");
    // u = f shifted to a unit power series; 1/f known below trunc - 2v.
    Laurent u = shifted(-v);
    const long m = u.trunc_;  // u known on [0, m)
    if (m <= 0) throw TruncationError("inverse needs a nonempty unit window");
    std::vector<K> inv(static_cast<std::size_t>(m), R::zero());
    inv[0] = R::one() / lead;
    for (long e = 1; e < m; ++e) {
      K acc = R::zero();
      for (long k = 1; k <= e; ++k) {
        const K& uk = u.at(static_cast<int>(k));
        if (!R::is_zero(uk) && !R::is_zero(inv[static_cast<std::size_t>(e - k)]))
          acc += uk * inv[static_cast<std::size_t>(e - k)];
      }
      inv[static_cast<std::size_t>(e)] = -(acc / lead);
    }
    return from_coeffs(-v, std::move(inv), m - v);
  }

  friend Laurent operator/(const Laurent& x, const Laurent& y) { return x * y.inverse(); }

  // log f for f = 1 + (positive-order terms).
  Laurent log() const {
    if (val() != 0 || !(at(0) == R::one())) throw std::domain_error("log requires constant term 1");
    return (derivative() * inverse()).integral();
  }

  // exp f for f with val >= 1, via the recurrence E' = f'E.
  Laurent exp() const {
    if (c_.empty() && is_exact()) return constant(R::one());
    if (!c_.empty() && val() < 1) throw std::domain_error("exp requires positive valuation");
    if (is_exact()) throw std::domain_error("exp of exact series requires explicit truncation");
    const long n = trunc_;
    if (n <= 0) return zero_window(n);
    std::vector<K> E(static_cast<std::size_t>(n), R::zero());
    E[0] = R::one();
    for (long e = 1; e < n; ++e) {
      K acc = R::zero();
      for (long k = 1; k <= e; ++k) {
        const K& fk = at(static_cast<int>(k));
        if (!R::is_zero(fk) && !R::is_zero(E[static_cast<std::size_t>(e - k)]))
          acc += fk * R::from_long(k) * E[static_cast<std::size_t>(e - k)];
      }
      E[static_cast<std::size_t>(e)] = acc / R::from_long(e);
    }
    return from_coeffs(0, std::move(E), n);
  }

  // sqrt of a unit series with constant term 1.
  Laurent sqrt_unit() const {
    if (val() != 0 || !(at(0) == R::one())) throw std::domain_error("sqrt requires constant term 1");
    Laurent l = log();
    Laurent h = l * (R::one() / R::from_long(2));
    return h.exp();
  }

  // f(g) for inner g with val >= 1.
  Laurent compose(const Laurent& g) const {
    if (!g.c_.empty() && g.val() < 1) throw std::domain_error("composition requires inner valuation >= 1");
    if (c_.empty()) return is_exact() ? Laurent() : zero_window(trunc_);
    Laurent acc;  // exact zero
    const int top = lo_ + static_cast<int>(c_.size()) - 1;
    if (top >= 0) {
      Laurent h = constant(at(top));
      for (int e = top - 1; e >= 0; --e) {
        h = h * g;
        const K& ce = at(e);
        if (!R::is_zero(ce)) h += constant(ce);
      }
      acc = h;
    }
    if (lo_ < 0) {
      Laurent ginv = g.inverse();
      Laurent p = ginv;
      for (int e = -1; e >= lo_; --e) {
        const K& ce = at(e);
        if (!R::is_zero(ce)) acc += p * ce;
        if (e > lo_) p = p * ginv;
      }
    }
    // Unknown outer terms at exponents >= trunc contribute at or above trunc.
    if (!is_exact()) acc = acc.truncated(trunc_);
    return acc;
  }

  // Compositional inverse of f with valuation exactly 1 (Lagrange inversion).
  Laurent revert() const {
    if (val() != 1) throw std::domain_error("reversion requires valuation 1");
    if (is_exact()) throw std::domain_error("reversion of exact series requires explicit truncation");
    const long n = trunc_;
    // h = x/f is a unit power series; g_m = [x^{m-1}] h^m / m.
    Laurent h = shifted(-1).inverse();
    std::vector<K> g(static_cast<std::size_t>(std::max<long>(n, 0)), R::zero());
    Laurent hp = h;
    for (long m = 1; m < n; ++m) {
      g[static_cast<std::size_t>(m)] = hp.at(static_cast<int>(m - 1)) / R::from_long(m);
      if (m + 1 < n) hp = (hp * h).truncated(n);
    }
    return from_coeffs(0, std::move(g), n);
  }

  Laurent odd_part() const {
    Laurent r = *this;
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      long e = r.lo_ + static_cast<long>(i);
      if ((e % 2) == 0) r.c_[i] = R::zero();
    }
    r.squeeze();
    return r;
  }
  Laurent even_part() const {
    Laurent r = *this;
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      long e = r.lo_ + static_cast<long>(i);
      if ((e % 2) != 0) r.c_[i] = R::zero();
    }
    r.squeeze();
    return r;
  }

  // Terms with exponent < bound (default: the principal part).
  Laurent below(int bound = 0) const {
    Laurent r = *this;
    if (!r.c_.empty()) {
      const long keep = static_cast<long>(bound) - r.lo_;
      if (keep <= 0)
        r.c_.clear();
      else if (keep < static_cast<long>(r.c_.size()))
        r.c_.resize(static_cast<std::size_t>(keep));
    }
    if (r.c_.empty()) r.lo_ = r.trunc_ == kExactOrder ? 0 : r.trunc_;
    r.squeeze();
    return r;
  }

  bool eq_on_common_window(const Laurent& o) const {
    const long t = std::min(trunc_, o.trunc_);
    long lo = t;
    if (!c_.empty()) lo = std::min(lo, static_cast<long>(lo_));
    if (!o.c_.empty()) lo = std::min(lo, static_cast<long>(o.lo_));
    for (long e = lo; e < t; ++e)
      if (!(at(static_cast<int>(e)) == o.at(static_cast<int>(e)))) return false;
    return true;
  }

  std::string str(const std::string& var) const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (R::is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      const long e = lo_ + static_cast<long>(i);
      out += "(" + R::str(c_[i]) + ")";
      if (e != 0) out += "*" + var + "^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    if (!is_exact()) out += " + O(" + var + "^" + std::to_string(trunc_) + ")";
    return out;
  }

 private:
  static int clamp(long t) { return static_cast<int>(std::min<long>(t, kExactOrder)); }

  void squeeze() {
    std::size_t b = 0, e = c_.size();
    while (b < e && R::is_zero(c_[b])) ++b;
    while (e > b && R::is_zero(c_[e - 1])) --e;
    if (b == e) {
      c_.clear();
      lo_ = trunc_ == kExactOrder ? 0 : trunc_;
      return;
    }
    if (b > 0 || e < c_.size()) {
      std::vector<K> nc(c_.begin() + static_cast<long>(b), c_.begin() + static_cast<long>(e));
      c_ = std::move(nc);
      lo_ += static_cast<int>(b);
    }
  }

  int lo_;
  int trunc_;
  std::vector<K> c_;
};

}  // namespace zv
