#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zvertex/laurent.hpp"

namespace zv {

// Sparse multivariate Laurent series over K with a per-variable validity
// bound: coefficients are authoritative exactly for exponent tuples e with
// e[i] < hi[i] in every variable. Negative exponents are allowed; they arise
// from geometric expansions in a fixed ordering of the variables, and checks
// assert that they cancel in full sums.
template <class K>
class MSeries {
  using R = RingOps<K>;

 public:
  explicit MSeries(int nvars, std::vector<int> hi) : n_(nvars), hi_(std::move(hi)) {
    if (static_cast<int>(hi_.size()) != n_) throw std::invalid_argument("validity bound arity mismatch");
  }
  static MSeries zero(int nvars, int hi_all) { return MSeries(nvars, std::vector<int>(nvars, hi_all)); }

  int nvars() const { return n_; }
  const std::vector<int>& hi() const { return hi_; }
  const std::map<std::vector<int>, K>& terms() const { return t_; }

  bool in_window(const std::vector<int>& e) const {
    for (int i = 0; i < n_; ++i)
      if (e[i] >= hi_[i]) return false;
    return true;
  }

  const K& coeff(const std::vector<int>& e) const {
    if (!in_window(e)) throw TruncationError("multiseries coefficient read past validity bound");
    static const K kZero = R::zero();
    auto it = t_.find(e);
    return it == t_.end() ? kZero : it->second;
  }

  void add_term(const std::vector<int>& e, const K& v) {
    if (R::is_zero(v)) return;
    if (!in_window(e)) return;  // outside the window: not representable
    auto [it, fresh] = t_.try_emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (R::is_zero(it->second)) t_.erase(it);
    }
  }

  MSeries operator-() const {
    MSeries r = *this;
    for (auto& [e, v] : r.t_) v = -v;
    return r;
  }

  friend MSeries operator+(const MSeries& x, const MSeries& y) {
    check_arity(x, y);
    std::vector<int> hi(x.n_);
    for (int i = 0; i < x.n_; ++i) hi[i] = std::min(x.hi_[i], y.hi_[i]);
    MSeries r(x.n_, hi);
    for (const auto& [e, v] : x.t_) r.add_term(e, v);
    for (const auto& [e, v] : y.t_) r.add_term(e, v);
    return r;
  }
  friend MSeries operator-(const MSeries& x, const MSeries& y) { return x + (-y); }
  MSeries& operator+=(const MSeries& o) { return *this = *this + o; }
  MSeries& operator-=(const MSeries& o) { return *this = *this - o; }

  friend MSeries operator*(const MSeries& x, const MSeries& y) {
    check_arity(x, y);
    std::vector<int> vx = x.min_exps(), vy = y.min_exps();
    std::vector<int> hi(x.n_);
    for (int i = 0; i < x.n_; ++i)
      hi[i] = static_cast<int>(std::min<long>(static_cast<long>(x.hi_[i]) + vy[i], static_cast<long>(y.hi_[i]) + vx[i]));
    MSeries r(x.n_, hi);
    std::vector<int> e(x.n_);
    for (const auto& [ex, cx] : x.t_)
      for (const auto& [ey, cy] : y.t_) {
        for (int i = 0; i < x.n_; ++i) e[i] = ex[i] + ey[i];
        r.add_term(e, cx * cy);
      }
    return r;
  }
  MSeries& operator*=(const MSeries& o) { return *this = *this * o; }

  MSeries scaled(const K& s) const {
    MSeries r(n_, hi_);
    if (R::is_zero(s)) return r;
    for (const auto& [e, v] : t_) r.add_term(e, v * s);
    return r;
  }

  // x_i d/dx_i.
  MSeries euler(int i) const {
    MSeries r(n_, hi_);
    for (const auto& [e, v] : t_) {
      if (e[i] == 0) continue;
      r.add_term(e, v * R::from_long(e[i]));
    }
    return r;
  }

  // Identify variables 0 and 1: the result, in nvars-1 variables, has the
  // exponent sum in slot 0. Valid below min(hi_0, hi_1) when exponents in the
  // identified slots are non-negative (asserted).
  MSeries identify_first_two() const {
    if (n_ < 2) throw std::invalid_argument("need two variables to identify");
    std::vector<int> hi(n_ - 1);
    hi[0] = std::min(hi_[0], hi_[1]);
    for (int i = 2; i < n_; ++i) hi[i - 1] = hi_[i];
    MSeries r(n_ - 1, hi);
    std::vector<int> e(n_ - 1);
    for (const auto& [ex, v] : t_) {
      if (ex[0] < 0 || ex[1] < 0) throw std::domain_error("identification needs non-negative exponents");
      e[0] = ex[0] + ex[1];
      for (int i = 2; i < n_; ++i) e[i - 1] = ex[i];
      r.add_term(e, v);
    }
    return r;
  }

  bool has_negative_exponents() const {
    for (const auto& [e, v] : t_)
      for (int x : e)
        if (x < 0) return true;
    return false;
  }

  // Difference restricted to tuples with non-negative exponents and total
  // degree <= total; both windows must cover them.
  bool equals_through_degree(const MSeries& o, int total) const {
    check_arity(*this, o);
    auto scan = [&](const MSeries& s, const MSeries& other) {
      for (const auto& [e, v] : s.t_) {
        int sum = 0;
        bool neg = false;
        for (int x : e) {
          if (x < 0) neg = true;
          sum += x;
        }
        if (neg || sum > total) continue;
        if (!in_window_both(e, s, other)) throw TruncationError("degree comparison exceeds validity window");
        if (!(v == other.coeff(e))) return false;
      }
      return true;
    };
    return scan(*this, o) && scan(o, *this);
  }

  bool is_zero_through_degree(int total) const {
    for (const auto& [e, v] : t_) {
      int sum = 0;
      bool neg = false;
      for (int x : e) {
        if (x < 0) neg = true;
        sum += x;
      }
      if (neg || sum > total) continue;
      if (!R::is_zero(v)) return false;
    }
    return true;
  }

  std::string str() const {
    std::string out;
    for (const auto& [e, v] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + R::str(v) + ")*x^[";
      for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
      out += "]";
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_arity(const MSeries& x, const MSeries& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("multiseries arity mismatch");
  }
  static bool in_window_both(const std::vector<int>& e, const MSeries& a, const MSeries& b) {
    return a.in_window(e) && b.in_window(e);
  }
  std::vector<int> min_exps() const {
    std::vector<int> v(n_, 0);
    if (t_.empty()) return hi_;
    bool first = true;
    for (const auto& [e, c] : t_) {
      for (int i = 0; i < n_; ++i) v[i] = first ? e[i] : std::min(v[i], e[i]);
      first = false;
    }
    for (int i = 0; i < n_; ++i) v[i] = std::min(v[i], 0);
    return v;
  }

  int n_;
  std::vector<int> hi_;
  std::map<std::vector<int>, K> t_;
};

}  // namespace zv
