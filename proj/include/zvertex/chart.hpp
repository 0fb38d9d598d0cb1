#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "zvertex/laurent.hpp"
#include "zvertex/ring.hpp"

namespace zv {

// Weight of x^m in the base leg series: prod_{j=1}^{m-1}(m a + j) / (m-1)!.
template <class K>
K leg_weight(const Framing<K>& fr, int m) {
  using R = RingOps<K>;
  if (m < 1) throw std::domain_error("leg_weight needs m >= 1");
  K acc = R::one();
  const K ma = R::from_long(m) * fr.a;
  Rational fact(1);
  for (int j = 1; j <= m - 1; ++j) {
    acc = acc * (ma + R::from_long(j));
    fact *= Rational(j);
  }
  return acc * R::from_rational(Rational(1) / fact);
}

// All series data attached to the framed curve x = y^a - y^{a+1} near its
// simple ramification point, in three charts: the global x chart, the local
// odd coordinate vhat (involution = sign flip), and the sheet coordinate z
// (y = a/(a+1) + z). Immutable after construction; safe to share.
template <class K>
class CurveChart {
 public:
  using R = RingOps<K>;
  using L = Laurent<K>;

  // order_x: window for power series in x; order_v: window for vhat and z
  // series; bmax: deepest descent index carried by the pole bases; mmax:
  // largest leg monomial with a prepared exceptional kernel (0 = none).
  CurveChart(const Framing<K>& fr, int order_x, int order_v, int bmax, int mmax)
      : fr_(fr), order_x_(order_x), order_v_(order_v), bmax_(bmax), mmax_(mmax) {
    if (order_x < 4 || order_v < 8) throw std::invalid_argument("chart orders too small");
    if (bmax < 0 || mmax < 0) throw std::invalid_argument("chart ladder sizes negative");
    if (mmax >= order_x - 1) throw std::invalid_argument("x window too small for leg kernels");
    build_x_chart();
    build_v_chart();
    build_z_chart();
    build_pole_bases();
    build_exceptional();
  }

  const Framing<K>& framing() const { return fr_; }
  int order_x() const { return order_x_; }
  int order_v() const { return order_v_; }
  int bmax() const { return bmax_; }
  int mmax() const { return mmax_; }

  // x chart. u(x) solves x = u(1-u)^a; y = 1 - u.
  const L& u_x() const { return u_x_; }
  // weight(m) = [x^m] of the base leg series (Euler index 0).
  const K& weight(int m) const {
    if (m < 1 || m >= static_cast<int>(weights_.size()))
      throw std::out_of_range("leg weight index outside the x window");
    return weights_[static_cast<std::size_t>(m)];
  }
  int weight_count() const { return static_cast<int>(weights_.size()); }

  // Applies (x d/dx)^b to the base leg series, termwise for negative b.
  L leg_series(int b, int window) const {
    if (window > static_cast<int>(weights_.size())) throw TruncationError("leg series window exceeds x chart");
    std::vector<K> c(static_cast<std::size_t>(window), R::zero());
    for (int m = 1; m < window; ++m)
      c[static_cast<std::size_t>(m)] = weights_[static_cast<std::size_t>(m)] *
                                       R::from_rational(pow_int(Rational(m), b));
    return L::from_coeffs(0, std::move(c), window);
  }

  // vhat chart. s = 1/t; the involution is vhat -> -vhat.
  const L& w_s() const { return w_s_; }        // w(s) = -ln(1-s) - a ln(1+s/a)
  const L& vhat_s() const { return vhat_s_; }  // vhat(s), odd coordinate with w = ((a+1)/2a) vhat^2
  const L& s_v() const { return s_v_; }        // s(vhat), reversion of vhat_s
  const L& t_v() const { return t_v_; }        // t(vhat), simple pole at 0
  const L& t_odd() const { return t_odd_; }
  const L& t_even() const { return t_even_; }
  const L& z_v() const { return z_v_; }  // z = s/(a+1)
  const L& v_z() const { return v_z_; }  // vhat(z), reversion of z_v

  // z chart.
  const L& P_z() const { return P_z_; }          // involution in z, P(z) = -z + O(z^2)
  const L& g_z() const { return g_z_; }          // g = d ln x / dz = -(a+1) z / Q(z)
  const L& inv_g_z() const { return inv_g_z_; }  // exact three-term Laurent polynomial
  const L& inv_g_Pz() const { return inv_g_Pz_; }
  const L& log_ratio_z() const { return log_ratio_z_; }  // ln y(z) - ln y(P(z))
  const L& kernel_z() const { return kernel_z_; }        // g / log_ratio
  const L& P_pow(int k) const { return P_pow_.at(static_cast<std::size_t>(k)); }
  int P_pow_count() const { return static_cast<int>(P_pow_.size()); }

  // Pole bases. pole_poly(b) is the t-polynomial of descent index b >= 0,
  // degree 2b+1, built by the ladder q -> t(t-1)(at+1) q' / (a+1).
  const std::vector<K>& pole_poly(int b) const { return pole_polys_.at(static_cast<std::size_t>(b)); }
  // pole_z(k): the same polynomial at index k-1 written in z via t = 1/((a+1)z);
  // exact Laurent polynomial supported on exponents -(2k+1)..-1.
  const L& pole_z(int k) const { return check_pole_index(k), pole_z_.at(static_cast<std::size_t>(k)); }
  const L& pole_Pz(int k) const { return check_pole_index(k), pole_Pz_.at(static_cast<std::size_t>(k)); }
  // pole_odd(b): odd part of the index-b basis element in the vhat chart,
  // pole order exactly 2b+1.
  const L& pole_odd(int b) const { return pole_odd_.at(static_cast<std::size_t>(b)); }
  const L& pole_odd_log() const { return pole_odd_log_; }  // index -1, odd part of -ln y
  const L& kernel_v() const { return kernel_v_; }          // 1 / (2 pole_odd_log)

  // Exceptional leg kernels for a leg frozen at monomial x^m.
  const L& exceptional_z(int m) const { return check_leg_index(m), exc_z_.at(static_cast<std::size_t>(m)); }
  const L& exceptional_Pz(int m) const { return check_leg_index(m), exc_Pz_.at(static_cast<std::size_t>(m)); }
  const L& exceptional_odd(int m) const { return check_leg_index(m), exc_odd_.at(static_cast<std::size_t>(m)); }

  // Two-slot pairing of the genus-zero two-point function at (z, P(z)):
  // 1 / (g(z) g(P(z)) (z - P(z))^2), and minus its vhat principal part.
  const L& pair_z() const { return pair_z_; }
  const L& pair_pp_v() const { return pair_pp_v_; }

  // Ramification point. y* = a/(a+1); x* = a^a/(a+1)^{a+1} evaluates only
  // for a specialized non-negative integer framing.
  K y_star() const { return fr_.a / fr_.a1; }
  static Rational x_star(const Rational& a) {
    mpz_class num = a.get_num(), den = a.get_den();
    if (den != 1 || num < 0) throw std::domain_error("closed-form x* needs a non-negative integer framing");
    const unsigned long n = num.get_ui();
    return pow_int(a, static_cast<int>(n)) / pow_int(a + 1, static_cast<int>(n) + 1);
  }

  // Cheap structural identities; throws std::logic_error on failure.
  void self_check() const {
    // vhat(s)^2 = (2a/(a+1)) w(s): the odd coordinate squares to the pinned multiple of w.
    require((vhat_s_ * vhat_s_).eq_on_common_window(w_s_ * (R::from_long(2) * fr_.a / fr_.a1)),
            "vhat^2 mismatch");
    // z t (a+1) = 1.
    require((z_v_ * t_v_ * fr_.a1).eq_on_common_window(L::constant(R::one())), "z t (a+1) != 1");
    require((g_z_ * inv_g_z_).eq_on_common_window(L::constant(R::one())), "g * 1/g != 1");
    // x(P(z)) = x(z) differentiated: 1/g composed with P equals P' / g.
    require(inv_g_Pz_.eq_on_common_window(P_z_.derivative() * inv_g_z_), "involution breaks x");
    // Ladder consistency at the log end: index -1 to index 0.
    require(ladder_step(pole_odd_log_).eq_on_common_window(pole_odd_[0]), "odd ladder seam at -1");
    // Odd parts from the t-polynomials agree with the ladder.
    for (int b = 1; b <= std::min(bmax_ + 1, 2); ++b)
      require(eval_poly_t(pole_polys_[static_cast<std::size_t>(b)]).odd_part().eq_on_common_window(
                  pole_odd_[static_cast<std::size_t>(b)]),
              "odd ladder vs t-polynomial");
    for (int m = 1; m <= mmax_; ++m) {
      require(exc_odd_[static_cast<std::size_t>(m)].odd_part().eq_on_common_window(
                  exc_odd_[static_cast<std::size_t>(m)]),
              "exceptional odd part not odd");
      require(exc_z_[static_cast<std::size_t>(m)].val() == -1, "exceptional kernel valuation");
    }
    if (mmax_ >= 1) {
      require(exc_z_[1].at(-1) == fr_.a / fr_.a1, "exceptional kernel anchor at m=1");
      require(exc_odd_[1].at(-1) == fr_.a, "odd exceptional anchor at m=1");
    }
    // u(x) against its closed form, low orders.
    for (int n = 1; n <= std::min(order_x_ - 1, 8); ++n) require(u_x_.at(n) == u_closed_form(n), "u coefficient");
    // 1/(1 - (a+1)u) = 1 + (a+1) * (base leg series).
    const int w = std::min(order_x_, weight_count());
    L lhs = (L::constant(R::one()) - u_x_ * fr_.a1).truncated(w).inverse();
    require(lhs.eq_on_common_window(L::constant(R::one()) + leg_series(0, w) * fr_.a1),
            "t(x) vs weighted leg series");
  }

  K u_closed_form(int n) const {
    K acc = R::one();
    Rational fact(1);
    for (int j = 0; j <= n - 2; ++j) acc = acc * (R::from_long(n) * fr_.a + R::from_long(j));
    for (int j = 2; j <= n; ++j) fact *= Rational(j);
    return acc * R::from_rational(Rational(1) / fact);
  }

 private:
  static void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("chart self check failed: ") + what);
  }
  void check_pole_index(int k) const {
    if (k < 1 || k > bmax_ + 1) throw std::out_of_range("pole basis index outside ladder");
  }
  void check_leg_index(int m) const {
    if (m < 1 || m > mmax_) throw std::out_of_range("exceptional kernel index outside plan");
  }

  // -(a/(a+1)) (1/vhat) d/dvhat, one descent step in the vhat chart.
  L ladder_step(const L& f) const { return f.derivative().shifted(-1) * (-(fr_.a / fr_.a1)); }

  L eval_poly_t(const std::vector<K>& p) const {
    L acc;
    for (std::size_t i = p.size(); i-- > 0;) {
      acc = acc * t_v_;
      if (!R::is_zero(p[i])) acc += L::constant(p[i]);
    }
    return acc;
  }

  void build_x_chart() {
    const L x = L::var();
    const L one = L::constant(R::one());
    // x(u) = u exp(a ln(1-u)), reverted on the window.
    L log1mu = (one - x).truncated(order_x_).log();
    L xofu = x * (log1mu * fr_.a).exp();
    u_x_ = xofu.revert();
    weights_.assign(static_cast<std::size_t>(order_x_), R::zero());
    for (int m = 1; m < order_x_; ++m) weights_[static_cast<std::size_t>(m)] = leg_weight(fr_, m);
  }

  void build_v_chart() {
    const K ia = R::one() / fr_.a;
    const L s = L::var();
    const L one = L::constant(R::one());
    // w = -ln(1-s) - a ln(1+s/a); leading term ((a+1)/2a) s^2.
    w_s_ = (one - s).truncated(order_v_).log() * (-R::one()) - (one + s * ia).truncated(order_v_).log() * fr_.a;
    // vhat = s sqrt((2a/(a+1)) w / s^2).
    vhat_s_ = ((w_s_ * (R::from_long(2) * fr_.a / fr_.a1)).shifted(-2).sqrt_unit()).shifted(1);
    s_v_ = vhat_s_.revert();
    t_v_ = s_v_.inverse();
    t_odd_ = t_v_.odd_part();
    t_even_ = t_v_.even_part();
    z_v_ = s_v_ * (R::one() / fr_.a1);
    v_z_ = z_v_.revert();
    P_z_ = z_v_.compose(v_z_ * (-R::one()));
    pole_odd_log_ = ((one + s_v_ * ia).log() * (-R::one())).odd_part();
    kernel_v_ = (pole_odd_log_ * R::from_long(2)).inverse();
  }

  void build_z_chart() {
    const K ia1 = R::one() / fr_.a1;
    const L z = L::var();
    // Q(z) = (a/(a+1) + z)(1/(a+1) - z) = x / (dy-slope normalization); g = -(a+1) z / Q.
    const L Q = L::from_coeffs(0, {fr_.a * ia1 * ia1, (R::one() - fr_.a) * ia1, -R::one()});
    g_z_ = (z * (-fr_.a1)) * Q.truncated(order_v_).inverse();
    inv_g_z_ = L::from_coeffs(-1, {-fr_.a * ia1 * ia1 * ia1, -(R::one() - fr_.a) * ia1 * ia1, ia1});
    const L Pinv = P_z_.inverse();
    inv_g_Pz_ = Pinv * (-fr_.a * ia1 * ia1 * ia1) + L::constant(-(R::one() - fr_.a) * ia1 * ia1) + P_z_ * ia1;
    // ln y(z) - ln y(P(z)) with y = a/(a+1) + z; constants cancel.
    const K a1a = fr_.a1 / fr_.a;
    const L one = L::constant(R::one());
    log_ratio_z_ = (one + z * a1a).truncated(order_v_).log() - (one + P_z_ * a1a).log();
    kernel_z_ = g_z_ * log_ratio_z_.inverse();
    kmax_ = 2 * bmax_ + 8;
    P_pow_.assign(static_cast<std::size_t>(kmax_), L());
    P_pow_[0] = L::constant(R::one());
    if (kmax_ > 1) P_pow_[1] = P_z_;
    for (int k = 2; k < kmax_; ++k) P_pow_[static_cast<std::size_t>(k)] = P_pow_[static_cast<std::size_t>(k - 1)] * P_z_;
    const L dz = z - P_z_;
    pair_z_ = inv_g_z_ * inv_g_Pz_ * (dz * dz).inverse();
  }

  void build_pole_bases() {
    const K ia1 = R::one() / fr_.a1;
    // t-polynomial ladder: start (t-1)/(a+1), multiply derivative by t(t-1)(at+1)/(a+1).
    pole_polys_.assign(static_cast<std::size_t>(bmax_ + 2), {});
    pole_polys_[0] = {-ia1, ia1};
    for (int b = 0; b <= bmax_; ++b) {
      const std::vector<K>& p = pole_polys_[static_cast<std::size_t>(b)];
      std::vector<K> q(p.size() + 2, R::zero());
      for (std::size_t k = 1; k < p.size(); ++k) {
        const K dk = p[k] * R::from_long(static_cast<long>(k));
        q[k + 2] += dk * (fr_.a * ia1);          // a t^3 / (a+1)
        q[k + 1] += dk * ((R::one() - fr_.a) * ia1);  // (1-a) t^2 / (a+1)
        q[k] += dk * (-ia1);                     // -t / (a+1)
      }
      pole_polys_[static_cast<std::size_t>(b + 1)] = std::move(q);
    }
    // z-chart Laurent polynomials via t = 1/((a+1)z), and their P-composites.
    const L Pinv = P_z_.inverse();
    std::vector<L> Pinv_pow(static_cast<std::size_t>(2 * bmax_ + 4), L());
    Pinv_pow[0] = L::constant(R::one());
    if (Pinv_pow.size() > 1) Pinv_pow[1] = Pinv;
    for (std::size_t j = 2; j < Pinv_pow.size(); ++j) Pinv_pow[j] = Pinv_pow[j - 1] * Pinv;
    pole_z_.assign(static_cast<std::size_t>(bmax_ + 2), L());
    pole_Pz_.assign(static_cast<std::size_t>(bmax_ + 2), L());
    for (int k = 1; k <= bmax_ + 1; ++k) {
      const std::vector<K>& p = pole_polys_[static_cast<std::size_t>(k)];
      std::vector<K> c(p.size() - 1, R::zero());
      K scale = R::one();
      L viaP;
      for (std::size_t j = 1; j < p.size(); ++j) {
        scale = scale * ia1;
        c[c.size() - j] = p[j] * scale;  // exponent -j
        if (!R::is_zero(p[j])) viaP += Pinv_pow[j] * (p[j] * scale);
      }
      pole_z_[static_cast<std::size_t>(k)] = L::from_coeffs(-static_cast<int>(c.size()), std::move(c));
      pole_Pz_[static_cast<std::size_t>(k)] = viaP;
    }
    // Odd vhat ladder from the odd part of t.
    pole_odd_.assign(static_cast<std::size_t>(bmax_ + 2), L());
    pole_odd_[0] = t_odd_ * ia1;
    for (int b = 0; b <= bmax_; ++b)
      pole_odd_[static_cast<std::size_t>(b + 1)] = ladder_step(pole_odd_[static_cast<std::size_t>(b)]);
  }

  void build_exceptional() {
    const K ia1 = R::one() / fr_.a1;
    // pair principal part: (a^2/(a+1)^2) (1/(4 vhat^4) - (1+1/a+1/a^2)/(12 vhat^2)).
    const K a2 = fr_.a * fr_.a * ia1 * ia1;
    const K p3 = (fr_.a * fr_.a + fr_.a + R::one()) / (fr_.a * fr_.a);
    pair_pp_v_ = L::from_coeffs(-4, {a2 * R::from_rational(Rational(1, 4)), R::zero(),
                                     a2 * p3 * R::from_rational(Rational(-1, 12)), R::zero()});
    if (mmax_ == 0) return;
    // Coefficient tables S(j,m) = [x^m] (-x u') u^j for the leg kernels.
    const int xw = mmax_ + 2;
    const L ut = u_x_.truncated(xw);
    const L xup = ut.derivative().shifted(1) * (-R::one());  // -x u'
    std::vector<L> layer(static_cast<std::size_t>(mmax_), L());
    L upow = L::constant(R::one());
    for (int j = 0; j < mmax_; ++j) {
      layer[static_cast<std::size_t>(j)] = (xup * upow).truncated(xw);
      upow = (upow * ut).truncated(xw);
    }
    // Powers of z(vhat) shared by every leg, and 1/g in the vhat chart.
    std::vector<L> z_pow(static_cast<std::size_t>(kmax_), L());
    z_pow[0] = L::constant(R::one());
    if (kmax_ > 1) z_pow[1] = z_v_;
    for (int k = 2; k < kmax_; ++k) z_pow[static_cast<std::size_t>(k)] = z_pow[static_cast<std::size_t>(k - 1)] * z_v_;
    const L zinv = z_v_.inverse();
    const L inv_g_v = zinv * (-fr_.a * ia1 * ia1 * ia1) + L::constant(-(R::one() - fr_.a) * ia1 * ia1) + z_v_ * ia1;
    exc_z_.assign(static_cast<std::size_t>(mmax_ + 1), L());
    exc_Pz_.assign(static_cast<std::size_t>(mmax_ + 1), L());
    exc_odd_.assign(static_cast<std::size_t>(mmax_ + 1), L());
    for (int m = 1; m <= mmax_; ++m) {
      // A_m(zeta) = [x^m] (-x u')(zeta + u - 1/(a+1))^{-2} as a series in zeta:
      // coefficient of zeta^k is (k+1)(-1)^k (-(a+1))^{k+2} sum_j C(k+1+j,j) (a+1)^j S(j,m).
      std::vector<K> amk(static_cast<std::size_t>(kmax_), R::zero());
      for (int k = 0; k < kmax_; ++k) {
        K sum = R::zero();
        Rational binom(1);  // C(k+1+j, j) built incrementally over j
        K a1j = R::one();
        for (int j = 0; j < m; ++j) {
          if (j > 0) binom = binom * Rational(k + 1 + j) / Rational(j);
          const K s = layer[static_cast<std::size_t>(j)].at(m);
          if (!R::is_zero(s)) sum += s * a1j * R::from_rational(binom);
          a1j = a1j * fr_.a1;
        }
        K lead = R::from_rational(Rational((k % 2 == 0) ? (k + 1) : -(k + 1)));
        K sign_pow = R::one();  // (-(a+1))^{k+2}
        for (int i = 0; i < k + 2; ++i) sign_pow = sign_pow * (-fr_.a1);
        amk[static_cast<std::size_t>(k)] = lead * sign_pow * sum;
      }
      const L A_z = L::from_coeffs(0, amk, kmax_);
      L A_P, A_v;
      for (int k = 0; k < kmax_; ++k) {
        const K& ck = amk[static_cast<std::size_t>(k)];
        if (R::is_zero(ck)) continue;
        A_P += P_pow_[static_cast<std::size_t>(k)] * ck;
        A_v += z_pow[static_cast<std::size_t>(k)] * ck;
      }
      exc_z_[static_cast<std::size_t>(m)] = inv_g_z_ * A_z;
      exc_Pz_[static_cast<std::size_t>(m)] = inv_g_Pz_ * A_P.truncated(kmax_);
      exc_odd_[static_cast<std::size_t>(m)] = (inv_g_v * A_v.truncated(kmax_)).odd_part();
    }
  }

  Framing<K> fr_;
  int order_x_, order_v_, bmax_, mmax_;
  int kmax_ = 0;

  L u_x_;
  std::vector<K> weights_;
  L w_s_, vhat_s_, s_v_, t_v_, t_odd_, t_even_, z_v_, v_z_;
  L P_z_, g_z_, inv_g_z_, inv_g_Pz_, log_ratio_z_, kernel_z_;
  std::vector<L> P_pow_;
  std::vector<std::vector<K>> pole_polys_;
  std::vector<L> pole_z_, pole_Pz_, pole_odd_;
  L pole_odd_log_, kernel_v_;
  std::vector<L> exc_z_, exc_Pz_, exc_odd_;
  L pair_z_, pair_pp_v_;
};

}  // namespace zv
