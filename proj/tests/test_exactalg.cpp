#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zvertex/laurent.hpp"
#include "zvertex/multiseries.hpp"
#include "zvertex/partition.hpp"
#include "zvertex/polynomial.hpp"
#include "zvertex/ratfn.hpp"
#include "zvertex/ring.hpp"

using namespace zv;

TEST_CASE("rational basics") {
  Rational half = rat(1, 2);
  CHECK(to_string(half) == "1/2");
  CHECK(to_string(rat(-4, 2)) == "-2");
  CHECK(rational_from_string("3/6") == half);
  CHECK(rational_from_string("-7") == rat(-7, 1));
  CHECK(pow_int(rat(2, 3), -2) == rat(9, 4));
  CHECK(pow_int(rat(5, 1), 0) == rat(1, 1));
}

TEST_CASE("polynomial arithmetic and division") {
  Poly a = Poly::var();
  Poly p = a * a * Rational(2) + a * Rational(3) - Poly::constant(5);
  CHECK(p.str() == "2*a^2 + 3*a - 5");
  CHECK(p.eval(Rational(2)) == Rational(9));
  CHECK(p.derivative().str() == "4*a + 3");

  Poly q = (a - Poly::constant(1)) * (a * Rational(2) + Poly::constant(5));
  CHECK(q.divexact(a - Poly::constant(1)).str() == "2*a + 5");
  CHECK_THROWS(p.divexact(a - Poly::constant(2)));

  Poly sym = a * a + a;  // invariant under a -> -1-a
  CHECK(sym.subst_mirror() == sym);
  CHECK((a * a).subst_mirror().str() == "a^2 + 2*a + 1");

  CHECK(poly_a_plus_1().valuation_at(1) == 1);
  CHECK((poly_a() * poly_a() * poly_a_plus_1()).valuation_at(0) == 2);

  Poly coprime = a * a + Poly::constant(1);
  Poly g = Poly::gcd(coprime * q, q * q);
  CHECK(g.primitive_part() == q.primitive_part());
}

TEST_CASE("ratfn strict subring") {
  RatFn x = RatFn(Poly::var());
  RatFn inv_a = RatFn(Poly::constant(1), 1, 0);  // 1/a
  RatFn inv_a1 = RatFn(Poly::constant(1), 0, 1); // 1/(a+1)

  RatFn s = x * inv_a;  // 1 exactly: a/a
  CHECK(s.as_poly().str() == "1");

  RatFn t = inv_a + inv_a1;  // (2a+1)/(a(a+1))
  CHECK(t.den_str() == "a*(a+1)");
  CHECK(t.num().str() == "2*a + 1");
  CHECK_THROWS(t.as_poly());
  CHECK_THROWS(t.inv());  // 2a+1 is not a unit here

  RatFn u = RatFn(poly_a() * Rational(3));
  CHECK((t / u).den_str() == "a^2*(a+1)");
  CHECK(t.eval(Rational(1)) == rat(3, 2));

  RatFn prod = RatFn(poly_a() * poly_a_plus_1() * Rational(2));
  CHECK(prod.divexact_poly(Poly::var() * Rational(2)).as_poly().str() == "a + 1");
}

TEST_CASE("laurent window arithmetic") {
  using L = Laurent<Rational>;
  L f = L::monomial(Rational(1), -1) + L::monomial(Rational(1), 1);
  L f2 = f * f;
  CHECK(f2.at(-2) == Rational(1));
  CHECK(f2.at(0) == Rational(2));
  CHECK(f2.at(2) == Rational(1));
  CHECK(f2.val() == -2);

  // Window bookkeeping: truncations combine through valuations.
  L g = f.truncated(5);
  CHECK(g.trunc() == 5);
  CHECK((g * g).trunc() == 4);  // 5 + (-1)
  CHECK_THROWS((g * g).at(4));

  L zero_w = L::zero_window(3);
  CHECK((f * zero_w).trunc() == 2);
  CHECK((f + zero_w).at(1) == Rational(1));
}

TEST_CASE("laurent inverse log exp revert") {
  using L = Laurent<Rational>;
  int N = 12;
  // f = x/(1-x) = x + x^2 + ...
  L x = L::var();
  L geom = L::from_coeffs(0, std::vector<Rational>(N, Rational(1)), N);
  L f = (x * geom).truncated(N);
  L h = f.inverse();  // 1/f = x^{-1} - 1
  CHECK(h.at(-1) == Rational(1));
  CHECK(h.at(0) == Rational(-1));
  for (int e = 1; e < h.trunc(); ++e) CHECK(h.at(e) == Rational(0));

  // log(1+x) and exp round trip.
  L one_plus_x = (L::constant(Rational(1)) + x).truncated(N);
  L lg = one_plus_x.log();
  CHECK(lg.at(1) == Rational(1));
  CHECK(lg.at(2) == rat(-1, 2));
  CHECK(lg.at(3) == rat(1, 3));
  L back = lg.exp();
  CHECK(back.at(0) == Rational(1));
  CHECK(back.at(1) == Rational(1));
  for (int e = 2; e < back.trunc(); ++e) CHECK(back.at(e) == Rational(0));

  // Lagrange reversion: g = revert(f) satisfies f(g(x)) = x.
  L grev = f.revert();
  L comp = f.compose(grev);
  CHECK(comp.at(1) == Rational(1));
  for (int e = 2; e < comp.trunc(); ++e) CHECK(comp.at(e) == Rational(0));

  // sqrt of a unit series.
  L sq = one_plus_x.sqrt_unit();
  CHECK((sq * sq).eq_on_common_window(one_plus_x));

  CHECK_THROWS(x.log());               // valuation must be zero
  CHECK_THROWS(one_plus_x.exp());      // valuation must be positive
  CHECK_THROWS(L::monomial(Rational(1), -1).integral());
}

TEST_CASE("laurent over ratfn coefficients") {
  using L = Laurent<RatFn>;
  RatFn ia1 = RatFn(Poly::constant(1), 0, 1);
  L f = L::monomial(ia1, 1) + L::monomial(RatFn::from_long(1), 2);
  L p = f * f;
  CHECK(p.at(2).den_str() == "(a+1)^2");
  CHECK(p.at(3).num().str() == "2");
}

TEST_CASE("partitions") {
  auto parts = partitions_of(4);
  CHECK(parts.size() == 5);
  CHECK(parts.front().parts == std::vector<int>{4});
  CHECK(parts.back().parts == std::vector<int>{1, 1, 1, 1});
  Partition p({2, 1, 1});
  CHECK(p.aut_order() == 2);
  CHECK(p.z_factor() == 4);
  CHECK(partitions_with_len(2, 6).size() == 9);
}

TEST_CASE("multiseries window and identification") {
  using M = MSeries<Rational>;
  M f(2, {4, 4});
  f.add_term({1, 0}, Rational(1));
  f.add_term({0, 1}, Rational(1));
  M f2 = f * f;
  CHECK(f2.coeff({1, 1}) == Rational(2));
  CHECK(f2.coeff({2, 0}) == Rational(1));
  M d = f2.euler(0);
  CHECK(d.coeff({2, 0}) == Rational(2));
  CHECK(d.coeff({1, 1}) == Rational(2));
  M idd = f2.identify_first_two();
  CHECK(idd.nvars() == 1);
  CHECK(idd.coeff({2}) == Rational(4));  // (x+y)^2 -> 4x^2 on the diagonal
  CHECK((f - f).is_zero_through_degree(3));
}
