#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "support.hpp"

#include "eqsing/arc.hpp"
#include "eqsing/series.hpp"
#include "eqsing/wedge.hpp"

using namespace eqsing;
using testutil::bp;

TEST_CASE("parse_poly reads monomials, fractions and cancellations") {
  auto p = bp("a*t^6");
  REQUIRE(p.terms().size() == 1);
  CHECK(p.coeff({1, 6}) == Scalar(1));

  auto q = bp("t^4 + (3/2)*a*t^2");
  CHECK(q.terms().size() == 2);
  CHECK(q.coeff({0, 4}) == Scalar(1));
  CHECK(q.coeff({1, 2}) == Scalar(mpq_class(3, 2)));

  CHECK(bp("t^2 - t^2").is_zero());
  CHECK(bp("(a + t)^2") == bp("a^2 + 2*a*t + t^2"));
  CHECK(bp(" 2 * ( a - t ) ") == bp("2*a-2*t"));
}

TEST_CASE("parse errors carry kind and byte offset") {
  auto kind_of = [](const std::string& s) {
    try {
      bp(s);
    } catch (const ParseError& e) {
      return std::make_pair(e.kind(), e.offset());
    }
    FAIL("no error for " << s);
    return std::make_pair(ParseError::Kind::Syntax, std::size_t{0});
  };
  CHECK(kind_of("a +").first == ParseError::Kind::Syntax);
  CHECK(kind_of("a + x").first == ParseError::Kind::UnknownVariable);
  CHECK(kind_of("a + x").second == 4);
  CHECK(kind_of("t^-1").first == ParseError::Kind::NegativeExponent);
  CHECK(kind_of("(a").first == ParseError::Kind::Syntax);
  CHECK(kind_of("1/0").first == ParseError::Kind::Syntax);
}

TEST_CASE("parse, print, parse is a fixed point on the corpus") {
  for (const auto& cc : testsupport::corpus())
    for (const auto& e : cc.param.entries) {
      auto once = bp(e.to_string());
      CHECK(once == e);
      CHECK(bp(once.to_string()).to_string() == once.to_string());
    }
  for (const auto& s : {"-t^5", "(3/2)*a*t^2 - (7/4)*t^3", "-(1/2)*a"}) CHECK(bp(bp(s).to_string()) == bp(s));
}

TEST_CASE("t_order and leading_coeff_t") {
  CHECK(t_order(bp("t^3 + a*t^5")) == 3u);
  CHECK(t_order(bp("a*t^2")) == 2u);
  CHECK_FALSE(t_order(BiPoly()).has_value());

  CHECK(leading_coeff_t(bp("3*t^2 + 4*t^3 + 5*a*t^4")) == UPoly(Scalar(3)));
  CHECK(leading_coeff_t(bp("a*t^2 + t^3")) == UPoly::monomial(1, 1));
  CHECK(leading_coeff_t(bp("(a^2+1)*t^5")) == UPoly::monomial(1, 2) + UPoly(Scalar(1)));
  CHECK_THROWS(leading_coeff_t(BiPoly()));
}

TEST_CASE("substitute_arc") {
  const Scalar c = testutil::c_sym();
  auto r = substitute_arc(bp("a*t^2"), Arc::monomial(1, c));
  CHECK(r.ramification == 1);
  CHECK(r.poly == UPoly::monomial(c, 3));
  CHECK(substitute_arc(bp("t^3"), Arc::monomial(1, c)).poly == UPoly::monomial(1, 3));
  CHECK(substitute_arc(bp("a*t^5"), Arc::monomial(2, 1)).poly == UPoly::monomial(1, 7));
  // theta = 3/2: t = s^2, a = c s^3
  auto h = substitute_arc(bp("a*t + t^2"), Arc::monomial(mpq_class(3, 2), c));
  CHECK(h.ramification == 2);
  CHECK(h.poly == UPoly::monomial(c, 5) + UPoly::monomial(1, 4));
  // theta = infinity
  CHECK(substitute_arc(bp("a*t^2 + t^3"), Arc::constant()).poly == UPoly::monomial(1, 3));
}

TEST_CASE("arc substitution is a ring homomorphism") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 4), k(-3, 3);
  auto random_poly = [&] {
    BiPoly p;
    for (int i = 0; i < 4; ++i) p += BiPoly::monomial(Scalar(k(rng)), e(rng), e(rng));
    return p;
  };
  const Arc arcs[] = {Arc::monomial(mpq_class(2, 3), testutil::c_sym()), Arc::monomial(3, 2),
                      Arc::monomial(1, 1).refined(mpq_class(5, 2), testutil::c_sym()), Arc::constant(2)};
  for (int it = 0; it < 40; ++it) {
    auto p = random_poly(), q = random_poly();
    for (const auto& arc : arcs) {
      auto sp = substitute_arc(p, arc).poly, sq = substitute_arc(q, arc).poly;
      CHECK(substitute_arc(p + q, arc).poly == sp + sq);
      CHECK(substitute_arc(p * q, arc).poly == sp * sq);
    }
  }
}

TEST_CASE("t_order is additive when leading coefficients multiply to nonzero") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 5), k(-2, 2);
  for (int it = 0; it < 100; ++it) {
    BiPoly p, q;
    for (int i = 0; i < 3; ++i) {
      p += BiPoly::monomial(Scalar(k(rng)), e(rng), e(rng));
      q += BiPoly::monomial(Scalar(k(rng)), e(rng), e(rng));
    }
    if (p.is_zero() || q.is_zero()) continue;
    if ((leading_coeff_t(p) * leading_coeff_t(q)).is_zero()) continue;
    CHECK(t_order(p * q) == *t_order(p) + *t_order(q));
  }
}

namespace {

SeriesT series(std::initializer_list<long> coeffs, unsigned order) {
  SeriesT s(order);
  unsigned i = 0;
  for (long c : coeffs) s[i++] = Scalar(c);
  return s;
}

SeriesT power(const SeriesT& v, unsigned m) {
  SeriesT out = series({1}, v.order());
  for (unsigned i = 0; i < m; ++i) out = out * v;
  return out;
}

}  // namespace

TEST_CASE("series_invert_root") {
  CHECK(series_invert_root(series({1}, 6), 3) == series({1}, 6));
  CHECK(series_invert_root(series({1, 1}, 6), 1) == series({1, 1}, 6));

  auto v = series_invert_root(series({1, 1}, 6), 2);
  CHECK(v[0] == Scalar(1));
  CHECK(v[1] == Scalar(mpq_class(1, 2)));
  CHECK(v[2] == Scalar(mpq_class(-1, 8)));
  CHECK(v[3] == Scalar(mpq_class(1, 16)));
  CHECK(power(v, 2) == series({1, 1}, 6));

  // v^m = u for symbolic coefficients
  SeriesT u(7);
  u[0] = Scalar(1);
  u[2] = Scalar::symbol(1) / Scalar::symbol(2);
  u[3] = Scalar::symbol(3);
  for (unsigned m : {2u, 3u, 5u}) CHECK(power(series_invert_root(u, m), m) == u);

  CHECK(power(series_invert_root(series({4, 1}, 5), 2), 2) == series({4, 1}, 5));
  CHECK_THROWS_AS(series_invert_root(series({0, 1}, 5), 2), NonInvertibleSeries);
  CHECK_THROWS_AS(series_invert_root(series({2, 1}, 5), 2), NonInvertibleSeries);
  CHECK_THROWS_AS(series({0, 1}, 4).inverse(), NonInvertibleSeries);
}

TEST_CASE("compositional inverse of s = t + t^2 has Catalan coefficients") {
  auto w = compositional_inverse_factor(series({1, 1}, 7));
  // Independent oracle: t = sum (-1)^n C_n s^{n+1}.
  long catalan = 1;
  for (unsigned n = 0; n < 7; ++n) {
    CHECK(w[n] == Scalar(n % 2 ? -catalan : catalan));
    catalan = catalan * 2 * (2 * n + 1) / (n + 2);
  }
}

TEST_CASE("wedge3 against 3x3 determinants") {
  using V = std::vector<Scalar>;
  // omega = r1 ^ r2, so wedge3(v, omega)_{ijk} is the minor of rows (v, r1, r2).
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> k(-4, 4);
  for (unsigned n : {3u, 4u, 5u}) {
    for (int it = 0; it < 20; ++it) {
      V v(n), r1(n), r2(n);
      for (unsigned i = 0; i < n; ++i) v[i] = k(rng), r1[i] = k(rng), r2[i] = k(rng);
      auto w = wedge3(v, wedge2(r1, r2));
      auto triples = triple_indices(n);
      REQUIRE(w.size() == triples.size());
      for (std::size_t m = 0; m < triples.size(); ++m) {
        auto [i, j, l] = triples[m];
        Scalar det = v[i] * (r1[j] * r2[l] - r1[l] * r2[j]) - v[j] * (r1[i] * r2[l] - r1[l] * r2[i]) +
                     v[l] * (r1[i] * r2[j] - r1[j] * r2[i]);
        CHECK(w[m] == det);
      }
    }
  }
  // v in the plane gives zero
  V r1{1, 0, 0, 0}, r2{0, 3, 0, 2};
  for (const auto& x : wedge3(V{2, 3, 0, 2}, wedge2(r1, r2))) CHECK(x.is_zero());
  CHECK_THROWS(wedge3(V{0, 1, 0}, V{3, 0, 2, 0, 0, 0}));
  CHECK(pair_indices(4).size() == 6);
  CHECK(pair_position(1, 3, 4) == 4);
}

TEST_CASE("Scalar equality by cross-multiplication") {
  Scalar g1 = Scalar::symbol(1), g2 = Scalar::symbol(2);
  CHECK(g1 / g2 == (g1 * Scalar(2)) / (g2 * Scalar(2)));
  CHECK((g1 * g2) / g2 == g1);
  CHECK((g1 - g1).is_zero());
  CHECK((Scalar(mpq_class(1, 3)) + Scalar(mpq_class(2, 3))).is_rational());
  CHECK((Scalar(mpq_class(1, 3)) + Scalar(mpq_class(2, 3))).rational() == 1);
  CHECK_FALSE((g1 / g2).is_rational());
  CHECK((g1 * g1 - g2 * g2) / (g1 - g2) == g1 + g2);
}

TEST_CASE("rational univariate polynomials") {
  auto p = UPolyQ::from_roots({{0, 2}, {1, 1}, {mpq_class(-1, 2), 3}});
  CHECK(squarefree_part(p) == UPolyQ::from_roots({{0, 1}, {1, 1}, {mpq_class(-1, 2), 1}}));
  CHECK(p.rational_roots() == std::vector<mpq_class>{mpq_class(-1, 2), 0, 1});
  CHECK(gcd(p, p.derivative()) == UPolyQ::from_roots({{0, 1}, {mpq_class(-1, 2), 2}}));
  auto q = UPolyQ({-2, 0, 1});  // t^2 - 2
  CHECK(q.rational_roots().empty());
  auto roots = q.numeric_roots();
  REQUIRE(roots.size() == 2);
  for (auto r : roots) CHECK(std::abs(std::abs(r) - std::sqrt(2.0L)) < 1e-15L);
  CHECK(coprime_part(UPolyQ::from_roots({{0, 1}, {2, 1}}), p) == UPolyQ::from_roots({{2, 1}}));
}
