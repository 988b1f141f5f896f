#include <gtest/gtest.h>

#include <random>

#include "tpcalc/oracle.hpp"
#include "tpcalc/tpcore.hpp"

using namespace tpcalc;

namespace {

QPoly P(const char* src, const char* var = "t") { return parse_upoly(src, var); }

QPoly random_poly(std::mt19937& rng, int degree, int bound = 9) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = coef(rng);
  while (c.back() == 0) c.back() = coef(rng);
  return QPoly(std::move(c));
}

bool squarefree(const QPoly& p) { return gcd(p, p.derivative()).degree() == 0; }

}  // namespace

TEST(UPoly, ArithmeticAndPrinting) {
  QPoly a = P("t^2 - 1"), b = P("t + 1");
  EXPECT_EQ((a * b).to_string("t"), "t^3 + t^2 - t - 1");
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, P("t - 1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(exact_div(a, b), P("t - 1"));
  EXPECT_THROW(exact_div(a, P("t + 2")), Error);
  EXPECT_EQ(gcd(a, P("2*t^2 + 4*t + 2")), b);
  EXPECT_EQ(a.derivative(), P("2*t"));
  EXPECT_EQ(a(Rational(3)), 8);
  EXPECT_EQ(QPoly().to_string("t"), "0");
  EXPECT_EQ(P("1/2*t^3 - t").to_string("t"), "1/2*t^3 - t");
}

TEST(Resultant, SmallCases) {
  // Res_u(u + t, u^2 + t u + t^2) = t^2.
  UPoly<QPoly> p(std::vector<QPoly>{P("t"), P("1")});
  UPoly<QPoly> q(std::vector<QPoly>{P("t^2"), P("t"), P("1")});
  EXPECT_EQ(resultant(p, q), P("t^2"));
  // Res(u - a, q) = q(a).
  QPoly g = P("u^3 - 2*u + 5", "u");
  for (int a = -3; a <= 3; ++a) EXPECT_EQ(resultant(QPoly(std::vector<Rational>{-a, 1}), g), g(Rational(a)));
  EXPECT_EQ(resultant(QPoly(1), g), 1);
  EXPECT_EQ(resultant(QPoly(), g), 0);
  EXPECT_THROW(resultant(QPoly(), QPoly()), Error);
  // Common root.
  EXPECT_EQ(resultant(P("t^2 - 1"), P("t^2 + 3*t + 2")), 0);
}

TEST(Resultant, Multiplicativity) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    QPoly p = random_poly(rng, 1 + trial % 4), q1 = random_poly(rng, 1 + trial % 3), q2 = random_poly(rng, 2);
    EXPECT_EQ(resultant(p, q1 * q2), resultant(p, q1) * resultant(p, q2));
    // Res(q, p) = (-1)^{deg p deg q} Res(p, q).
    Rational sign = (p.degree() * q1.degree()) % 2 ? -1 : 1;
    EXPECT_EQ(resultant(q1, p), sign * resultant(p, q1));
  }
}

TEST(Bareiss, MatchesCofactorExpansion) {
  std::vector<std::vector<Rational>> m{{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
  EXPECT_EQ(bareiss_determinant(m), 2 * (3 * -2 - 4 * 5) + 1 * (1 * -2 - 0));
  std::vector<std::vector<Rational>> z{{0, 1}, {1, 0}};
  EXPECT_EQ(bareiss_determinant(z), -1);
  std::vector<std::vector<Rational>> s{{1, 2}, {2, 4}};
  EXPECT_EQ(bareiss_determinant(s), 0);
}

TEST(DoublePoint, NamedCurves) {
  EXPECT_EQ(double_point_degree(parse_curve("t, t^2")), 0);
  EXPECT_EQ(double_point_resultant(parse_curve("t^2, t^3")), P("t^2"));
  EXPECT_EQ(double_point_degree(parse_curve("t^2, t^3")), 2);
  // Nodal cubic: t = 1 and t = -1 meet.
  EXPECT_EQ(double_point_degree(parse_curve("t^2 - 1, t^3 - t")), 2);
  EXPECT_THROW(double_point_resultant(parse_curve("t^2, t^4")), Error);
  EXPECT_THROW(parse_curve("3, 4"), Error);
  EXPECT_THROW(parse_curve("t^2"), ParseError);
  EXPECT_THROW(parse_curve("t^2, s"), ParseError);
}

TEST(DoublePoint, RandomCurvesMatchEngine) {
  std::mt19937 rng(20240611);
  int accepted = 0;
  for (int attempt = 0; accepted < 25 && attempt < 1000; ++attempt) {
    const int d = 3 + accepted % 4;
    CurveParam c{random_poly(rng, d, 5), random_poly(rng, d, 5)};
    if (c.x.degree() != d || c.y.degree() != d) continue;
    // Smooth at infinity: lc(y) x - lc(x) y has degree d - 1.
    if ((c.y.leading() * c.x - c.x.leading() * c.y).degree() != d - 1) continue;
    if (gcd(c.x.derivative(), c.y.derivative()).degree() != 0) continue;
    QPoly r = resultant(divided_difference(c.x), divided_difference(c.y));
    if (r.is_zero() || !squarefree(r)) continue;
    ++accepted;
    Rational nodes = count_points(rational_curve_model(d), MultiSingType::parse("A0,A0", 1), ResidualDB::shipped());
    EXPECT_EQ(Rational(r.degree()), 2 * nodes) << "x = " << c.x.to_string("t") << ", y = " << c.y.to_string("t");
    EXPECT_EQ(r.degree(), (d - 1) * (d - 2));
  }
  EXPECT_EQ(accepted, 25);
}
