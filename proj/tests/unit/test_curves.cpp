#include <doctest.h>

#include <random>

#include "meridian/curves/curves.hpp"
#include "meridian/error.hpp"

using namespace meridian;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

// Hand-written evaluations of the curve equations, used as checksums of the
// transcribed preset strings and as an independent oracle for the pencil.
struct Direct {
  mpq_class x, y, z, a;
  mpq_class f4() const { return x * x * y * y + y * y * z * z + x * x * z * z - 2 * x * y * z * (x + y + z); }
  mpq_class f1() const {
    const mpq_class b = a - 1;
    return b * b * b * x - a * a * a * y + z;
  }
  mpq_class f2() const { return a * (a - 1) * x * y - (a - 1) * x * z + a * y * z; }
  mpq_class f3() const {
    const mpq_class b3 = (a - 1) * (a - 1) * (a - 1), a3 = a * a * a;
    return -(a - 2) * (2 * a - 1) * (a + 1) * x * y * z - a3 * x * y * y - x * z * z - b3 * x * x * y + y * z * z +
           b3 * x * x * z + a3 * y * y * z;
  }
  mpq_class quintic() const {
    const mpq_class q = z * z + 11 * x * z - x * x;
    return z * z * y * y * y - z * (33 * x * z + 2 * x * x + 8 * z * z) * y * y + (21 * z * z + 21 * x * z - x * x) * q * y +
           (x - 18 * z) * q * q;
  }
};

}  // namespace

TEST_CASE("MultiPoly parsing, ordering and printing") {
  const MultiPoly p = parse_multipoly("3 x y^2 - 1/2 z + x^3 - 4", xyz);
  CHECK(p.to_string() == "x^3 + 3*x*y^2 - 1/2*z - 4");
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in("z") == 1);
  CHECK(p.terms().size() == 4);
  CHECK(parse_multipoly("(x - y)(x + y)", xyz) == parse_multipoly("x^2 - y^2", xyz));
  CHECK(parse_multipoly("x - x", xyz).is_zero());
  CHECK(parse_multipoly("-x^2", xyz).evaluate({3, 0, 0}) == -9);
  CHECK_THROWS_AS(parse_multipoly("x + w", xyz), ParseError);
  CHECK_THROWS_AS(parse_multipoly("(x + y", xyz), ParseError);
  CHECK_THROWS_AS(parse_multipoly("x / 0", xyz), ParseError);
  CHECK_THROWS_AS(parse_multipoly("x", xyz) + parse_multipoly("t", {"t"}), InvalidArgument);
}

TEST_CASE("MultiPoly is a commutative ring") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, 3), count(0, 6);
  auto random_poly = [&] {
    MultiPoly p(xyz);
    for (int n = count(rng); n > 0; --n) {
      MultiPoly t = MultiPoly::constant(xyz, coef(rng));
      for (const char* v : {"x", "y", "z"}) t *= MultiPoly::variable(xyz, v).pow(static_cast<unsigned>(ex(rng)));
      p += t;
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    std::vector<mpq_class> pt{mpq_class(coef(rng), 3), coef(rng), mpq_class(1, 7)};
    pt[0].canonicalize();
    CHECK((a * b + c).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt) + c.evaluate(pt));
    const MultiPoly ab = a * b;
    for (const auto& [e, v] : ab.terms()) CHECK(v != 0);
  }
}

TEST_CASE("preset checksums") {
  const CurvePresets c = CurvePresets::published();
  for (const auto& pt : std::vector<std::vector<mpq_class>>{{2, 3, 5, 7}, {-1, 4, mpq_class(1, 3), -2}, {0, 1, 1, 9}}) {
    const Direct d{pt[0], pt[1], pt[2], pt[3]};
    CHECK(c.f4().evaluate(pt) == d.f4());
    CHECK(c.f1().evaluate(pt) == d.f1());
    CHECK(c.f2().evaluate(pt) == d.f2());
    CHECK(c.f3().evaluate(pt) == d.f3());
    CHECK(c.degtyarev().evaluate({pt[0], pt[1], pt[2]}) == d.quintic());
  }
  CHECK(c.f4().terms().size() == 6);
  CHECK(c.f3().total_degree() == 6);
  CHECK(c.f3().degree_in(xyz) == 3);
  CHECK(c.degtyarev().total_degree() == 5);
}

TEST_CASE("pencil identity") {
  const IdentityCheck r = verify_pencil_identity();
  CHECK(r.holds);
  CHECK(r.mode == "identically");
  CHECK(r.residual.is_zero());

  CurvePresets bad = CurvePresets::published();
  bad.cubic += " + x^3";
  const IdentityCheck b = verify_pencil_identity(bad);
  CHECK_FALSE(b.holds);
  CHECK(b.mode == "fails");
  CHECK(b.residual.degree_in(xyz) == 6);

  CHECK(verify_pencil_identity_at(2).holds);
  CHECK(verify_pencil_identity_at(mpq_class(-5, 3)).holds);
  CHECK_FALSE(verify_pencil_identity_at(2, bad).holds);
}

TEST_CASE("pencil identity agrees with evaluation on a full grid") {
  // Per-variable degrees of the residual bound the grid that detects a
  // nonzero polynomial; use the larger (maxdeg + 1)^4 box.
  const CurvePresets c = CurvePresets::published();
  const MultiPoly res = c.f4() * c.f1().pow(2) - (c.f3().pow(2) - c.f2().pow(3) * 4);
  int maxdeg = 0;
  for (const auto& v : pencil_variables())
    maxdeg = std::max({maxdeg, (c.f4() * c.f1().pow(2)).degree_in(v), c.f3().pow(2).degree_in(v), c.f2().pow(3).degree_in(v)});
  REQUIRE(maxdeg >= 6);
  long nonzero = 0, points = 0;
  for (int x = 0; x <= maxdeg; ++x)
    for (int y = 0; y <= maxdeg; ++y)
      for (int z = 0; z <= maxdeg; ++z)
        for (int a = 0; a <= maxdeg; ++a) {
          const Direct d{x, y - 3, z + 1, a - 5};
          const mpq_class f3 = d.f3(), f2 = d.f2(), f1 = d.f1();
          if (d.f4() * f1 * f1 - (f3 * f3 - 4 * f2 * f2 * f2) != 0) ++nonzero;
          ++points;
        }
  CHECK(points >= (maxdeg + 1) * (maxdeg + 1) * (maxdeg + 1) * (maxdeg + 1));
  CHECK(nonzero == 0);
  CHECK(res.is_zero());
}

TEST_CASE("golden reduction") {
  const std::vector<std::string>& v = pencil_variables();
  CHECK(reduce_golden(parse_multipoly("a^2 + a - 1", v)).is_zero());
  CHECK(reduce_golden(parse_multipoly("x (a^2 + a - 1)^3 + y", v)) == parse_multipoly("y", v));
  // a^3 = 2a - 1
  CHECK(reduce_golden(parse_multipoly("a^3", v)) == parse_multipoly("2 a - 1", v));
  CHECK_FALSE(reduce_golden(parse_multipoly("a^2", v)).is_zero());
}

TEST_CASE("parametrization of the quartic") {
  const ParametrizationCheck r = verify_parametrization();
  CHECK(r.holds);
  CurvePresets bad = CurvePresets::published();
  bad.quartic += " + x^4";
  CHECK_FALSE(verify_parametrization(bad).holds);

  const CurvePresets c = CurvePresets::published();
  const auto par = c.parametrization();
  for (auto [t, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 0}, {5, -3}}) {
    const std::vector<mpq_class> ts{t, s};
    const Direct d{par[0].evaluate(ts), par[1].evaluate(ts), par[2].evaluate(ts), 0};
    CHECK(d.f4() == 0);
  }
}

TEST_CASE("Degtyarev discriminant") {
  const DiscriminantReport r = degtyarev_discriminant();
  CHECK(r.proportional());
  CHECK(r.multiplicity_pattern() == std::vector<int>{1, 5});
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].first == UniPoly::x());
  CHECK(r.factors[1].first == UniPoly({-1, -11, 1}));
  CHECK(r.discriminant.degree() == 11);
  // Quotient by the expected factors is a nonzero constant.
  const UniPoly q = r.discriminant / r.expected;
  CHECK(q.degree() == 0);
  CHECK(*r.constant == q.coefficient(0));

  // Sylvester oracle: Res(y^2 - x, 2y) = -4x.
  const DiscriminantReport s = discriminant_report(parse_multipoly("y^2 - x", xyz), UniPoly::x());
  CHECK(s.discriminant == UniPoly({0, -4}));
  CHECK(s.multiplicity_pattern() == std::vector<int>{1});
  CHECK(*s.constant == -4);

  // Pointwise: at rational x the discriminant of the fibre cubic, computed
  // from the classical formula, matches up to the fixed constant.
  for (int xv = -4; xv <= 4; ++xv) {
    const mpq_class X = xv, q2 = 1 + 11 * X - X * X;
    const mpq_class b = -(33 * X + 2 * X * X + 8), c = (21 + 21 * X - X * X) * q2, d = (X - 18) * q2 * q2;
    const mpq_class disc = 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
    CHECK(r.discriminant.evaluate(X) == -disc);
  }

  // The roots (11 +- 5 sqrt 5)/2 are bracketed by rational approximations.
  const UniPoly q5{-1, -11, 1};
  for (const auto& [lo, hi] : std::vector<std::pair<mpq_class, mpq_class>>{
           {mpq_class(11 * 1000 + 5 * 2236, 2000), mpq_class(11 * 1000 + 5 * 2237, 2000)},
           {mpq_class(11 * 1000 - 5 * 2237, 2000), mpq_class(11 * 1000 - 5 * 2236, 2000)}})
    CHECK(sgn(q5.evaluate(lo)) * sgn(q5.evaluate(hi)) < 0);
}

TEST_CASE("Plucker dual degree") {
  CHECK(plucker_dual_degree(5, {{4, 2}, {4, 2}, {4, 2}}) == 5);
  CHECK(plucker_dual_degree(4, {{2, 2}, {2, 2}, {2, 2}}) == 3);
  CHECK(plucker_dual_degree(2, {}) == 2);
  CHECK_THROWS_AS(plucker_dual_degree(2, {{4, 2}}), InvalidArgument);
  CHECK_THROWS_AS(plucker_dual_degree(0, {}), InvalidArgument);
  CHECK_THROWS_AS(plucker_dual_degree(3, {{0, 2}}), InvalidArgument);
}
