#include <doctest.h>

#include <random>

#include "meridian/error.hpp"
#include "meridian/exactalg/bivariate.hpp"
#include "meridian/exactalg/cyclotomic.hpp"

using namespace meridian;

namespace {

// Cofactor expansion along the first row; exponential but independent of
// the elimination code under test.
mpq_class laplace_det(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpq_class d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const mpq_class c = m[0][j] * laplace_det(minor);
    d += (j % 2 == 0) ? c : mpq_class(-c);
  }
  return d;
}

// Sylvester determinant of two univariate polynomials, built by hand.
mpq_class sylvester_oracle(const UniPoly& f, const UniPoly& g) {
  const std::size_t m = static_cast<std::size_t>(f.degree()), n = static_cast<std::size_t>(g.degree());
  std::vector<std::vector<mpq_class>> s(m + n, std::vector<mpq_class>(m + n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f.coefficient(m - i);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g.coefficient(n - i);
  return laplace_det(s);
}

BiPoly random_bipoly(std::mt19937& rng, int dy, int dx) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<UniPoly> c;
  for (int i = 0; i <= dy; ++i) {
    std::vector<mpq_class> v;
    for (int j = 0; j <= dx; ++j) v.emplace_back(coef(rng));
    c.emplace_back(std::move(v));
  }
  if (c.back().is_zero()) c.back() = UniPoly{1};
  return BiPoly(std::move(c));
}

CycloNumber from_coeffs(const FieldPtr& k, std::initializer_list<long> c) { return CycloNumber(k, UniPoly(c)); }

// 1 + z + ... + z^9 as a polynomial, i.e. (z^10 - 1)/(z - 1).
CycloNumber geometric10(const FieldPtr& k) { return from_coeffs(k, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}); }

// Fox derivative of y^5 with y -> z^2: 1 + z^2 + z^4 + z^6 + z^8.
CycloNumber p5(const FieldPtr& k, const CycloNumber& z) {
  return z.pow(8) + z.pow(6) + z.pow(4) + z.pow(2) + CycloNumber(k, mpq_class(1));
}

// Alternating-sign variant z^8 - z^6 + z^4 - z^2 + 1 = Phi_10(z^2).
CycloNumber p5_alternating(const FieldPtr& k, const CycloNumber& z) {
  return z.pow(8) - z.pow(6) + z.pow(4) - z.pow(2) + CycloNumber(k, mpq_class(1));
}

FieldMatrix matrix_2510(const FieldPtr& k) {
  const CycloNumber z = CycloNumber::zeta(k), one(k, mpq_class(1)), zero(k, mpq_class(0));
  return FieldMatrix(k, {{z.pow(5) + one, zero, geometric10(k)}, {zero, p5(k, z), z.pow(5) * geometric10(k)}});
}

FieldMatrix matrix_2255(const FieldPtr& k) {
  const CycloNumber z = CycloNumber::zeta(k), one(k, mpq_class(1)), zero(k, mpq_class(0));
  const CycloNumber zb = z.galois(-1);
  const CycloNumber z51 = z.pow(5) + one;
  return FieldMatrix(k, {{p5(k, z), zero, zero, z51}, {zero, p5(k, zb), zero, z * z51}, {zero, zero, z51, z51}});
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const UniPoly a{1, 2, 3}, b{-1, 1};
  CHECK((a * b).to_string() == "3*x^3 - x^2 - x - 1");
  auto [q, r] = UniPoly::divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(a.evaluate(2) == 17);
  CHECK(a.derivative() == UniPoly{2, 6});
  CHECK(UniPoly().to_string() == "0");
  CHECK(UniPoly(std::vector<mpq_class>{mpq_class(1, 2), 0, mpq_class(-3, 4)}).to_string() == "-(3/4)*x^2 + 1/2");
  CHECK_THROWS_AS(UniPoly::divmod(a, UniPoly()), DivisionByZero);
  CHECK(gcd(UniPoly{-1, 0, 1}, UniPoly{1, 2, 1}) == UniPoly{1, 1});
  CHECK(UniPoly{2, 4}.primitive() == UniPoly{1, 2});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == UniPoly{-1, 1});
  CHECK(cyclotomic_polynomial(10).to_string() == "x^4 - x^3 + x^2 - x + 1");
  CHECK(cyclotomic_polynomial(6) == UniPoly{1, -1, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), InvalidArgument);
  for (long n = 1; n <= 200; ++n) {
    UniPoly prod{1};
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic_polynomial(d);
    REQUIRE(prod == UniPoly::monomial(1, static_cast<std::size_t>(n)) - UniPoly{1});
    const UniPoly phi = cyclotomic_polynomial(n);
    CHECK(phi.degree() == euler_phi(n));
    for (const auto& c : phi.coefficients()) CHECK(c.get_den() == 1);
  }
}

TEST_CASE("cyclotomic field inverses") {
  const FieldPtr k = cyclotomic_field(10);
  const CycloNumber one(k, mpq_class(1)), z = CycloNumber::zeta(k);
  CHECK(cyclo_invert(one) == one);
  CHECK(cyclo_invert(z) == -z.pow(4));
  CHECK(cyclo_invert(z) == z.pow(9));
  CHECK(z.pow(5) == -one);
  const CycloNumber b = cyclo_invert(z - one);
  CHECK((z - one) * b == one);
  CHECK_THROWS_AS(cyclo_invert(CycloNumber(k, mpq_class(0))), DivisionByZero);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (long n : {3L, 5L, 7L, 10L, 12L, 15L}) {
    const FieldPtr f = cyclotomic_field(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<mpq_class> v;
      for (long i = 0; i < f->degree(); ++i) v.emplace_back(coef(rng), 1 + (trial % 3));
      const CycloNumber a(f, UniPoly(v));
      if (a.is_zero()) continue;
      CHECK((a * cyclo_invert(a)).is_one());
    }
  }
}

TEST_CASE("matrix rank") {
  const FieldPtr k = cyclotomic_field(10);
  FieldMatrix id(k, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = CycloNumber(k, mpq_class(1));
  CHECK(matrix_rank(id) == 3);
  CHECK(matrix_rank(FieldMatrix(k, 2, 4)) == 0);

  // Boundary matrix of the (2,5,10) orbifold group vanishes at primitive 10th roots.
  CHECK(matrix_rank(matrix_2510(k)) == 0);
  CHECK(matrix_rank(matrix_2510(cyclotomic_field(2))) >= 1);
  CHECK(matrix_rank(matrix_2510(cyclotomic_field(5))) >= 1);

  // (2,2,5,5): vanishes at primitive 10th roots, rank at least 2 elsewhere.
  CHECK(matrix_rank(matrix_2255(k)) == 0);
  for (long n : {2L, 5L, 3L, 4L}) CHECK(matrix_rank(matrix_2255(cyclotomic_field(n))) >= 2);

  // Phi_10(z^2) does not vanish when z^2 is a primitive 5th root, so the
  // alternating-sign entry would leave rank 1 at primitive 10th roots.
  const CycloNumber z10 = CycloNumber::zeta(k);
  CHECK_FALSE(p5_alternating(k, z10).is_zero());
  CHECK(p5(k, z10).is_zero());
  CHECK(p5_alternating(cyclotomic_field(2), CycloNumber::zeta(cyclotomic_field(2))).is_one());

  // Invariance under transposition and row swaps.
  const FieldPtr k7 = cyclotomic_field(7);
  const CycloNumber z = CycloNumber::zeta(k7), one(k7, mpq_class(1));
  FieldMatrix m(k7, {{z, z.pow(2), one}, {z.pow(2), z.pow(3), z}, {one, z, z.pow(3)}});
  const std::size_t r = matrix_rank(m);
  CHECK(r == 2);  // second row is z times the first
  CHECK(matrix_rank(m.transpose()) == r);
  FieldMatrix swapped(k7, {{one, z, z.pow(3)}, {z, z.pow(2), one}, {z.pow(2), z.pow(3), z}});
  CHECK(matrix_rank(swapped) == r);
}

TEST_CASE("resultants") {
  const BiPoly f1({UniPoly{0, -1}, UniPoly{}, UniPoly{1}});  // y^2 - x
  const BiPoly g({UniPoly{}, UniPoly{2}});                    // 2y
  CHECK(resultant_y(f1, g) == UniPoly{0, -4});
  const BiPoly f2({UniPoly{1}, UniPoly{}, UniPoly{1}});  // y^2 + 1
  CHECK(resultant_y(f2, g) == UniPoly{4});
  CHECK_THROWS_AS(resultant_y(BiPoly(), g), InvalidArgument);
  CHECK(discriminant_y(f1) == UniPoly{0, -4});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const BiPoly f = random_bipoly(rng, 1 + trial % 3, 2);
    const BiPoly h = random_bipoly(rng, 1 + (trial / 3) % 3, 2);
    const BiPoly k = random_bipoly(rng, 1 + trial % 2, 1);
    const UniPoly rfh = resultant_y(f, h);
    // Against cofactor expansion at sample points.
    for (long t : {-2L, 0L, 1L, 3L}) {
      const UniPoly fa = f.at_x(t), ha = h.at_x(t);
      if (fa.degree() != f.degree_y() || ha.degree() != h.degree_y()) continue;
      CHECK(rfh.evaluate(t) == sylvester_oracle(fa, ha));
    }
    const long sign = (f.degree_y() * h.degree_y()) % 2 == 0 ? 1 : -1;
    CHECK(resultant_y(h, f) == rfh * mpq_class(sign));
    CHECK(resultant_y(f, h * k) == rfh * resultant_y(f, k));
  }
}

TEST_CASE("squarefree decomposition and proportionality") {
  const UniPoly a{-11, 1}, b{1, 1};
  const UniPoly p = a * b.pow(2) * UniPoly{0, 1}.pow(5) * mpq_class(3);
  const auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 5);
  CHECK(parts[0] == a);
  CHECK(parts[1] == b);
  CHECK(parts[4] == UniPoly{0, 1});
  for (int i : {2, 3}) CHECK(parts[static_cast<std::size_t>(i)] == UniPoly{1});
  CHECK(proportionality(p, p * mpq_class(-7, 2)) == mpq_class(-2, 7));
  CHECK_FALSE(proportionality(a, b).has_value());
}
