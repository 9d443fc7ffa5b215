#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "meridian/charvar/charvar.hpp"
#include "meridian/error.hpp"
#include "meridian/fpgroups/text_format.hpp"
#include "meridian/fpgroups/tietze.hpp"

using namespace meridian;

namespace {

const char* affine_degtyarev =
    "gens x y; rel x*y*x*y*x = y*x*y*x*y; rel [x, y*x*y^-1*x*y*x*y^-1*x*y];";
const char* p2510 = "gens x y; rel x^2; rel y^5; rel (x*y)^10;";
const char* p2255 = "gens x y z; rel x^5; rel y^5; rel z^2; rel (x*y*z)^2;";
const char* c23 = "gens x y; rel x^2; rel y^3;";
const char* trefoil = "gens a b; rel a*b*a*b^-1*a^-1*b^-1;";
const char* torus25 = "gens a b; rel a^2 = b^5;";

Presentation P(const char* s) { return parse_presentation(s); }

std::vector<std::string> lines(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }

// Fox derivative of a relator in a two-generator group with both generators
// mapped to t, evaluated in floating point; written independently of the
// library's group-ring code.
std::complex<double> fox_numeric(const Word& r, int k, std::complex<double> t) {
  std::complex<double> prefix = 1, sum = 0;
  for (int l : r) {
    if (l == k) sum += prefix;
    if (l > 0) prefix *= t;
    else prefix /= t;
    if (l == -k) sum -= prefix;
  }
  return sum;
}

}  // namespace

TEST_CASE("Fox derivatives") {
  const AbelianGroup a = abelianization(Presentation::with_generators(2, "x"));
  const LaurentPoly one = LaurentPoly::constant(2, 1);
  const LaurentPoly xb = LaurentPoly::monomial({1, 0});
  CHECK(fox_derivative(Word{1, 1}, 1, a) == one + xb);
  CHECK(fox_derivative(Word{1, 2}, 2, a) == xb);
  CHECK(fox_derivative(Word{-1}, 1, a) == LaurentPoly::monomial({-1, 0}, -1));
  CHECK(fox_derivative(Word{1, 1}, 1, a).to_string({"x", "y"}) == "1 + x");

  // Free group ring level: d(x y x^-1)/dx = 1 - x y x^-1.
  const auto d = fox_derivative_free(Word{1, 2, -1}, 1);
  REQUIRE(d.size() == 2);
  CHECK(d.at(Word{}) == 1);
  CHECK(d.at(Word{1, 2, -1}) == -1);
}

TEST_CASE("fundamental Fox identity and product rule") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(-3, 3), len(0, 12);
  const AbelianGroup a = abelianization(Presentation::with_generators(3));
  for (int trial = 0; trial < 200; ++trial) {
    auto random_word = [&] {
      std::vector<int> l;
      for (int n = len(rng); n > 0; --n) {
        int x = 0;
        while (x == 0) x = letter(rng);
        l.push_back(x);
      }
      return Word(l);
    };
    const Word r = random_word(), u = random_word();
    LaurentPoly lhs(3);
    for (int k = 1; k <= 3; ++k) {
      std::vector<long> e(3, 0);
      e[static_cast<std::size_t>(k - 1)] = 1;
      lhs += fox_derivative(r, k, a) * (LaurentPoly::monomial(e) - LaurentPoly::constant(3, 1));
    }
    std::vector<long> re(3, 0);
    for (int k = 1; k <= 3; ++k) re[static_cast<std::size_t>(k - 1)] = r.exponent_sum(k);
    CHECK(lhs == LaurentPoly::monomial(re) - LaurentPoly::constant(3, 1));
    for (int k = 1; k <= 3; ++k)
      CHECK(fox_derivative(r * u, k, a) == fox_derivative(r, k, a) + LaurentPoly::monomial(re) * fox_derivative(u, k, a));
  }
}

TEST_CASE("chain condition for twisted complexes") {
  for (const char* s : {p2510, p2255, c23, affine_degtyarev, trefoil, torus25}) {
    const Presentation p = P(s);
    const AbelianGroup a = abelianization(p);
    std::vector<Character> chars;
    if (a.is_finite()) chars = characters_of_order_dividing(a, a.exponent()->get_si());
    else
      for (long n : {1L, 2L, 6L, 10L})
        for (long e = 0; e < n; ++e) chars.push_back(Character{n, {e}, false});
    for (const Character& chi : chars) {
      const TwistedComplex c = twisted_complex(p, a, chi);
      for (std::size_t r = 0; r < c.d2.rows(); ++r) {
        CycloNumber sum(c.field, mpq_class(0));
        for (std::size_t k = 0; k < c.d2.cols(); ++k) sum += c.d2(r, k) * c.d1[k];
        CHECK(sum.is_zero());
      }
      // Letter-by-letter evaluation agrees with the abelianized Fox matrix.
      const FoxMatrix fm = fox_matrix(p, a);
      std::vector<long> values = chi.exponents;
      for (std::size_t r = 0; r < c.d2.rows(); ++r)
        for (std::size_t k = 0; k < c.d2.cols(); ++k) CHECK(fm.entries[r][k].evaluate(c.field, values) == c.d2(r, k));
    }
  }
}

TEST_CASE("twisted H1 dimensions") {
  const Presentation a = P(p2510);
  const AbelianGroup ab = abelianization(a);
  REQUIRE(ab.to_string() == "Z/10");
  CHECK(twisted_h1_dim(a, Character{10, {1}, false}) == 1);
  CHECK(twisted_h1_dim(a, Character{10, {0}, false}) == 0);
  CHECK(twisted_h1_dim(P(p2255), Character{10, {3}, false}) == 2);
  CHECK(twisted_h1_dim(P(affine_degtyarev), Character{2, {1}, false}) == 0);
  CHECK(twisted_h1_dim(P(affine_degtyarev), Character{1, {0}, false}) == 1);
  CHECK_THROWS_AS(twisted_h1_dim(a, Character{3, {1}, false}), InvalidArgument);
  CHECK_THROWS_AS(twisted_h1_dim(a, Character{10, {1, 2}, false}), InvalidArgument);
}

TEST_CASE("finite torus characteristic varieties") {
  CHECK(charvar_finite_torus(P(p2510)).summary() == lines({"V1 = μ10-primitive", "V2 = ∅"}));
  CHECK(charvar_finite_torus(P(p2255)).summary() == lines({"V1 = V2 = μ10-primitive", "V3 = ∅"}));
  CHECK(charvar_finite_torus(P(c23)).summary() == lines({"V1 = μ6-primitive", "V2 = ∅"}));
  const CharVariety v = charvar_finite_torus(P(p2510));
  for (const auto& c : v.characters) CHECK(c.depth == (c.order == 10 ? 1u : 0u));
  CHECK_THROWS_AS(charvar_finite_torus(P(trefoil)), WrongMode);
}

TEST_CASE("rank-one characteristic varieties") {
  CHECK(charvar_rank_one(P("gens x;")).summary() == lines({"V1 = {1}", "V2 = ∅"}));
  CHECK(charvar_rank_one(P(trefoil)).summary() == lines({"V1 = {1} ∪ μ6-primitive", "V2 = ∅"}));
  CHECK(charvar_rank_one(P(torus25)).summary() == lines({"V1 = {1} ∪ μ10-primitive", "V2 = ∅"}));
  CHECK(charvar_rank_one(P(affine_degtyarev)).summary() == lines({"V1 = {1} ∪ μ10-primitive", "V2 = ∅"}));
  CHECK_THROWS_AS(charvar_rank_one(P(p2510)), WrongMode);
  CHECK_THROWS_AS(charvar_rank_one(P("gens x y;")), WrongMode);

  // Figure-eight knot: Alexander polynomial t^2 - 3t + 1 is not cyclotomic.
  const CharVariety f8 = charvar_rank_one(P("gens a b; rel b*a^-1*b*a*b^-1 = a^-1*b*a*b^-1*a;"));
  CHECK(f8.describe(1) == "{1} ∪ roots of t^2 - 3*t + 1");

  // Trefoil: brute-force substitution at every sixth root of unity.
  const Presentation t = P(trefoil);
  for (long e = 1; e < 6; ++e) {
    const std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / 6);
    const bool vanishes = std::abs(fox_numeric(t.relators()[0], 2, z)) < 1e-9;
    CHECK(vanishes == (root_order(6, e) == 6));
    CHECK(twisted_h1_dim(t, Character{6, {e}, false}) == (vanishes ? 1u : 0u));
  }
}

TEST_CASE("rank-one mode agrees with per-character dimensions") {
  for (const char* s : {trefoil, torus25, affine_degtyarev, "gens x;"}) {
    const Presentation p = P(s);
    const AbelianGroup a = abelianization(p);
    const CharVariety v = charvar_rank_one(p);
    for (long n = 1; n <= 30; ++n)
      for (long e = 0; e < n; ++e) CHECK(rank_one_depth(v, n, e) == twisted_h1_dim(p, a, Character{n, {e}, false}));
  }
}

TEST_CASE("characteristic varieties are Tietze invariant") {
  const Presentation raw =
      P("gens a b c; rel c = a*b; rel a*b*a = b*a*b; rel c^3 = (a*b*a)^2;");
  const Presentation simple = tietze_simplify(raw).presentation;
  CHECK(charvar_rank_one(raw).summary() == charvar_rank_one(simple).summary());
  const Presentation orb = P("gens x y w; rel w = x*y; rel x^2; rel y^5; rel w^10;");
  CHECK(charvar_finite_torus(orb).summary() == charvar_finite_torus(tietze_simplify(orb).presentation).summary());
  CHECK(charvar_finite_torus(orb).summary() == charvar_finite_torus(P(p2510)).summary());
}
