#include "meridian/curves/curves.hpp"

#include "meridian/error.hpp"

namespace meridian {

const std::vector<std::string>& pencil_variables() {
  static const std::vector<std::string> v{"x", "y", "z", "a"};
  return v;
}

const std::vector<std::string>& param_variables() {
  static const std::vector<std::string> v{"t", "s"};
  return v;
}

CurvePresets CurvePresets::published() {
  CurvePresets c;
  c.quartic = "x^2 y^2 + y^2 z^2 + x^2 z^2 - 2 x y z (x + y + z)";
  c.line = "(a - 1)^3 x - a^3 y + z";
  c.conic = "a (a - 1) x y - (a - 1) x z + a y z";
  c.cubic =
      "-(a - 2) (2 a - 1) (a + 1) x y z - a^3 x y^2 - x z^2 - (a - 1)^3 x^2 y"
      " + y z^2 + (a - 1)^3 x^2 z + a^3 y^2 z";
  c.rational =
      "z^2 y^3 - z (33 x z + 2 x^2 + 8 z^2) y^2"
      " + (21 z^2 + 21 x z - x^2) (z^2 + 11 x z - x^2) y"
      " + (x - 18 z) (z^2 + 11 x z - x^2)^2";
  c.param_x = "t^2 s^2";
  c.param_y = "(t - s)^2 s^2";
  c.param_z = "t^2 (t - s)^2";
  return c;
}

MultiPoly CurvePresets::f4() const { return parse_multipoly(quartic, pencil_variables()); }
MultiPoly CurvePresets::f1() const { return parse_multipoly(line, pencil_variables()); }
MultiPoly CurvePresets::f2() const { return parse_multipoly(conic, pencil_variables()); }
MultiPoly CurvePresets::f3() const { return parse_multipoly(cubic, pencil_variables()); }
MultiPoly CurvePresets::degtyarev() const { return parse_multipoly(rational, {"x", "y", "z"}); }

std::vector<MultiPoly> CurvePresets::parametrization() const {
  return {parse_multipoly(param_x, param_variables()), parse_multipoly(param_y, param_variables()),
          parse_multipoly(param_z, param_variables())};
}

MultiPoly reduce_golden(const MultiPoly& p) {
  // a^k as u + v*a, using a^2 = 1 - a.
  const std::size_t ai = p.index_of("a");
  std::vector<std::pair<mpq_class, mpq_class>> lin{{1, 0}};  // (constant, coefficient of a)
  MultiPoly out(p.variables());
  const MultiPoly a = MultiPoly::variable(p.variables(), "a");
  for (const auto& [e, c] : p.terms()) {
    const auto k = static_cast<std::size_t>(e[ai]);
    while (lin.size() <= k) {
      const auto [u, v] = lin.back();
      // a*(u + v a) = u a + v (1 - a)
      lin.emplace_back(v, u - v);
    }
    Exponents f = e;
    f[ai] = 0;
    MultiPoly mono(p.variables());
    mono += MultiPoly::constant(p.variables(), c);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (int j = 0; j < f[i]; ++j) mono *= MultiPoly::variable(p.variables(), p.variables()[i]);
    out += mono * (MultiPoly::constant(p.variables(), lin[k].first) + a * lin[k].second);
  }
  return out;
}

namespace {

IdentityCheck pencil(const MultiPoly& f1, const MultiPoly& f2, const MultiPoly& f3, const MultiPoly& f4) {
  IdentityCheck r;
  r.residual = f4 * f1.pow(2) - (f3.pow(2) - f2.pow(3) * 4);
  if (r.residual.is_zero()) {
    r.holds = true;
    r.mode = "identically";
  } else if (reduce_golden(r.residual).is_zero()) {
    r.holds = true;
    r.mode = "modulo a^2 + a - 1";
  } else {
    r.mode = "fails";
  }
  return r;
}

}  // namespace

IdentityCheck verify_pencil_identity(const CurvePresets& c) { return pencil(c.f1(), c.f2(), c.f3(), c.f4()); }

IdentityCheck verify_pencil_identity_at(const mpq_class& a, const CurvePresets& c) {
  return pencil(c.f1().substitute("a", a), c.f2().substitute("a", a), c.f3().substitute("a", a),
                c.f4().substitute("a", a));
}

ParametrizationCheck verify_parametrization(const CurvePresets& c) {
  std::vector<MultiPoly> images = c.parametrization();
  images.push_back(MultiPoly(param_variables()));  // a does not occur in f4
  const MultiPoly f4 = c.f4();
  if (f4.degree_in("a") > 0) throw InvalidArgument("the quartic must not depend on a");
  ParametrizationCheck r;
  r.residual = f4.compose(images);
  r.holds = r.residual.is_zero();
  return r;
}

BiPoly affine_xy(const MultiPoly& f) {
  const std::size_t xi = f.index_of("x"), yi = f.index_of("y");
  std::vector<std::vector<mpq_class>> coeffs;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != xi && i != yi && e[i] != 0 && f.variables()[i] != "z")
        throw InvalidArgument("unexpected variable " + f.variables()[i]);
    const auto dy = static_cast<std::size_t>(e[yi]), dx = static_cast<std::size_t>(e[xi]);
    if (coeffs.size() <= dy) coeffs.resize(dy + 1);
    if (coeffs[dy].size() <= dx) coeffs[dy].resize(dx + 1, 0);
    coeffs[dy][dx] += c;
  }
  std::vector<UniPoly> polys;
  for (auto& v : coeffs) polys.emplace_back(std::move(v));
  return BiPoly(std::move(polys));
}

std::vector<std::pair<UniPoly, int>> squarefree_factors(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].degree() > 0) out.emplace_back(parts[i], static_cast<int>(i + 1));
  return out;
}

std::vector<int> DiscriminantReport::multiplicity_pattern() const {
  std::vector<int> m;
  for (const auto& f : factors) m.push_back(f.second);
  return m;
}

DiscriminantReport discriminant_report(const MultiPoly& f, const UniPoly& expected) {
  DiscriminantReport r;
  r.discriminant = discriminant_y(affine_xy(f));
  r.factors = squarefree_factors(r.discriminant);
  r.expected = expected;
  r.constant = proportionality(r.discriminant, expected);
  return r;
}

DiscriminantReport degtyarev_discriminant(const CurvePresets& c) {
  const UniPoly q{-1, -11, 1};
  return discriminant_report(c.degtyarev(), UniPoly::x() * q.pow(5));
}

long plucker_dual_degree(long degree, const std::vector<SingularPoint>& singular) {
  if (degree < 1) throw InvalidArgument("degree must be positive");
  long d = degree * (degree - 1);
  for (const auto& p : singular) {
    if (p.milnor < 1 || p.multiplicity < 1) throw InvalidArgument("Milnor number and multiplicity must be positive");
    d -= p.milnor - 1 + p.multiplicity;
  }
  if (d < 0) throw InvalidArgument("negative dual degree: inconsistent singularity data");
  return d;
}

}  // namespace meridian
