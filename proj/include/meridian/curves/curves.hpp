#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meridian/curves/multipoly.hpp"
#include "meridian/exactalg/bivariate.hpp"

namespace meridian {

/// Source text of the named curves. The quartic pencil lives in Q[x,y,z,a]
/// where a is the parameter of the tangency point; the parametrization in
/// Q[t,s].
struct CurvePresets {
  std::string quartic;    // f4, tricuspidal quartic
  std::string line;       // f1
  std::string conic;      // f2
  std::string cubic;      // f3
  std::string rational;   // Degtyarev quintic with rational coefficients, in x,y,z
  std::string param_x, param_y, param_z;

  static CurvePresets published();

  MultiPoly f4() const;
  MultiPoly f1() const;
  MultiPoly f2() const;
  MultiPoly f3() const;
  MultiPoly degtyarev() const;
  /// The three coordinates of the parametrization.
  std::vector<MultiPoly> parametrization() const;
};

const std::vector<std::string>& pencil_variables();  // x y z a
const std::vector<std::string>& param_variables();   // t s

struct IdentityCheck {
  bool holds = false;
  /// "identically", "modulo a^2 + a - 1", or "fails".
  std::string mode;
  /// Zero when the identity holds identically.
  MultiPoly residual{pencil_variables()};
};

/// Expands f4*f1^2 - (f3^2 - 4*f2^3). When the residual is nonzero, it is
/// reduced modulo a^2 + a - 1 and the outcome recorded in mode.
IdentityCheck verify_pencil_identity(const CurvePresets& c = CurvePresets::published());
/// Same with a specialized to a rational value before expanding.
IdentityCheck verify_pencil_identity_at(const mpq_class& a, const CurvePresets& c = CurvePresets::published());

/// Reduces a polynomial in a modulo a^2 + a - 1 (degree in a at most 1).
MultiPoly reduce_golden(const MultiPoly& p);

struct ParametrizationCheck {
  bool holds = false;
  /// f4 composed with the parametrization, in t, s.
  MultiPoly residual{param_variables()};
};

ParametrizationCheck verify_parametrization(const CurvePresets& c = CurvePresets::published());

/// Sets z = 1 and converts to a polynomial in y over Q[x].
BiPoly affine_xy(const MultiPoly& f);

struct DiscriminantReport {
  UniPoly discriminant;
  /// Monic squarefree factors with their multiplicities.
  std::vector<std::pair<UniPoly, int>> factors;
  UniPoly expected;
  /// c with discriminant = c * expected.
  std::optional<mpq_class> constant;
  bool proportional() const { return constant.has_value() && *constant != 0; }
  std::vector<int> multiplicity_pattern() const;
};

/// Squarefree factors of p with multiplicities.
std::vector<std::pair<UniPoly, int>> squarefree_factors(const UniPoly& p);

/// Res_y(f, df/dy) of f at z = 1 compared with expected.
DiscriminantReport discriminant_report(const MultiPoly& f, const UniPoly& expected);
/// The Degtyarev sextic against x*(x^2 - 11*x - 1)^5.
DiscriminantReport degtyarev_discriminant(const CurvePresets& c = CurvePresets::published());

struct SingularPoint {
  long milnor = 1;
  long multiplicity = 1;
};

/// d(d-1) - sum(mu - 1 + m). Throws InvalidArgument on d, mu or m below 1 or
/// a negative result.
long plucker_dual_degree(long degree, const std::vector<SingularPoint>& singular);

}  // namespace meridian
