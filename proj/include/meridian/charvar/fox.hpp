#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "meridian/abelian/abelian.hpp"
#include "meridian/exactalg/cyclotomic.hpp"
#include "meridian/fpgroups/presentation.hpp"

namespace meridian {

/// Integer combination of free-group elements.
using FreeGroupRingElement = std::map<Word, mpz_class>;

/// Fox derivative d(w)/d(g_k) in the integral group ring of the free group.
FreeGroupRingElement fox_derivative_free(const Word& w, int k);

/// Laurent polynomial over Z in a fixed number of variables; a term is an
/// exponent vector with a nonzero coefficient.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t variables = 0) : vars_(variables) {}

  static LaurentPoly monomial(std::vector<long> exponents, const mpz_class& c = 1);
  static LaurentPoly constant(std::size_t variables, const mpz_class& c);

  std::size_t variables() const noexcept { return vars_; }
  const std::map<std::vector<long>, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Value with variable j set to zeta_N^values[j].
  CycloNumber evaluate(const FieldPtr& field, const std::vector<long>& values) const;
  /// Single-variable polynomial times the smallest power of t making it
  /// polynomial; the shift is returned through `shift` when given.
  UniPoly to_unipoly(long* shift = nullptr) const;

  /// E.g. "1 + x1^5" with variables named x1, x2, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const std::vector<long>& e, const mpz_class& c);
  std::size_t vars_;
  std::map<std::vector<long>, mpz_class> terms_;
};

/// Image of a group-ring element in Z[H_1] (canonical coordinates of `a`,
/// torsion exponents taken as integers in [0, d)).
LaurentPoly abelianize(const FreeGroupRingElement& e, const AbelianGroup& a);

/// Abelianized Fox derivative.
LaurentPoly fox_derivative(const Word& w, int k, const AbelianGroup& a);

/// Relators by generators, abelianized Fox derivatives.
struct FoxMatrix {
  AbelianGroup abelian;
  std::vector<std::vector<LaurentPoly>> entries;

  std::size_t rows() const noexcept { return entries.size(); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(abelian.gen_images.size()); }
};

FoxMatrix fox_matrix(const Presentation& p);
FoxMatrix fox_matrix(const Presentation& p, const AbelianGroup& a);

/// Differentials of the presentation complex twisted by a character.
struct TwistedComplex {
  Character character;
  FieldPtr field;
  /// Column of xi(g_i) - 1, one entry per generator.
  std::vector<CycloNumber> d1;
  /// Relators by generators.
  FieldMatrix d2;
};

/// Throws InvalidArgument when the character does not fit the abelianization
/// (wrong length, symbolic, or inconsistent with a torsion order).
TwistedComplex twisted_complex(const Presentation& p, const AbelianGroup& a, const Character& chi);

/// dim ker d1 - rank d2; at the trivial character this is the first Betti
/// number.
std::size_t twisted_h1_dim(const Presentation& p, const Character& chi);
std::size_t twisted_h1_dim(const Presentation& p, const AbelianGroup& a, const Character& chi);

}  // namespace meridian
