#pragma once

#include <string>
#include <vector>

#include "meridian/exactalg/unipoly.hpp"

namespace meridian {

/// Polynomial in y whose coefficients are UniPolys in x; entry i multiplies y^i.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> coefficients);

  long degree_y() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<UniPoly>& coefficients() const noexcept { return c_; }
  UniPoly coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : UniPoly(); }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly derivative_y() const;
  /// Substitutes x = t.
  UniPoly at_x(const mpq_class& t) const;

 private:
  void trim();
  std::vector<UniPoly> c_;
};

/// Sylvester determinant in y (f's rows first), by Bareiss elimination over
/// Q[x]. Throws InvalidArgument when either input is zero.
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);

/// Res_y(f, df/dy).
UniPoly discriminant_y(const BiPoly& f);

/// Determinant of a square matrix over Q[x] (Bareiss).
UniPoly determinant(std::vector<std::vector<UniPoly>> m);

}  // namespace meridian
