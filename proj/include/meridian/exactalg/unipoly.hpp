#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace meridian {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<mpq_class> coefficients);
  UniPoly(std::initializer_list<long> coefficients);

  static UniPoly constant(const mpq_class& c);
  static UniPoly monomial(const mpq_class& c, std::size_t degree);
  static UniPoly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<mpq_class>& coefficients() const noexcept { return c_; }
  mpq_class coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  /// Leading coefficient; throws InvalidArgument for zero.
  const mpq_class& leading() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const mpq_class& k);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const mpq_class& k) { return a *= k; }
  UniPoly operator-() const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
  /// Exact quotient; throws InvalidArgument when b does not divide a.
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b);

  UniPoly pow(unsigned long n) const;
  mpq_class evaluate(const mpq_class& t) const;
  UniPoly derivative() const;
  /// Scaled to leading coefficient 1 (zero stays zero).
  UniPoly monic() const;
  /// Positive rational multiple with coprime integer coefficients and
  /// positive leading coefficient.
  UniPoly primitive() const;

  /// Descending powers: "x^4 - x^3 + x^2 - x + 1", "0" for zero.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Monic gcd (zero when both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// s*a + t*b = gcd(a, b), gcd monic.
struct Bezout {
  UniPoly gcd, s, t;
};
Bezout extended_gcd(const UniPoly& a, const UniPoly& b);

/// Yun's squarefree decomposition of a nonzero polynomial: returns monic
/// squarefree, pairwise coprime a_1..a_k with p = c * prod a_i^i.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// The rational c with a = c * b, if any (both zero gives 1).
std::optional<mpq_class> proportionality(const UniPoly& a, const UniPoly& b);

/// Phi_N, computed from x^N - 1 divided by Phi_d for the proper divisors d.
/// Throws InvalidArgument for N < 1.
UniPoly cyclotomic_polynomial(long n);

/// Euler phi.
long euler_phi(long n);

}  // namespace meridian
