#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace meridian {

using Exponents = std::vector<int>;

/// Graded lexicographic: total degree first, then lexicographic in the
/// variable order. Larger terms come first when iterating.
struct GrLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over Q in named variables. Zero coefficients are never
/// stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, mpq_class, GrLexGreater>;

  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const mpq_class& c);
  /// Throws InvalidArgument for an unknown name.
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t index_of(const std::string& name) const;

  /// -1 for zero.
  int total_degree() const;
  /// Largest total degree in the given subset of variables.
  int degree_in(const std::vector<std::string>& names) const;
  int degree_in(const std::string& name) const { return degree_in(std::vector<std::string>{name}); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const mpq_class& k);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const mpq_class& k) { return a *= k; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned n) const;

  /// Replaces variable i by images[i]; all images must share one ring.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  /// Substitutes a rational value for one variable, keeping the ring.
  MultiPoly substitute(const std::string& name, const mpq_class& value) const;
  mpq_class evaluate(const std::vector<mpq_class>& point) const;

  /// "x^2*y - 3/2*x*z + 1", "0" for zero.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const mpq_class& c);
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Parses + - * ^ with parentheses, integer and p/q constants, and the given
/// variable names. Juxtaposition multiplies. Throws ParseError.
MultiPoly parse_multipoly(std::string_view text, const std::vector<std::string>& variables);

}  // namespace meridian
