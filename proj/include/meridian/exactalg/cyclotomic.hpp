#pragma once

#include <memory>
#include <string>
#include <vector>

#include "meridian/exactalg/unipoly.hpp"

namespace meridian {

/// Q(zeta_N) realised as Q[x]/Phi_N.
class CyclotomicField {
 public:
  explicit CyclotomicField(long modulus);
  long modulus() const noexcept { return n_; }
  long degree() const noexcept { return phi_.degree(); }
  const UniPoly& minimal_polynomial() const noexcept { return phi_; }

 private:
  long n_;
  UniPoly phi_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;
FieldPtr cyclotomic_field(long modulus);

/// Element of Q(zeta_N), stored reduced mod Phi_N.
class CycloNumber {
 public:
  CycloNumber(FieldPtr field, UniPoly representative);
  CycloNumber(FieldPtr field, const mpq_class& value);

  static CycloNumber zeta(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  long modulus() const noexcept { return field_->modulus(); }
  const UniPoly& representative() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_one() const { return rep_ == UniPoly::constant(1); }

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  CycloNumber operator-() const;
  /// Throws DivisionByZero for b = 0.
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b);
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  /// Negative exponents invert.
  CycloNumber pow(long e) const;
  /// Image of the representative under x -> x^k (a Galois conjugate when
  /// gcd(k, N) = 1; k = -1 gives complex conjugation).
  CycloNumber galois(long k) const;

  /// Polynomial in zeta, e.g. "-zeta^4".
  std::string to_string(const std::string& var = "zeta") const;

 private:
  void check_same(const CycloNumber& o) const;
  FieldPtr field_;
  UniPoly rep_;
};

/// Inverse via extended Euclid of the representative and Phi_N.
CycloNumber cyclo_invert(const CycloNumber& a);

class FieldMatrix {
 public:
  /// Zero matrix.
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  FieldMatrix(FieldPtr field, std::vector<std::vector<CycloNumber>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }
  CycloNumber& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const CycloNumber& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  FieldMatrix transpose() const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<CycloNumber> e_;
};

/// Exact rank by fraction-free elimination, first nonzero pivot in column order.
std::size_t matrix_rank(const FieldMatrix& m);

}  // namespace meridian
