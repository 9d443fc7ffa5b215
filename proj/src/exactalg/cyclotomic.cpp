#include "meridian/exactalg/cyclotomic.hpp"

#include "meridian/error.hpp"

namespace meridian {

CyclotomicField::CyclotomicField(long modulus) : n_(modulus), phi_(cyclotomic_polynomial(modulus)) {}

FieldPtr cyclotomic_field(long modulus) { return std::make_shared<const CyclotomicField>(modulus); }

CycloNumber::CycloNumber(FieldPtr field, UniPoly representative)
    : field_(std::move(field)), rep_(std::move(representative)) {
  if (!field_) throw InvalidArgument("cyclotomic number without a field");
  if (rep_.degree() >= field_->degree()) rep_ = rep_ % field_->minimal_polynomial();
}

CycloNumber::CycloNumber(FieldPtr field, const mpq_class& value)
    : CycloNumber(std::move(field), UniPoly::constant(value)) {}

CycloNumber CycloNumber::zeta(FieldPtr field) { return CycloNumber(std::move(field), UniPoly::x()); }

void CycloNumber::check_same(const CycloNumber& o) const {
  if (field_ != o.field_ && field_->modulus() != o.field_->modulus())
    throw InvalidArgument("cyclotomic numbers from different fields");
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  check_same(o);
  rep_ += o.rep_;
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  check_same(o);
  rep_ -= o.rep_;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  check_same(o);
  rep_ *= o.rep_;
  if (rep_.degree() >= field_->degree()) rep_ = rep_ % field_->minimal_polynomial();
  return *this;
}

CycloNumber CycloNumber::operator-() const { return CycloNumber(field_, -rep_); }

CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * cyclo_invert(b); }

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  return a.modulus() == b.modulus() && a.rep_ == b.rep_;
}

CycloNumber CycloNumber::pow(long e) const {
  CycloNumber base = e < 0 ? cyclo_invert(*this) : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycloNumber r(field_, mpq_class(1));
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

CycloNumber CycloNumber::galois(long k) const {
  const long n = modulus();
  k %= n;
  if (k < 0) k += n;
  CycloNumber z = zeta(field_).pow(k);
  CycloNumber r(field_, mpq_class(0));
  CycloNumber zp(field_, mpq_class(1));
  for (const auto& c : rep_.coefficients()) {
    r += CycloNumber(field_, c) * zp;
    zp *= z;
  }
  return r;
}

std::string CycloNumber::to_string(const std::string& var) const { return rep_.to_string(var); }

CycloNumber cyclo_invert(const CycloNumber& a) {
  if (a.is_zero()) throw DivisionByZero();
  const Bezout b = extended_gcd(a.representative(), a.field()->minimal_polynomial());
  // Phi_N is irreducible, so the gcd with a nonzero residue is 1.
  return CycloNumber(a.field(), b.s);
}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, CycloNumber(field, mpq_class(0))) {}

FieldMatrix::FieldMatrix(FieldPtr field, std::vector<std::vector<CycloNumber>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  for (auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix");
    for (auto& x : r) {
      if (x.modulus() != field_->modulus()) throw InvalidArgument("matrix entries from different fields");
      e_.push_back(std::move(x));
    }
  }
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t matrix_rank(const FieldMatrix& m) {
  FieldMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(rank, j));
    const CycloNumber p = a(rank, col);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const CycloNumber f = a(i, col);
      // row_i <- p*row_i - f*row_rank: no division needed.
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = p * a(i, j) - f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace meridian
