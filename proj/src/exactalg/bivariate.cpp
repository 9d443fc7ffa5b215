#include "meridian/exactalg/bivariate.hpp"

#include "meridian/error.hpp"

namespace meridian {

BiPoly::BiPoly(std::vector<UniPoly> coefficients) : c_(std::move(coefficients)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<UniPoly> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

BiPoly BiPoly::derivative_y() const {
  if (c_.size() <= 1) return {};
  std::vector<UniPoly> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
  return BiPoly(std::move(d));
}

UniPoly BiPoly::at_x(const mpq_class& t) const {
  std::vector<mpq_class> v;
  for (const auto& c : c_) v.push_back(c.evaluate(t));
  return UniPoly(std::move(v));
}

UniPoly determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(1);
  for (const auto& r : m)
    if (r.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return {};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("resultant of a zero polynomial");
  const std::size_t m = static_cast<std::size_t>(f.degree_y());
  const std::size_t n = static_cast<std::size_t>(g.degree_y());
  const std::size_t size = m + n;
  if (size == 0) return UniPoly::constant(1);
  std::vector<std::vector<UniPoly>> s(size, std::vector<UniPoly>(size));
  // Coefficients in descending powers of y along each row.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f.coefficient(m - i);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g.coefficient(n - i);
  return determinant(std::move(s));
}

UniPoly discriminant_y(const BiPoly& f) { return resultant_y(f, f.derivative_y()); }

}  // namespace meridian
