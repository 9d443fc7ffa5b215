#include "meridian/exactalg/unipoly.hpp"

#include <map>
#include <mutex>

#include "meridian/error.hpp"

namespace meridian {

UniPoly::UniPoly(std::vector<mpq_class> coefficients) : c_(std::move(coefficients)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

UniPoly::UniPoly(std::initializer_list<long> coefficients) {
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

UniPoly UniPoly::constant(const mpq_class& c) { return UniPoly(std::vector<mpq_class>{c}); }

UniPoly UniPoly::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1, 0);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& UniPoly::leading() const {
  if (c_.empty()) throw InvalidArgument("the zero polynomial has no leading coefficient");
  return c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const mpq_class& k) {
  for (auto& q : c_) q *= k;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  UniPoly r = a;
  if (r.degree() < b.degree()) return {UniPoly(), r};
  std::vector<mpq_class> q(static_cast<std::size_t>(r.degree() - b.degree() + 1), 0);
  const mpq_class lead = b.leading();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree()) - db;
    const mpq_class k = r.leading() / lead;
    q[shift] = k;
    for (std::size_t i = 0; i <= db; ++i) r.c_[i + shift] -= k * b.c_[i];
    r.c_.back() = 0;  // exact cancellation of the leading term
    r.trim();
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = UniPoly::divmod(a, b);
  if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return q;
}

UniPoly UniPoly::pow(unsigned long n) const {
  UniPoly r = constant(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

mpq_class UniPoly::evaluate(const mpq_class& t) const {
  mpq_class v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
  return v;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  const mpq_class inv = 1 / leading();
  r *= inv;
  return r;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den = 1, num = 0;
  for (const auto& q : c_) {
    den = lcm(den, mpz_class(q.get_den()));
    num = gcd(num, mpz_class(q.get_num()));
  }
  UniPoly r = *this;
  mpq_class k(den, num);
  k.canonicalize();
  if (r.leading() < 0) k = -k;
  r *= k;
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpq_class& q = c_[i];
    if (q == 0) continue;
    const bool neg = q < 0;
    const mpq_class a = neg ? mpq_class(-q) : q;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    const bool unit = (a == 1);
    if (!unit || i == 0) {
      const std::string s = a.get_str();
      out += (s.find('/') != std::string::npos && i > 0) ? "(" + s + ")" : s;
      if (i > 0) out += "*";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = UniPoly::divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const mpq_class k = 1 / r0.leading();
  return {r0 * k, s0 * k, t0 * k};
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree decomposition of zero");
  std::vector<UniPoly> out;
  if (p.degree() == 0) return out;
  const UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = p / a;
  UniPoly c = dp / a;
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    out.push_back(g.monic());
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

std::optional<mpq_class> proportionality(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return mpq_class(1);
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return std::nullopt;
  const mpq_class c = a.leading() / b.leading();
  if (a == b * c) return c;
  return std::nullopt;
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

UniPoly cyclotomic_polynomial(long n) {
  if (n < 1) throw InvalidArgument("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<long, UniPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  UniPoly p = UniPoly::monomial(1, static_cast<std::size_t>(n)) - UniPoly::constant(1);
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = p / cyclotomic_polynomial(d);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

}  // namespace meridian
