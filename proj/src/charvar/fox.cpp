#include "meridian/charvar/fox.hpp"

#include "meridian/error.hpp"

namespace meridian {

FreeGroupRingElement fox_derivative_free(const Word& w, int k) {
  FreeGroupRingElement out;
  std::vector<int> prefix;
  auto add = [&](const std::vector<int>& letters, long c) {
    const Word u(letters);
    auto& slot = out[u];
    slot += c;
    if (slot == 0) out.erase(u);
  };
  for (int l : w) {
    if (l == k) {
      add(prefix, 1);
    } else if (l == -k) {
      std::vector<int> p = prefix;
      p.push_back(l);
      add(p, -1);
    }
    prefix.push_back(l);
  }
  return out;
}

LaurentPoly LaurentPoly::monomial(std::vector<long> exponents, const mpz_class& c) {
  LaurentPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t variables, const mpz_class& c) {
  return monomial(std::vector<long>(variables, 0), c);
}

void LaurentPoly::add_term(const std::vector<long>& e, const mpz_class& c) {
  if (c == 0) return;
  auto& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.vars_ != vars_) throw InvalidArgument("Laurent polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.vars_ != vars_) throw InvalidArgument("Laurent polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ != b.vars_) throw InvalidArgument("Laurent polynomials in different rings");
  LaurentPoly r(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<long> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

CycloNumber LaurentPoly::evaluate(const FieldPtr& field, const std::vector<long>& values) const {
  if (values.size() != vars_) throw InvalidArgument("wrong number of values for evaluation");
  const long n = field->modulus();
  std::vector<mpq_class> acc(static_cast<std::size_t>(n), 0);
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (std::size_t i = 0; i < vars_; ++i) s = (s + (e[i] % n) * (values[i] % n)) % n;
    if (s < 0) s += n;
    acc[static_cast<std::size_t>(s)] += c;
  }
  return CycloNumber(field, UniPoly(std::move(acc)));
}

UniPoly LaurentPoly::to_unipoly(long* shift) const {
  if (vars_ != 1) throw InvalidArgument("not a one-variable Laurent polynomial");
  long lo = 0;
  if (!terms_.empty()) lo = terms_.begin()->first[0];
  std::vector<mpq_class> c;
  for (const auto& [e, v] : terms_) {
    const std::size_t i = static_cast<std::size_t>(e[0] - lo);
    if (c.size() <= i) c.resize(i + 1, 0);
    c[i] = v;
  }
  if (shift) *shift = -lo;
  return UniPoly(std::move(c));
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const bool neg = c < 0;
    const mpz_class a = neg ? mpz_class(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

LaurentPoly abelianize(const FreeGroupRingElement& e, const AbelianGroup& a) {
  LaurentPoly r(a.coordinate_count());
  for (const auto& [w, c] : e) {
    std::vector<long> ex(a.coordinate_count(), 0);
    for (int l : w) {
      const auto& img = a.gen_images.at(static_cast<std::size_t>(std::abs(l) - 1));
      for (std::size_t j = 0; j < ex.size(); ++j) ex[j] += (l > 0 ? 1 : -1) * img[j].get_si();
    }
    r += LaurentPoly::monomial(std::move(ex), c);
  }
  return r;
}

LaurentPoly fox_derivative(const Word& w, int k, const AbelianGroup& a) {
  return abelianize(fox_derivative_free(w, k), a);
}

FoxMatrix fox_matrix(const Presentation& p) { return fox_matrix(p, abelianization(p)); }

FoxMatrix fox_matrix(const Presentation& p, const AbelianGroup& a) {
  FoxMatrix m{a, {}};
  for (const Word& r : p.relators()) {
    std::vector<LaurentPoly> row;
    for (int k = 1; k <= p.generator_count(); ++k) row.push_back(fox_derivative(r, k, a));
    m.entries.push_back(std::move(row));
  }
  return m;
}

namespace {

void check_character(const AbelianGroup& a, const Character& chi) {
  if (chi.modulus < 1) throw InvalidArgument("character modulus must be positive");
  if (chi.symbolic_free) throw InvalidArgument("character has a symbolic free coordinate");
  if (chi.exponents.size() != a.coordinate_count())
    throw InvalidArgument("character does not match the abelianization");
  for (std::size_t j = 0; j < a.torsion.size(); ++j) {
    const mpz_class v = a.torsion[j] * chi.exponents[j];
    if (v % chi.modulus != 0)
      throw InvalidArgument("character value on a Z/" + a.torsion[j].get_str() + " factor is not a " +
                            a.torsion[j].get_str() + "-th root of unity");
  }
}

}  // namespace

TwistedComplex twisted_complex(const Presentation& p, const AbelianGroup& a, const Character& chi) {
  check_character(a, chi);
  const long n = chi.modulus;
  const FieldPtr field = cyclotomic_field(n);
  const int g = p.generator_count();
  std::vector<long> value(static_cast<std::size_t>(g) + 1, 0);
  for (int i = 1; i <= g; ++i) value[static_cast<std::size_t>(i)] = character_value(chi, a, i);

  TwistedComplex c{chi, field, {}, FieldMatrix(field, p.relators().size(), static_cast<std::size_t>(g))};
  for (int i = 1; i <= g; ++i)
    c.d1.push_back(CycloNumber::zeta(field).pow(value[static_cast<std::size_t>(i)]) - CycloNumber(field, mpq_class(1)));
  // Fox derivatives evaluated letter by letter: coefficient vectors indexed by
  // the exponent of zeta.
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    std::vector<std::vector<mpq_class>> acc(static_cast<std::size_t>(g), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
    long s = 0;
    for (int l : p.relators()[r]) {
      const std::size_t k = static_cast<std::size_t>(std::abs(l));
      const long v = value[k];
      if (l > 0) {
        acc[k - 1][static_cast<std::size_t>(s)] += 1;
        s = (s + v) % n;
      } else {
        s = ((s - v) % n + n) % n;
        acc[k - 1][static_cast<std::size_t>(s)] -= 1;
      }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) c.d2(r, k) = CycloNumber(field, UniPoly(std::move(acc[k])));
  }
  return c;
}

std::size_t twisted_h1_dim(const Presentation& p, const Character& chi) {
  return twisted_h1_dim(p, abelianization(p), chi);
}

std::size_t twisted_h1_dim(const Presentation& p, const AbelianGroup& a, const Character& chi) {
  const TwistedComplex c = twisted_complex(p, a, chi);
  std::size_t ker = c.d1.size();
  for (const auto& v : c.d1)
    if (!v.is_zero()) {
      --ker;
      break;
    }
  return ker - matrix_rank(c.d2);
}

}  // namespace meridian
