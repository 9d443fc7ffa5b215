#include "meridian/curves/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "meridian/error.hpp"
#include "text/scanner.hpp"

namespace meridian {

bool GrLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const mpq_class& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

std::size_t MultiPoly::index_of(const std::string& name) const {
  const auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw InvalidArgument("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
}

int MultiPoly::degree_in(const std::vector<std::string>& names) const {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(index_of(n));
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i : idx) d += e[i];
    best = std::max(best, d);
  }
  return best;
}

static void same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables()) throw InvalidArgument("polynomials live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  same_ring(a, b);
  MultiPoly r(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const mpq_class& k) {
  if (k == 0) terms_.clear();
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  return r *= -1;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly r = constant(vars_, 1), base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r *= base;
    if (n > 1) base *= base;
  }
  return r;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size()) throw InvalidArgument("need one image per variable");
  for (const auto& im : images) same_ring(im, images.front());
  const auto& ring = images.front().variables();
  // Powers of each image, built on demand.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(constant(ring, 1));
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * images[i]);
    return p[static_cast<std::size_t>(k)];
  };
  MultiPoly r(ring);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(ring, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= power(i, e[i]);
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::string& name, const mpq_class& value) const {
  const std::size_t k = index_of(name);
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    mpq_class v = c;
    for (int i = 0; i < e[k]; ++i) v *= value;
    f[k] = 0;
    r.add_term(f, v);
  }
  return r;
}

mpq_class MultiPoly::evaluate(const std::vector<mpq_class>& point) const {
  if (point.size() != vars_.size()) throw InvalidArgument("point has the wrong dimension");
  std::vector<mpq_class> pt = point;
  for (auto& v : pt) v.canonicalize();
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) t *= pt[i];
    sum += t;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const mpq_class a = abs(c);
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  MultiPoly run() {
    MultiPoly p = expr();
    if (!s_.at_end()) s_.fail("unexpected token");
    return p;
  }

 private:
  MultiPoly expr() {
    MultiPoly p = term();
    while (s_.at_punct('+') || s_.at_punct('-')) {
      const bool minus = s_.next().text == "-";
      if (minus) p -= term();
      else p += term();
    }
    return p;
  }

  bool starts_factor() const {
    const auto& t = s_.peek();
    return t.kind == text::TokenKind::identifier || t.kind == text::TokenKind::integer || s_.at_punct('(');
  }

  MultiPoly term() {
    MultiPoly p = unary();
    while (true) {
      if (s_.at_punct('*')) {
        s_.next();
        p *= unary();
      } else if (s_.at_punct('/')) {
        s_.next();
        const mpz_class d = integer();
        if (d == 0) s_.fail("division by zero");
        p *= mpq_class(1, d);
      } else if (starts_factor()) {
        p *= power();
      } else {
        return p;
      }
    }
  }

  MultiPoly unary() {
    if (s_.at_punct('-')) {
      s_.next();
      return -unary();
    }
    if (s_.at_punct('+')) {
      s_.next();
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (s_.at_punct('^')) {
      s_.next();
      const long n = s_.expect_integer();
      base = base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  MultiPoly primary() {
    const auto& t = s_.peek();
    if (t.kind == text::TokenKind::integer) return MultiPoly::constant(vars_, mpq_class(integer()));
    if (t.kind == text::TokenKind::identifier) {
      if (std::find(vars_.begin(), vars_.end(), t.text) == vars_.end()) s_.fail("unknown variable");
      return MultiPoly::variable(vars_, s_.next().text);
    }
    s_.expect_punct('(');
    MultiPoly p = expr();
    s_.expect_punct(')');
    return p;
  }

  mpz_class integer() {
    if (s_.peek().kind != text::TokenKind::integer) s_.fail("expected integer");
    return mpz_class(s_.next().text);
  }

  text::Scanner s_;
  const std::vector<std::string>& vars_;
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

}  // namespace meridian
