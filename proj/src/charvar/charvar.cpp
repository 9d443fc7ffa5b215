#include "meridian/charvar/charvar.hpp"

#include <map>
#include <numeric>

#include "meridian/error.hpp"
#include "meridian/exactalg/bivariate.hpp"

namespace meridian {

long root_order(long n, long e) {
  e %= n;
  if (e < 0) e += n;
  return n / std::gcd(n, e);
}

bool FittingLevel::empty() const {
  if (whole_torus() || contains_one) return false;
  for (const auto& [n, mult] : cyclotomic)
    if (n > 1) return false;
  return residual.degree() <= 0;
}

std::size_t CharVariety::max_depth() const {
  std::size_t d = 0;
  if (mode == Mode::finite_torus) {
    for (const auto& c : characters) d = std::max(d, c.depth);
  } else {
    for (const auto& l : levels)
      if (!l.empty()) d = std::max(d, l.k);
  }
  return d;
}

namespace {

std::string join_union(const std::vector<std::string>& parts) {
  if (parts.empty()) return "∅";
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ∪ ") + p;
  return s;
}

}  // namespace

std::string CharVariety::describe(std::size_t k) const {
  std::vector<std::string> parts;
  if (mode == Mode::finite_torus) {
    std::map<long, std::pair<std::size_t, std::size_t>> by_order;  // order -> (in V_k, total)
    for (const auto& c : characters) {
      auto& [hit, total] = by_order[c.order];
      ++total;
      if (c.depth >= k) ++hit;
    }
    const bool cyclic = torus.is_cyclic();
    for (const auto& [order, counts] : by_order) {
      if (counts.first == 0) continue;
      if (order == 1) {
        parts.push_back("{1}");
      } else if (cyclic && counts.first == counts.second) {
        parts.push_back("μ" + std::to_string(order) + "-primitive");
      } else {
        for (const auto& c : characters) {
          if (c.order != order || c.depth < k) continue;
          std::string s = "χ(";
          for (std::size_t j = 0; j < c.character.exponents.size(); ++j)
            s += (j ? "," : "") + std::to_string(c.character.exponents[j]);
          parts.push_back(s + ")/" + std::to_string(modulus));
        }
      }
    }
    return join_union(parts);
  }
  const FittingLevel* level = nullptr;
  for (const auto& l : levels)
    if (l.k == k) level = &l;
  if (!level) return "∅";
  if (level->whole_torus()) return "C*";
  if (level->contains_one) parts.push_back("{1}");
  for (const auto& [n, mult] : level->cyclotomic)
    if (n > 1) parts.push_back("μ" + std::to_string(n) + "-primitive");
  if (level->residual.degree() > 0) parts.push_back("roots of " + level->residual.to_string("t"));
  return join_union(parts);
}

std::vector<std::string> CharVariety::summary() const {
  std::vector<std::string> lines;
  const std::size_t top = max_depth() + 1;
  std::size_t k = 1;
  while (k <= top) {
    const std::string d = describe(k);
    std::string line = "V" + std::to_string(k);
    std::size_t j = k + 1;
    while (j <= top && describe(j) == d) {
      line += " = V" + std::to_string(j);
      ++j;
    }
    lines.push_back(line + " = " + d);
    k = j;
  }
  return lines;
}

CharVariety charvar_finite_torus(const Presentation& p) {
  const AbelianGroup a = abelianization(p);
  if (!a.is_finite())
    throw WrongMode("abelianization " + a.to_string() + " is infinite; use the rank-one mode");
  const long n = a.exponent()->get_si();
  CharVariety v;
  v.mode = CharVariety::Mode::finite_torus;
  v.torus = a;
  v.modulus = n;
  for (const Character& chi : characters_of_order_dividing(a, n)) {
    long order = 1;
    for (long e : chi.exponents) order = std::lcm(order, root_order(n, e));
    v.characters.push_back({chi, order, twisted_h1_dim(p, a, chi)});
  }
  return v;
}

namespace {

// Calls f on every size-s subset of {0..n-1}, in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t s, F&& f) {
  std::vector<std::size_t> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  if (s > n) return;
  while (true) {
    if (!f(idx)) return;
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

FittingLevel fitting_level(const std::vector<std::vector<UniPoly>>& m, std::size_t cols, std::size_t k,
                           long bound) {
  FittingLevel level;
  level.k = k;
  level.contains_one = (k <= 1);  // b1 = 1 in rank-one mode
  if (k >= cols) {
    level.gcd = UniPoly{1};
    level.residual = UniPoly{1};
    return level;
  }
  const std::size_t s = cols - k;
  UniPoly g;
  for_each_subset(m.size(), s, [&](const std::vector<std::size_t>& rows) {
    bool more = true;
    for_each_subset(cols, s, [&](const std::vector<std::size_t>& cs) {
      std::vector<std::vector<UniPoly>> minor(s, std::vector<UniPoly>(s));
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) minor[i][j] = m[rows[i]][cs[j]];
      g = gcd(g, determinant(std::move(minor)));
      more = !(g.degree() == 0);
      return more;
    });
    return more;
  });
  level.gcd = g;
  if (g.is_zero()) return level;
  UniPoly r = g;
  while (r.degree() > 0 && r.coefficient(0) == 0) r = r / UniPoly::x();
  for (long n = 1; n <= bound && r.degree() > 0; ++n) {
    const UniPoly phi = cyclotomic_polynomial(n);
    if (phi.degree() > r.degree()) continue;
    int mult = 0;
    while (r.degree() >= phi.degree() && (r % phi).is_zero()) {
      r = r / phi;
      ++mult;
    }
    if (mult) level.cyclotomic.emplace_back(n, mult);
  }
  level.residual = r.monic();
  return level;
}

}  // namespace

CharVariety charvar_rank_one(const Presentation& p, long cyclotomic_bound) {
  const AbelianGroup a = abelianization(p);
  if (a.rank != 1 || !a.torsion.empty())
    throw WrongMode("abelianization " + a.to_string() + " is not Z; the rank-one mode needs Z");
  const FoxMatrix fm = fox_matrix(p, a);
  // Alexander matrix over Q[t]; each row is shifted by a unit power of t.
  std::vector<std::vector<UniPoly>> m;
  for (const auto& row : fm.entries) {
    long lo = 0;
    bool any = false;
    for (const auto& e : row)
      if (!e.is_zero()) {
        const long first = e.terms().begin()->first[0];
        lo = any ? std::min(lo, first) : first;
        any = true;
      }
    std::vector<UniPoly> prow;
    for (const auto& e : row) {
      long shift = 0;
      UniPoly u = e.to_unipoly(&shift);
      const long first = e.is_zero() ? lo : -shift;
      prow.push_back(u * UniPoly::monomial(1, static_cast<std::size_t>(first - lo)));
    }
    m.push_back(std::move(prow));
  }
  CharVariety v;
  v.mode = CharVariety::Mode::rank_one;
  v.torus = a;
  const std::size_t cols = static_cast<std::size_t>(p.generator_count());
  for (std::size_t k = 1;; ++k) {
    v.levels.push_back(fitting_level(m, cols, k, cyclotomic_bound));
    if (v.levels.back().empty()) break;
  }
  return v;
}

std::size_t rank_one_depth(const CharVariety& v, long n, long e) {
  if (v.mode != CharVariety::Mode::rank_one) throw WrongMode("not a rank-one characteristic variety");
  const long order = root_order(n, e);
  if (order == 1) return 1;
  const UniPoly phi = cyclotomic_polynomial(order);
  std::size_t depth = 0;
  for (const auto& l : v.levels)
    if (l.whole_torus() || (l.gcd % phi).is_zero()) depth = std::max(depth, l.k);
  return depth;
}

}  // namespace meridian
