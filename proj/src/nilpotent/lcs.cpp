#include "meridian/nilpotent/lcs.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>

#include "meridian/error.hpp"

namespace meridian {

long free_lie_ranks(long n, int d) {
  if (n < 1) throw InvalidArgument("need at least one generator");
  switch (d) {
    case 1: return n;
    case 2: return n * (n - 1) / 2;
    case 3: return (n * n * n - n) / 3;
    default: throw LimitExceeded("Lie ranks are only tabulated up to degree 3");
  }
}

std::vector<std::string> GradedQuotient::lines() const {
  std::vector<std::string> out;
  for (std::size_t d = 1; d <= degrees.size(); ++d)
    out.push_back("gamma_" + std::to_string(d) + "/gamma_" + std::to_string(d + 1) + " = " +
                  degrees[d - 1].to_string());
  return out;
}

namespace {

// Element of F/gamma_4(F) through the Magnus embedding x_i -> 1 + X_i into
// noncommutative power series truncated above degree 3. Storage: constant,
// then n linear, n^2 quadratic and n^3 cubic coefficients.
class Series {
 public:
  explicit Series(std::size_t n) : n_(n), c_(1 + n + n * n + n * n * n, 0) { c_[0] = 1; }

  static Series generator(std::size_t n, std::size_t i) {
    Series s(n);
    s.c_[1 + i] = 1;
    return s;
  }

  std::size_t n() const { return n_; }
  std::size_t off(int d) const {
    return d == 0 ? 0 : d == 1 ? 1 : d == 2 ? 1 + n_ : 1 + n_ + n_ * n_;
  }
  const mpz_class& lin(std::size_t i) const { return c_[1 + i]; }
  const mpz_class& quad(std::size_t i, std::size_t j) const { return c_[1 + n_ + i * n_ + j]; }
  const mpz_class& cub(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[1 + n_ + n_ * n_ + (i * n_ + j) * n_ + k];
  }

  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t n = a.n_;
    Series r(n);
    r.c_.assign(r.c_.size(), 0);
    const std::array<std::size_t, 4> size{1, n, n * n, n * n * n};
    for (int da = 0; da <= 3; ++da)
      for (int db = 0; da + db <= 3; ++db) {
        const std::size_t oa = a.off(da), ob = b.off(db), orr = r.off(da + db);
        const std::size_t sb = size[static_cast<std::size_t>(db)];
        for (std::size_t i = 0; i < size[static_cast<std::size_t>(da)]; ++i) {
          const mpz_class& x = a.c_[oa + i];
          if (x == 0) continue;
          for (std::size_t j = 0; j < sb; ++j) {
            const mpz_class& y = b.c_[ob + j];
            if (y != 0) r.c_[orr + i * sb + j] += x * y;
          }
        }
      }
    return r;
  }

  Series inverse() const {
    // (1 + U)^-1 = 1 - U + U^2 - U^3
    Series u = *this;
    u.c_[0] = 0;
    Series u2 = u * u, u3 = u2 * u;
    Series r(n_);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i] = -u.c_[i] + u2.c_[i] - u3.c_[i];
    return r;
  }

  Series pow(mpz_class e) const {
    Series base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    Series r(n_);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Series&) const = default;

 private:
  std::size_t n_;
  std::vector<mpz_class> c_;
};

Series commutator(const Series& a, const Series& b) { return a * b * a.inverse() * b.inverse(); }

// Mal'cev basis of F/gamma_4: a_i; b_ij = [a_i, a_j] (i > j); Hall basic
// c_ijk = [[a_i, a_j], a_k] (i > j, k >= j).
struct Basis {
  std::size_t n;
  std::vector<Series> a;
  std::vector<std::array<std::size_t, 2>> pairs;
  std::vector<Series> b;
  std::vector<std::array<std::size_t, 3>> triples;

  explicit Basis(std::size_t gens) : n(gens) {
    for (std::size_t i = 0; i < n; ++i) a.push_back(Series::generator(n, i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        pairs.push_back({i, j});
        b.push_back(commutator(a[i], a[j]));
      }
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t k = pairs[p][1]; k < n; ++k) triples.push_back({pairs[p][0], pairs[p][1], k});
  }

  std::size_t w2() const { return pairs.size(); }
  std::size_t w3() const { return triples.size(); }

  // Degree-1 coordinates.
  std::vector<mpz_class> coords1(const Series& s) const {
    std::vector<mpz_class> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = s.lin(i);
    return e;
  }

  // Coordinates in gamma_2 = Z^(w2 + w3) of an element with no linear part.
  // Modulo degree 4, b^f = 1 + f(b - 1) and products of such factors add, so
  // the cubic remainder is linear in the degree-2 coordinates.
  std::vector<mpz_class> coords2(const Series& s) const {
    std::vector<mpz_class> v(w2() + w3());
    for (std::size_t p = 0; p < w2(); ++p) v[p] = s.quad(pairs[p][0], pairs[p][1]);
    auto cubic = [&](std::size_t i, std::size_t j, std::size_t k) {
      mpz_class c = s.cub(i, j, k);
      for (std::size_t p = 0; p < w2(); ++p)
        if (v[p] != 0) c -= v[p] * b[p].cub(i, j, k);
      return c;
    };
    for (std::size_t q = 0; q < w3(); ++q) {
      const auto [i, j, k] = triples[q];
      v[w2() + q] = (k == j) ? cubic(i, j, j) : mpz_class(-cubic(j, i, k));
    }
    return v;
  }
};

// Integer row echelon form; returns the nonzero rows.
std::vector<std::vector<mpz_class>> echelon(std::vector<std::vector<mpz_class>> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col]))) piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[r], rows[piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const mpz_class q = rows[i][col] / rows[r][col];
        for (std::size_t j = col; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

// Eliminates generators that occur exactly once in some relator, cheapest
// first, even when relators grow (up to a total length cap). The result is
// isomorphic; fewer generators shrink the Mal'cev basis cubically.
Presentation eliminate_isolated(Presentation p, std::size_t length_cap) {
  while (true) {
    const auto& rels = p.relators();
    const std::size_t total = p.total_relator_length();
    std::size_t best_r = 0;
    int best_k = 0;
    long best_cost = 0;
    for (std::size_t ri = 0; ri < rels.size(); ++ri)
      for (int k = 1; k <= p.generator_count(); ++k) {
        if (rels[ri].occurrences(k) != 1) continue;
        long cost = -static_cast<long>(rels[ri].size());
        for (std::size_t rj = 0; rj < rels.size(); ++rj)
          if (rj != ri)
            cost += static_cast<long>(rels[rj].occurrences(k)) * (static_cast<long>(rels[ri].size()) - 2);
        if (best_k == 0 || cost < best_cost) {
          best_r = ri;
          best_k = k;
          best_cost = cost;
        }
      }
    if (best_k == 0 || static_cast<long>(total) + best_cost > static_cast<long>(length_cap)) return p;

    // Rotate the defining relator to g^e * t; then g = t^-e.
    const std::vector<int>& l = rels[best_r].letters();
    std::size_t pos = 0;
    while (std::abs(l[pos]) != best_k) ++pos;
    const int e = l[pos] > 0 ? 1 : -1;
    std::vector<int> t(l.begin() + static_cast<long>(pos) + 1, l.end());
    t.insert(t.end(), l.begin(), l.begin() + static_cast<long>(pos));
    const Word def = e > 0 ? Word(t).inverse() : Word(t);

    // Substitute, then renumber the remaining generators.
    const int n = p.generator_count();
    std::vector<Word> images;
    for (int k = 1; k <= n; ++k) {
      if (k == best_k) images.push_back(def);
      else images.push_back(Word{k < best_k ? k : k - 1});
    }
    std::vector<Word> fixed(images.size());
    for (int k = 1; k <= n; ++k)
      fixed[static_cast<std::size_t>(k - 1)] =
          k == best_k ? substitute(def, images) : images[static_cast<std::size_t>(k - 1)];
    std::vector<std::string> names;
    for (int k = 1; k <= n; ++k)
      if (k != best_k) names.push_back(p.generator_name(k));
    Presentation q(names, {});
    for (std::size_t rj = 0; rj < rels.size(); ++rj)
      if (rj != best_r) q.add_relator(substitute(rels[rj], fixed));
    p = std::move(q);
  }
}

AbelianGroup quotient(std::size_t dim, const std::vector<std::vector<mpz_class>>& lattice) {
  IntMatrix m(std::max<std::size_t>(lattice.size(), 1), dim);
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = lattice[i][j];
  int zeros = static_cast<int>(dim);
  std::vector<mpz_class> torsion;
  if (dim > 0)
    for (const auto& d : smith_normal_form(m).diagonal) {
      if (d == 0) continue;
      --zeros;
      if (d > 1) torsion.push_back(d);
    }
  return abelian_group(zeros, torsion);
}

}  // namespace

GradedQuotient lcs_quotients(const Presentation& input, int max_class) {
  if (max_class > 3) throw LimitExceeded("lower central series quotients are limited to class 3");
  if (max_class < 1) throw InvalidArgument("class must be at least 1");
  const Presentation p = eliminate_isolated(input, std::max<std::size_t>(4 * input.total_relator_length(), 2000));
  const std::size_t n = static_cast<std::size_t>(p.generator_count());
  GradedQuotient out;
  if (n == 0) {
    for (int d = 1; d <= max_class; ++d) out.degrees.push_back(abelian_group(0, {}));
    return out;
  }
  const Basis basis(n);
  const std::size_t dim2 = basis.w2() + basis.w3();

  // Block-1 echelon table of the normal closure; everything that sifts into
  // gamma_2 becomes a lattice vector there (gamma_2 of F/gamma_4 is abelian).
  std::vector<std::optional<Series>> table(n);
  std::vector<std::vector<mpz_class>> lattice;
  std::vector<Series> queue;
  for (const Word& r : p.relators()) {
    Series s(n);
    for (int l : r) s = s * (l > 0 ? basis.a[static_cast<std::size_t>(l - 1)] : basis.a[static_cast<std::size_t>(-l - 1)].inverse());
    queue.push_back(s);
  }
  auto on_insert = [&](const Series& t) {
    for (std::size_t k = 0; k < n; ++k) queue.push_back(commutator(t, basis.a[k]));
    for (const auto& u : table)
      if (u) queue.push_back(commutator(t, *u));
  };
  while (!queue.empty()) {
    Series g = queue.back();
    queue.pop_back();
    while (true) {
      const auto e = basis.coords1(g);
      std::size_t i = 0;
      while (i < n && e[i] == 0) ++i;
      if (i == n) {
        lattice.push_back(basis.coords2(g));
        break;
      }
      if (!table[i]) {
        if (e[i] < 0) g = g.inverse();
        table[i] = g;
        on_insert(g);
        break;
      }
      const mpz_class a = table[i]->lin(i), b = e[i];
      if (b % a == 0) {
        g = g * table[i]->pow(-(b / a));
        continue;
      }
      mpz_class d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Series old = *table[i];
      const Series h = old.pow(s) * g.pow(t);
      table[i] = h;
      on_insert(h);
      queue.push_back(old * h.pow(-(a / d)));
      g = g * h.pow(-(b / d));
    }
  }

  // Close the gamma_2 lattice under brackets with the generators; the bracket
  // [v, a_k] is central and depends linearly on the degree-2 part of v.
  std::vector<std::vector<std::vector<mpz_class>>> bracket(basis.w2());
  for (std::size_t q = 0; q < basis.w2(); ++q)
    for (std::size_t k = 0; k < n; ++k) bracket[q].push_back(basis.coords2(commutator(basis.b[q], basis.a[k])));
  lattice = echelon(std::move(lattice), dim2);
  const std::size_t base_rows = lattice.size();
  for (std::size_t r = 0; r < base_rows; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<mpz_class> v(dim2, 0);
      for (std::size_t q = 0; q < basis.w2(); ++q)
        if (lattice[r][q] != 0)
          for (std::size_t j = basis.w2(); j < dim2; ++j) v[j] += lattice[r][q] * bracket[q][k][j];
      lattice.push_back(std::move(v));
    }
  lattice = echelon(std::move(lattice), dim2);

  std::vector<std::vector<mpz_class>> l1, l2, l3;
  for (const auto& t : table)
    if (t) l1.push_back(basis.coords1(*t));
  for (const auto& v : lattice) {
    bool deg2 = false;
    for (std::size_t q = 0; q < basis.w2(); ++q) deg2 = deg2 || v[q] != 0;
    if (deg2) l2.emplace_back(v.begin(), v.begin() + static_cast<long>(basis.w2()));
    else l3.emplace_back(v.begin() + static_cast<long>(basis.w2()), v.end());
  }
  out.degrees.push_back(quotient(n, l1));
  if (max_class >= 2) out.degrees.push_back(quotient(basis.w2(), l2));
  if (max_class >= 3) out.degrees.push_back(quotient(basis.w3(), l3));
  return out;
}

}  // namespace meridian
