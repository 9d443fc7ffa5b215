#include "meridian/abelian/abelian.hpp"

#include <algorithm>
#include <map>

#include "meridian/error.hpp"

namespace meridian {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shapes do not match");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

namespace {

class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& m)
      : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t r = a_.rows(), c = a_.cols();
    const std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
      if (!place_pivot(t)) break;
      while (true) {
        clear_cross(t);
        // Divisibility: fold a row holding an entry not divisible by the pivot.
        std::optional<std::size_t> bad;
        for (std::size_t i = t + 1; i < r && !bad; ++i)
          for (std::size_t j = t + 1; j < c; ++j)
            if (a_(i, j) % a_(t, t) != 0) {
              bad = i;
              break;
            }
        if (!bad) break;
        add_row(t, *bad, 1);
      }
      if (a_(t, t) < 0) negate_row(t);
    }
    SmithForm f;
    for (std::size_t t = 0; t < n; ++t) f.diagonal.push_back(a_(t, t));
    f.U = std::move(u_);
    f.V = std::move(v_);
    return f;
  }

 private:
  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j)
        if (a_(i, j) != 0 &&
            (!best || abs(a_(i, j)) < abs(a_(best->first, best->second))))
          best = {{i, j}};
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void clear_cross(std::size_t t) {
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (a_(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (a_(t, j) != 0) dirty = true;
      }
      if (!dirty) return;
      place_pivot(t);
    }
  }

  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(dst, j) += k * a_(src, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += k * u_(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, dst) += k * a_(i, src);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) += k * v_(i, src);
  }
  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(x, j), a_(y, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(x, j), u_(y, j));
  }
  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, x), a_(i, y));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, x), v_(i, y));
  }
  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(t, j) = -a_(t, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) = -u_(t, j);
  }

  IntMatrix a_, u_, v_;
};

mpz_class mod_nonneg(const mpz_class& a, const mpz_class& d) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return SmithWorker(m).run(); }

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), static_cast<std::size_t>(p.generator_count()));
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (int l : p.relators()[i]) m(i, static_cast<std::size_t>(std::abs(l) - 1)) += l > 0 ? 1 : -1;
  return m;
}

mpz_class AbelianGroup::coordinate_order(std::size_t j) const {
  return j < torsion.size() ? torsion[j] : mpz_class(0);
}

std::optional<mpz_class> AbelianGroup::order() const {
  if (rank > 0) return std::nullopt;
  mpz_class n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::optional<mpz_class> AbelianGroup::exponent() const {
  if (rank > 0) return std::nullopt;
  return torsion.empty() ? mpz_class(1) : torsion.back();
}

bool AbelianGroup::is_cyclic() const noexcept {
  return coordinate_count() <= 1;
}

std::vector<mpz_class> AbelianGroup::reduce(std::vector<mpz_class> v) const {
  for (std::size_t j = 0; j < torsion.size(); ++j) v[j] = mod_nonneg(v[j], torsion[j]);
  return v;
}

std::vector<mpz_class> AbelianGroup::image(const Word& w) const {
  std::vector<mpz_class> v(coordinate_count(), 0);
  for (int l : w) {
    const auto& g = gen_images.at(static_cast<std::size_t>(std::abs(l) - 1));
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += l > 0 ? g[j] : mpz_class(-g[j]);
  }
  return reduce(std::move(v));
}

std::string AbelianGroup::to_string() const {
  std::string out;
  if (rank == 1) out = "Z";
  else if (rank > 1) out = "Z^" + std::to_string(rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " x ";
    out += "Z/" + d.get_str();
  }
  return out.empty() ? "0" : out;
}

AbelianGroup abelianization(const Presentation& p) {
  const std::size_t n = static_cast<std::size_t>(p.generator_count());
  const SmithForm f = smith_normal_form(exponent_matrix(p));
  AbelianGroup a;
  // Coordinate j of Z^n / rowspace(D) is torsion (d_j > 1), trivial
  // (d_j = 1) or free (d_j = 0 or beyond the diagonal).
  std::vector<std::size_t> torsion_cols, free_cols;
  for (std::size_t j = 0; j < n; ++j) {
    const mpz_class d = j < f.diagonal.size() ? f.diagonal[j] : mpz_class(0);
    if (d == 0) free_cols.push_back(j);
    else if (d > 1) {
      torsion_cols.push_back(j);
      a.torsion.push_back(d);
    }
  }
  a.rank = static_cast<int>(free_cols.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> img;
    for (std::size_t j : torsion_cols) img.push_back(f.V(i, j));
    for (std::size_t j : free_cols) img.push_back(f.V(i, j));
    a.gen_images.push_back(a.reduce(std::move(img)));
  }
  return a;
}

AbelianGroup abelian_group(int rank, const std::vector<mpz_class>& factors) {
  IntMatrix m(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) m(i, i) = factors[i];
  AbelianGroup a;
  a.rank = rank;
  for (const auto& d : smith_normal_form(m).diagonal) {
    if (d == 0) ++a.rank;
    else if (d > 1) a.torsion.push_back(d);
  }
  return a;
}

namespace {

// prime -> exponents of that prime in each invariant factor
std::map<mpz_class, std::vector<unsigned long>> primary_parts(const std::vector<mpz_class>& torsion) {
  std::map<mpz_class, std::vector<unsigned long>> out;
  for (mpz_class d : torsion) {
    for (mpz_class p = 2; p * p <= d; ++p) {
      unsigned long e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      if (e) out[p].push_back(e);
    }
    if (d > 1) out[d].push_back(1);
  }
  return out;
}

}  // namespace

bool admits_surjection(const AbelianGroup& source, const AbelianGroup& target) {
  if (target.rank > source.rank) return false;
  if (target.rank > 0) {
    // Z^s x T' onto Z^t x T: peel the free part first.
    AbelianGroup s = source, t = target;
    s.rank -= t.rank;
    t.rank = 0;
    return admits_surjection(s, t);
  }
  const auto src = primary_parts(source.torsion);
  for (const auto& [p, parts] : primary_parts(target.torsion)) {
    // B_p is a quotient iff for each k the parts >= k of B_p are at most
    // those of A_p plus the free rank.
    const unsigned long top = *std::max_element(parts.begin(), parts.end());
    const auto it = src.find(p);
    for (unsigned long k = 1; k <= top; ++k) {
      const auto need = std::count_if(parts.begin(), parts.end(), [&](unsigned long e) { return e >= k; });
      long have = source.rank;
      if (it != src.end())
        have += std::count_if(it->second.begin(), it->second.end(), [&](unsigned long e) { return e >= k; });
      if (need > have) return false;
    }
  }
  return true;
}

bool Character::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](long e) { return e == 0; });
}

std::vector<Character> characters_of_order_dividing(const AbelianGroup& a, long n) {
  if (n < 1) throw InvalidArgument("character modulus must be positive");
  const std::size_t k = a.coordinate_count();
  // Allowed exponents per coordinate: multiples of step below n.
  std::vector<long> step(k);
  for (std::size_t j = 0; j < k; ++j) {
    const mpz_class d = a.coordinate_order(j);
    if (d == 0) {
      step[j] = 1;
    } else {
      mpz_class g;
      mpz_gcd_ui(g.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
      step[j] = n / g.get_si();
    }
  }
  std::vector<Character> out;
  std::vector<long> e(k, 0);
  while (true) {
    out.push_back(Character{n, e, false});
    std::size_t j = k;
    while (j > 0) {
      --j;
      e[j] += step[j];
      if (e[j] < n) break;
      e[j] = 0;
      if (j == 0) return out;
    }
    if (k == 0) return out;
  }
}

long character_value(const Character& chi, const AbelianGroup& a, int generator) {
  const auto& img = a.gen_images.at(static_cast<std::size_t>(generator - 1));
  if (chi.exponents.size() != img.size())
    throw InvalidArgument("character does not match the abelian group");
  mpz_class s = 0;
  for (std::size_t j = 0; j < img.size(); ++j) {
    if (chi.symbolic_free && j >= a.torsion.size()) continue;
    s += img[j] * chi.exponents[j];
  }
  return mod_nonneg(s, chi.modulus).get_si();
}

}  // namespace meridian
