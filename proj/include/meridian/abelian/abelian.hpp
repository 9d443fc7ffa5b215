#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "meridian/fpgroups/presentation.hpp"

namespace meridian {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// U * M * V = diag(diagonal), padded with zeros to the shape of M.
struct SmithForm {
  /// min(rows, cols) entries, nonnegative, each dividing the next nonzero one;
  /// zeros last.
  std::vector<mpz_class> diagonal;
  IntMatrix U;
  IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Relator-by-generator matrix of exponent sums.
IntMatrix exponent_matrix(const Presentation& p);

/// Z^rank x Z/torsion[0] x ... with torsion[i] | torsion[i+1], torsion[i] >= 2.
/// Canonical coordinates list the torsion factors first, then the free ones.
struct AbelianGroup {
  int rank = 0;
  std::vector<mpz_class> torsion;
  /// Per presentation generator, its coordinates; torsion entries reduced
  /// into [0, d).
  std::vector<std::vector<mpz_class>> gen_images;

  std::size_t coordinate_count() const noexcept { return torsion.size() + static_cast<std::size_t>(rank); }
  /// Order of coordinate j, 0 for a free coordinate.
  mpz_class coordinate_order(std::size_t j) const;
  bool is_finite() const noexcept { return rank == 0; }
  /// Group order; nullopt when infinite.
  std::optional<mpz_class> order() const;
  /// Least common multiple of the torsion (1 for the trivial group);
  /// nullopt when infinite.
  std::optional<mpz_class> exponent() const;
  bool is_cyclic() const noexcept;

  /// Image of a word under the abelianization map, reduced.
  std::vector<mpz_class> image(const Word& w) const;
  std::vector<mpz_class> reduce(std::vector<mpz_class> v) const;

  /// "Z^r x Z/d1 x Z/d2", "Z" for rank one, "0" for the trivial group.
  std::string to_string() const;

  /// Rank and torsion only.
  bool same_invariants(const AbelianGroup& other) const {
    return rank == other.rank && torsion == other.torsion;
  }
};

AbelianGroup abelianization(const Presentation& p);

/// Group with the given invariants and no generator images; factors are
/// normalized to the divisibility chain (so {2, 5} becomes Z/10).
AbelianGroup abelian_group(int rank, const std::vector<mpz_class>& factors);

/// True iff `target` (finite) is a quotient of `source`.
bool admits_surjection(const AbelianGroup& source, const AbelianGroup& target);

/// Homomorphism to C^* sending canonical coordinate j to zeta_N^exponents[j].
/// In rank-one mode the free coordinate is the indeterminate t and
/// `symbolic_free` is set; its exponent entry is then 0.
struct Character {
  long modulus = 1;
  std::vector<long> exponents;
  bool symbolic_free = false;

  bool is_trivial() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// All characters with values in mu_N, in lexicographic order of exponent
/// vectors (trivial first).
std::vector<Character> characters_of_order_dividing(const AbelianGroup& a, long n);

/// Exponent e with chi(g) = zeta_N^e for presentation generator g (1-based);
/// ignores a symbolic free coordinate.
long character_value(const Character& chi, const AbelianGroup& a, int generator);

}  // namespace meridian
