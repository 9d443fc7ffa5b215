#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meridian/charvar/fox.hpp"

namespace meridian {

/// Depth of one character of a finite torus.
struct CharacterDepth {
  Character character;
  /// Order of the character in the dual group.
  long order = 1;
  std::size_t depth = 0;
};

/// Zero locus of one Fitting level in rank-one mode, away from t = 1.
struct FittingLevel {
  std::size_t k = 0;
  /// Monic gcd of the minors (zero when every minor vanishes).
  UniPoly gcd;
  /// Cyclotomic orders N (with multiplicity) dividing the gcd; N = 1 included.
  std::vector<std::pair<long, int>> cyclotomic;
  /// What is left after removing the cyclotomic and t factors.
  UniPoly residual;
  bool contains_one = false;
  bool whole_torus() const { return gcd.is_zero(); }
  bool empty() const;
};

struct CharVariety {
  enum class Mode { finite_torus, rank_one };
  Mode mode = Mode::finite_torus;
  AbelianGroup torus;

  // finite_torus
  long modulus = 1;
  std::vector<CharacterDepth> characters;

  // rank_one: levels k = 1, 2, ... up to and including the first empty one
  std::vector<FittingLevel> levels;

  /// Largest k with V_k nonempty.
  std::size_t max_depth() const;
  /// Description of V_k, e.g. "{1} ∪ μ10-primitive" or "∅".
  std::string describe(std::size_t k) const;
  /// "V1 = V2 = μ10-primitive", "V3 = ∅": equal consecutive levels merged,
  /// ending with the first empty level.
  std::vector<std::string> summary() const;
};

/// Depths of all characters of the finite torus (values in mu_N, N the
/// exponent). Throws WrongMode for infinite abelianization.
CharVariety charvar_finite_torus(const Presentation& p);

/// Rank-one mode via Fitting ideals of the Alexander matrix. Throws WrongMode
/// unless the abelianization is Z.
CharVariety charvar_rank_one(const Presentation& p, long cyclotomic_bound = 200);

/// Depth at t = zeta_N^e computed from the Fitting data.
std::size_t rank_one_depth(const CharVariety& v, long n, long e);

/// Order of zeta_N^e.
long root_order(long n, long e);

}  // namespace meridian
