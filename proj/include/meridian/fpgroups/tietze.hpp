#pragma once

#include <cstddef>

#include "meridian/fpgroups/presentation.hpp"

namespace meridian {

struct TietzeResult {
  Presentation presentation;
  /// True when the step budget ran out before no move applied; the
  /// presentation is then the best one reached so far.
  bool budget_exhausted = false;
  std::size_t steps = 0;
  std::size_t generators_eliminated = 0;
  std::size_t relators_removed = 0;
};

/// Greedy Tietze simplification. Moves, in order of preference:
///   - cyclic reduction, dropping identity and duplicate relators
///     (duplicates up to cyclic permutation and inversion);
///   - elimination of a generator occurring exactly once in some relator,
///     shortest such relator first, ties to the lowest generator index;
///   - shortening a relator by replacing a subword u with v^-1 where u*v is a
///     cyclic conjugate of another relator (or its inverse) and |u| > |v|.
/// An elimination is accepted only if it does not increase the total relator
/// length, so the total length never grows. Each accepted move costs one step.
TietzeResult tietze_simplify(const Presentation& p, std::size_t budget = 10000);

}  // namespace meridian
