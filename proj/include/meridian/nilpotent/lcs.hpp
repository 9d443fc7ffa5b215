#pragma once

#include <string>
#include <vector>

#include "meridian/abelian/abelian.hpp"
#include "meridian/fpgroups/presentation.hpp"

namespace meridian {

/// Witt number: rank of degree d of the free Lie ring on n generators
/// (d <= 3; larger degrees throw LimitExceeded).
long free_lie_ranks(long n, int d);

/// Abelian invariants of gamma_d / gamma_{d+1} for d = 1..max_class.
struct GradedQuotient {
  std::vector<AbelianGroup> degrees;

  const AbelianGroup& degree(int d) const { return degrees.at(static_cast<std::size_t>(d - 1)); }
  /// One line per degree: "gamma_2/gamma_3 = Z^5".
  std::vector<std::string> lines() const;
};

/// Graded quotients of the lower central series of G / gamma_4(G), computed
/// inside the free class-3 nilpotent group on the generators. Throws
/// LimitExceeded for max_class > 3.
GradedQuotient lcs_quotients(const Presentation& p, int max_class = 3);

}  // namespace meridian
