#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meridian/abelian/abelian.hpp"
#include "meridian/fpgroups/presentation.hpp"

namespace meridian {

struct OrbifoldSignature {
  int genus = 0;
  int punctures = 0;
  /// Sorted ascending, each >= 2.
  std::vector<long> multiplicities;

  /// Sorts and validates; throws InvalidArgument on negative genus or
  /// punctures, or a multiplicity below 2.
  OrbifoldSignature(int genus, int punctures, std::vector<long> multiplicities);
  OrbifoldSignature() = default;

  /// Orbifold Euler characteristic 2 - 2g - k - sum(1 - 1/m).
  mpq_class euler_characteristic() const;
  /// "g=0 k=0 m=2,5,10"
  std::string to_string() const;
  /// "(2,5,10)" for compact genus 0, to_string() otherwise.
  std::string short_name() const;

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

/// Parses "g=0 k=0 m=2,5,10" (fields in any order; missing g or k default
/// to 0, missing m means no cone points).
OrbifoldSignature parse_signature(std::string_view text);

/// Compact genus 0: cone generators x, y, z, w (c1, c2, ... beyond four)
/// with the last one eliminated through the product relation. Otherwise
/// surface generators a_i, b_i, free loops u_i and cone generators.
Presentation orbifold_presentation(const OrbifoldSignature& sig);

enum class Geometry { spherical, euclidean, hyperbolic, bad, elementary };

struct Classification {
  Geometry geometry;
  /// Group order for spherical signatures.
  std::optional<long> order;
  mpq_class euler_characteristic;
};

/// Spherical: compact genus 0 in the list (), (n,n), (2,2,n), (2,3,3),
/// (2,3,4), (2,3,5), order 2/chi. Compact with chi > 0 otherwise (the
/// teardrop (n) and spindle (m,n), m != n) is bad. Noncompact with chi > 0
/// (plane with at most one cone point) is elementary. Then euclidean for
/// chi = 0 and hyperbolic for chi < 0.
Classification classify(const OrbifoldSignature& sig);
std::string to_string(Geometry g);

struct ObstructionCandidate {
  OrbifoldSignature signature;
  long order = 0;
  AbelianGroup abelianization;
  bool order_divides = false;
  bool abelianization_surjects = false;
  bool survives() const { return order_divides && abelianization_surjects; }
  std::string reason() const;
};

struct ObstructionReport {
  /// Every non-abelian spherical signature with order up to the group order.
  std::vector<ObstructionCandidate> considered;
  std::vector<OrbifoldSignature> candidates() const;
  bool no_target() const { return candidates().empty(); }
};

/// Necessary conditions for a surjection from a finite group of the given
/// order and abelianization onto a non-abelian spherical orbifold group.
ObstructionReport obstruct_finite(long order, const AbelianGroup& ab);

struct InvariantComparison {
  std::string invariant;
  std::string source_value;
  std::string target_value;
  bool compatible = false;
};

struct TargetVerdict {
  OrbifoldSignature target;
  std::vector<InvariantComparison> comparisons;
  bool excluded() const;
};

struct InfiniteObstructionReport {
  std::vector<TargetVerdict> targets;
  /// True when every target is excluded.
  bool no_surjection() const;
};

/// Checks the two targets (2,5,10) and (2,2,5,5): characteristic-variety
/// containment for both, and for (2,5,10) the abelianization and LCS degrees
/// 2, 3 of the index-10 kernels. The source abelianization must be Z or
/// finite; anything else throws WrongMode.
InfiniteObstructionReport obstruct_infinite_rank_one(const Presentation& p);

}  // namespace meridian
