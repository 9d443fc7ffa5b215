#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meridian/fpgroups/presentation.hpp"

namespace meridian {

/// Subgroup given by generator words, or as the kernel of a map to a finite
/// abelian group Z/d1 x ... x Z/dk.
struct SubgroupSpec {
  enum class Mode { generators, kernel };

  Mode mode = Mode::generators;
  std::vector<Word> generators;
  std::vector<long> target;                   // kernel mode: d1..dk, each >= 1
  std::vector<std::vector<long>> images;      // kernel mode: per presentation generator

  static SubgroupSpec trivial() { return {}; }
  static SubgroupSpec generated_by(std::vector<Word> words);
  static SubgroupSpec kernel(std::vector<long> target, std::vector<std::vector<long>> images);

  bool is_trivial() const noexcept { return mode == Mode::generators && generators.empty(); }
};

/// Reads "gens w1 w2 ...;" (words may be separated by commas) or
/// "kernel Z/10 x->5 y->2;" with one "Z/d" factor per target coordinate and
/// images written as integers or parenthesized tuples "(1,0)".
SubgroupSpec parse_subgroup_spec(std::string_view text, const Presentation& p);

/// Complete coset table. Cosets are numbered 0..index-1 in breadth-first
/// order from the subgroup coset 0, scanning generators g1, g1^-1, g2, ...
class CosetTable {
 public:
  CosetTable(int generator_count, std::vector<std::uint32_t> entries, SubgroupSpec subgroup);

  std::size_t index() const noexcept { return index_; }
  int generator_count() const noexcept { return gens_; }
  const SubgroupSpec& subgroup() const noexcept { return subgroup_; }

  /// Coset c * g for a signed generator letter.
  std::size_t act(std::size_t coset, int letter) const;
  std::size_t trace(std::size_t coset, const Word& w) const;
  /// Permutation of the cosets induced by generator g (1-based).
  std::vector<std::size_t> permutation(int generator) const;

 private:
  int gens_;
  std::size_t index_;
  std::vector<std::uint32_t> entries_;  // index * 2 * gens, columns g1, g1^-1, ...
  SubgroupSpec subgroup_;
};

enum class EnumerationStatus { complete, overflow };

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::overflow;
  std::optional<CosetTable> table;
  /// Largest number of simultaneously live cosets.
  std::size_t peak_cosets = 0;
  std::size_t defined_cosets = 0;
};

/// MERIDIAN_MAX_COSETS when set to a positive integer, else 1000000.
std::size_t default_max_cosets();

/// HLT coset enumeration with a lookahead pass whenever the coset limit is
/// reached. Kernel-mode subgroups are handled directly by the action on the
/// finite target. Throws InvalidArgument when a kernel-mode relator does not
/// map to zero, or max_cosets == 0.
EnumerationResult todd_coxeter(const Presentation& p, const SubgroupSpec& h = SubgroupSpec::trivial(),
                               std::size_t max_cosets = default_max_cosets());

/// Presentation of the subgroup of a complete table on Schreier generators
/// named "<generator>_<coset>" (cosets counted from 1), followed by Tietze
/// simplification within `budget` steps.
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& table,
                                   std::size_t budget = 10000);

}  // namespace meridian
