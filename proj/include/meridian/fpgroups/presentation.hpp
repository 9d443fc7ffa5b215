#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "meridian/fpgroups/word.hpp"

namespace meridian {

/// Finitely presented group. Relators are stored freely and cyclically
/// reduced; identity relators are never stored.
class Presentation {
 public:
  Presentation() = default;
  /// Throws InvalidArgument on repeated names and MalformedWord if a relator
  /// mentions a generator beyond generator_names.size().
  Presentation(std::vector<std::string> generator_names,
               std::vector<Word> relators);

  /// Generators named g1..gn.
  static Presentation with_generators(int count, const std::string& prefix = "g");

  int generator_count() const noexcept {
    return static_cast<int>(names_.size());
  }
  const std::vector<std::string>& generator_names() const noexcept {
    return names_;
  }
  const std::string& generator_name(int index) const { return names_.at(index - 1); }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  /// Index (1-based) of the named generator, 0 when absent.
  int generator_index(const std::string& name) const noexcept;

  /// Appends a relator after cyclic reduction; returns false when it reduced
  /// to the identity and was dropped.
  bool add_relator(const Word& w);

  /// Copy with extra relators appended.
  Presentation with_relators(const std::vector<Word>& extra) const;

  /// Drops relators equal up to cyclic permutation and inversion to an
  /// earlier one; returns the number removed.
  std::size_t remove_duplicate_relators();

  std::size_t total_relator_length() const noexcept;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

}  // namespace meridian
