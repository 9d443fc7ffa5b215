#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meridian/braids/braid.hpp"
#include "meridian/fpgroups/presentation.hpp"

namespace meridian {

/// Ordered association from path names to braids on a common strand count.
class PathTable {
 public:
  explicit PathTable(int strands = 1) : strands_(strands) {}

  int strands() const noexcept { return strands_; }
  /// Throws InvalidArgument on a duplicate name or strand mismatch.
  void add(std::string name, BraidWord braid);
  bool contains(std::string_view name) const;
  /// Throws InvalidArgument for an unknown name.
  const BraidWord& at(std::string_view name) const;
  const std::vector<std::pair<std::string, BraidWord>>& entries() const noexcept {
    return entries_;
  }

 private:
  int strands_;
  std::vector<std::pair<std::string, BraidWord>> entries_;
};

struct PathStep {
  std::string name;
  bool inverse = false;
};

/// Product of the table entries along the path, left to right as the path
/// is traversed; inverse steps contribute the inverse braid.
/// Throws InvalidArgument for an unknown path name.
BraidWord compose_path_monodromy(const PathTable& table, const std::vector<PathStep>& path);

struct MonodromyData {
  int strands = 1;
  std::vector<std::pair<std::string, BraidWord>> braids;
  std::optional<Word> infinity_meridian;
};

enum class Reduction { none, block };

/// Zariski-van Kampen presentation on g1..gn with relators
/// artin(beta, g_i) * g_i^-1. With Reduction::block each braid is written
/// as c * tau * c^-1 and one relator per block of tau is skipped. A present
/// infinity meridian is appended as a final relator; clear it for the affine
/// group.
Presentation zvk_presentation(const MonodromyData& m, Reduction reduction = Reduction::none);

/// Parsed monodromy file. Statements:
///   strands n;
///   path NAME: BRAID;
///   loop NAME: PATH ("*" PATH)*;   with PATH := NAME | NAME "^-1"
///   braid NAME: BRAID;
///   infinity: WORD;                word over g1..gn
/// Loops and braids become monodromy entries in file order.
struct MonodromyFile {
  PathTable paths;
  std::vector<std::pair<std::string, std::vector<PathStep>>> loops;
  MonodromyData data;
};

MonodromyFile parse_monodromy(std::string_view text);

}  // namespace meridian
