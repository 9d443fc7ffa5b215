#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "meridian/abelian/abelian.hpp"
#include "meridian/enumerate/coset_table.hpp"

namespace meridian {

/// Finite group as a full multiplication table.
class MultTable {
 public:
  /// Throws InvalidArgument unless `products` is an order x order table
  /// with the given identity, every row and column a permutation.
  MultTable(std::size_t order, std::vector<std::uint32_t> products, std::size_t identity,
            std::vector<std::size_t> generators);

  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  std::size_t product(std::size_t a, std::size_t b) const { return products_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const;
  std::size_t power(std::size_t a, long n) const;
  std::size_t element_order(std::size_t a) const;
  /// Closure of the given elements under the product.
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& elements) const;
  bool commutes(std::size_t a, std::size_t b) const { return product(a, b) == product(b, a); }
  /// Evaluates a word with generator k mapped to assignment[k-1].
  std::size_t evaluate(const Word& w, const std::vector<std::size_t>& assignment) const;

 private:
  std::size_t order_;
  std::vector<std::uint32_t> products_;
  std::size_t identity_;
  std::vector<std::size_t> generators_;
  std::vector<std::uint32_t> inverses_;
};

/// Tables above this order are refused by regular_representation.
inline constexpr std::size_t max_regular_order = 4096;

/// Right regular representation of a trivial-subgroup table: element i is
/// the coset i, the product i*j traces the transversal word of j from i.
/// Throws InvalidArgument for a nontrivial subgroup, LimitExceeded above
/// max_regular_order.
MultTable regular_representation(const CosetTable& table);

struct CenterInfo {
  std::vector<std::size_t> elements;
  AbelianGroup structure;
};

/// Elements commuting with every generator, with their abelian invariants.
CenterInfo center(const MultTable& t);

struct RegularAndCenter {
  MultTable table;
  CenterInfo center;
};

RegularAndCenter regular_rep_and_center(const CosetTable& table);

/// Abelian invariants of an abelian subgroup given by its elements, from the
/// number of elements of each prime-power order.
AbelianGroup abelian_invariants(const MultTable& t, const std::vector<std::size_t>& elements);

/// Every assignment of the presentation generators to elements of t that
/// satisfies all relators and generates t. Throws LimitExceeded when
/// order^generator_count exceeds cap.
std::vector<std::vector<std::size_t>> find_epimorphisms(const Presentation& p, const MultTable& t,
                                                        double cap = 1e7);

MultTable cyclic_table(std::size_t n);
/// Dihedral group of order 2n generated by a reflection and a rotation.
MultTable dihedral_table(std::size_t n);

/// Text format:
///   order m; identity e; generators a b ...;
///   row p_0 ... p_{m-1};   (m rows, entry j of row i is i*j)
MultTable parse_mult_table(std::string_view text);
std::string format_mult_table(const MultTable& t);

}  // namespace meridian
