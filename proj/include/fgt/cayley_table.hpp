#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fgt/perm_group.hpp"

namespace fgt {

using ElementIndex = std::uint32_t;

/// Multiplication table of a small permutation group. Elements are indexed in
/// lexicographic order of their image arrays, so the identity has index 0.
class CayleyTable {
 public:
  /// Throws ResourceError when |g| exceeds `max_order`.
  explicit CayleyTable(const PermGroup& g, std::uint64_t max_order = 4096);

  std::size_t size() const { return elements_.size(); }
  ElementIndex mul(ElementIndex a, ElementIndex b) const { return table_[a * elements_.size() + b]; }
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  std::uint64_t element_order(ElementIndex a) const { return orders_[a]; }
  const Permutation& element(ElementIndex a) const { return elements_[a]; }
  /// Throws DomainError when g is not in the group.
  ElementIndex index_of(const Permutation& g) const;
  const std::vector<ElementIndex>& generator_indices() const { return generator_indices_; }
  bool is_abelian() const;

  /// x -> x * element(a) on element indices.
  Permutation right_regular(ElementIndex a) const;
  /// x -> element(a)^-1 * x * element(a) on element indices.
  Permutation conjugation_action(ElementIndex a) const;
  /// Regular representation of the group, generated by the images of its generators.
  PermGroup regular_group() const;

  /// True iff `map` (indexed by element) is a bijective homomorphism.
  /// On failure `violation` names the first offending product.
  bool is_automorphism(const std::vector<ElementIndex>& map, std::string* violation = nullptr) const;

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementIndex> generator_indices_;
};

/// Right-regular representation of an abstract group on {0, ..., n-1} with
/// identity 0, given its multiplication and a generating set of indices.
/// Verifies associativity of `mul` exhaustively (DefectError otherwise).
PermGroup group_from_multiplication(std::size_t n, const std::function<ElementIndex(ElementIndex, ElementIndex)>& mul,
                                    const std::vector<ElementIndex>& generators);

}  // namespace fgt
