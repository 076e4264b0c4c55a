#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "fgt/numeric.hpp"
#include "fgt/permutation.hpp"

namespace fgt {

/// One level of a stabilizer chain G = G^(0) >= G^(1) >= ... >= G^(k) = 1,
/// where G^(i+1) is the pointwise stabilizer of the first i+1 base points.
struct ChainLevel {
  Point base_point = 0;
  /// Fundamental orbit of base_point under G^(i); orbit[0] == base_point.
  std::vector<Point> orbit;
  /// position[x] is the index of x in `orbit`, or -1.
  std::vector<std::int32_t> position;
  /// transversal[j] maps base_point to orbit[j].
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inverse;
  /// Strong generators fixing every earlier base point.
  std::vector<Permutation> generators;
};

/// A permutation group given by generators, with a stabilizer chain computed
/// by deterministic Schreier-Sims. Immutable after construction.
class PermGroup {
 public:
  /// Trivial group on `degree` points.
  explicit PermGroup(std::size_t degree = 0);
  /// Throws DomainError when a generator has the wrong degree. Base points are
  /// taken from `base_prefix` first, then the first moved point of each
  /// generator that still fixes the base.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;
  /// All strong generators (the level-0 generator set).
  std::vector<Permutation> strong_generators() const;

  /// Product of the fundamental orbit lengths.
  BigInt order() const;
  /// Order as a machine integer; throws ResourceError when it does not fit.
  std::uint64_t order_u64() const;

  Permutation identity() const { return Permutation(degree_); }
  /// Membership by sifting. Throws DomainError on degree mismatch.
  bool contains(const Permutation& g) const;

  std::vector<Point> orbit(Point x) const;
  /// Points moved by at least one generator.
  std::vector<Point> support() const;
  PermGroup stabilizer(Point x) const;
  /// Group generated by the current strong generators and `g`.
  PermGroup extended(const Permutation& g) const;

  bool is_trivial() const { return levels_.empty(); }
  bool is_abelian() const;

  /// Visits every element exactly once (order of visit is deterministic).
  template <class Visitor>
  void for_each_element(Visitor&& visit) const {
    Permutation id(degree_);
    visit_level(static_cast<std::ptrdiff_t>(levels_.size()) - 1, id, visit);
  }
  /// All elements, sorted lexicographically by image array. Throws
  /// ResourceError above `limits().enumeration_bound`.
  std::vector<Permutation> elements() const;

  Permutation random_element(std::mt19937_64& rng) const;

 private:
  template <class Visitor>
  void visit_level(std::ptrdiff_t level, const Permutation& acc, Visitor& visit) const {
    if (level < 0) {
      visit(acc);
      return;
    }
    for (const auto& t : levels_[static_cast<std::size_t>(level)].transversal) visit_level(level - 1, acc * t, visit);
  }

  void schreier_sims();
  void rebuild_orbit(std::size_t level);
  /// Returns the residue and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> levels_;
};

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators);

/// Conjugacy-class partition. Classes are ordered central first, then by
/// representative order, then by decreasing size, then by representative.
/// The representative of a class is its lexicographically least element.
struct ClassData {
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> class_rep_orders;
  std::vector<Permutation> representatives;
  std::uint64_t center_size = 0;
  std::size_t num_classes = 0;
};

struct Transitivity {
  unsigned k = 0;
  bool sharp = false;
};

struct StructureReport {
  BigInt center_order;
  BigInt derived_order;
  BigInt abelianization_order;
  bool is_perfect = false;
};

std::vector<std::vector<Point>> orbit_partition(const PermGroup& g);

/// Largest k with G transitive on ordered k-tuples of distinct points of its
/// support; sharp iff the k-point stabilizer is trivial. k = 0 when G is not
/// transitive on its support (or is trivial).
Transitivity transitivity_degree(const PermGroup& g);

/// Exhaustive listing up to `limits().exhaustive_listing_bound`, randomized
/// class discovery (certified by the class-size sum) up to
/// `limits().enumeration_bound`, ResourceError beyond.
ClassData conjugacy_classes(const PermGroup& g);

/// Smallest normal subgroup of g containing `elements`.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& elements);
PermGroup derived_subgroup(const PermGroup& g);
StructureReport structure_report(const PermGroup& g);

bool is_simple(const PermGroup& g);

std::map<std::uint64_t, std::uint64_t> element_order_histogram(const PermGroup& g);

}  // namespace fgt
