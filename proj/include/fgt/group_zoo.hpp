#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgt/cayley_table.hpp"
#include "fgt/numeric.hpp"
#include "fgt/perm_group.hpp"

namespace fgt {

// ---- Named families -------------------------------------------------------

PermGroup cyclic_group(std::uint64_t n);
/// Symmetries of the regular n-gon, order 2n. Requires n >= 3.
PermGroup dihedral_group(std::uint64_t n);
/// Q_n = <a, b | a^2n = b^4 = 1, a^n = b^2, b a b^-1 = a^-1>, order 4n, on its
/// regular representation. Requires n >= 2 (Q_1 degenerates to Z_4).
PermGroup dicyclic_group(std::uint64_t n);
/// {±1, ±γ_i, ±γ_iγ_j, ...} with γ_i^2 = -1 and γ_iγ_j = -γ_jγ_i, order 2^(n+1).
PermGroup clifford_group(unsigned n);
/// The even products in the Clifford group, order 2^n.
PermGroup clifford_even_group(unsigned n);
PermGroup symmetric_group(std::uint64_t n);
PermGroup alternating_group(std::uint64_t n);
PermGroup vierergruppe();
PermGroup quaternion_group();
/// Affine maps x -> ax + b on F_7 with a in {1, 2, 4}, order 21.
PermGroup frobenius21();
/// (Z_p)^m as m disjoint p-cycles.
PermGroup elementary_abelian_group(std::uint64_t p, unsigned m);

/// Dispatch by family tag: cyclic, dihedral, dicyclic, clifford, clifford_even,
/// symmetric, alternating (one parameter each), vierergruppe, quaternion,
/// frobenius21 (none), elementary_abelian (p, m).
PermGroup construct_named(std::string_view name, const std::vector<std::uint64_t>& params);
const std::vector<std::string>& named_families();

// ---- Abelian groups -------------------------------------------------------

/// Elementary divisors: prime powers, ordered by prime, then descending.
struct AbelianType {
  std::vector<std::uint64_t> factors;
  std::uint64_t order() const;
  /// Invariant factors d_1 | d_2 | ... , largest last.
  std::vector<std::uint64_t> invariant_factors() const;
  /// Name from the invariant factors, largest first, e.g. "Z6xZ2".
  std::string name() const;
  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

/// Direct product of cyclic groups of the given orders, on disjoint points.
PermGroup abelian_group(const std::vector<std::uint64_t>& cyclic_orders);
/// All abelian groups of order n up to isomorphism.
std::vector<AbelianType> abelian_types(std::uint64_t n);
/// Number of partitions of n, by Euler's pentagonal-number recurrence.
BigInt partition_count(std::uint64_t n);
/// Product of partition_count(e) over the prime-power exponents e of n.
BigInt count_abelian_groups(std::uint64_t n);

// ---- Products -------------------------------------------------------------

/// Action of B on A: the images of B's generators, each a permutation of A's
/// element indices (CayleyTable order), read as mu_b(a) = image[a].
struct ActionMap {
  std::vector<Permutation> generator_images;
};

ActionMap trivial_action(const PermGroup& a, const PermGroup& b);

/// A ⋊ B with (a, b)(a', b') = (a mu_b(a'), b b'), realized on |A||B| points
/// (pair (a, b) is point a + |A| b). Throws ValidationError when an image is
/// not an automorphism of A or the assignment does not extend to a
/// homomorphism B -> Aut(A).
PermGroup semidirect_product(const PermGroup& a, const PermGroup& b, const ActionMap& action);
/// Disjoint-union action on deg(A) + deg(B) points.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// Z_q ⋊ Z_p with a nontrivial action, trying every multiplier x -> x^r as the
/// image of the generator of Z_p. Empty when no multiplier is consistent.
std::optional<PermGroup> nonabelian_semidirect_pq(std::uint64_t p, std::uint64_t q);

// ---- Automorphisms --------------------------------------------------------

struct AutomorphismGroup {
  /// Acts on the element indices of CayleyTable(G).
  PermGroup group;
  std::uint64_t aut_order = 0;
  std::uint64_t inn_order = 0;
  std::uint64_t out_order = 0;
};

/// Backtracking over images of a reduced generating set, constrained to
/// matching element orders; every witness is verified against the full
/// multiplication table. Throws ResourceError above
/// `limits().automorphism_bound`.
AutomorphismGroup automorphism_group(const PermGroup& g);

/// A ⋊ Aut(A) for abelian A. Throws ValidationError for nonabelian input.
PermGroup holomorph(const PermGroup& a);

// ---- Catalog of small groups --------------------------------------------------

struct CatalogEntry {
  std::uint64_t order = 0;
  std::string name;
  std::string construction;
  bool is_abelian = false;
  /// In conjugacy_classes order.
  std::vector<std::uint64_t> class_sizes;
  /// In character_table row order.
  std::vector<std::uint64_t> irrep_degrees;
  std::uint64_t aut_order = 0;
  std::string notes;
};

/// All groups of order < 16 up to isomorphism (28 entries), ordered by order
/// then name. Every entry is constructed and its class sizes, irrep degrees
/// and automorphism group order are computed and compared with a reference
/// table; a mismatch throws DefectError.
std::vector<CatalogEntry> small_group_catalog();

}  // namespace fgt
