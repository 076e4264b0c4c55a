#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fgt/perm_group.hpp"

namespace fgt {

/// Exact arithmetic in Z[ζ_m], ζ_m = exp(2πi/m). A value is its coefficient
/// vector on 1, ζ, ..., ζ^(φ(m)-1), reduced modulo the cyclotomic polynomial,
/// so equal numbers have equal vectors.
class Cyclotomics {
 public:
  using Value = std::vector<std::int64_t>;

  explicit Cyclotomics(std::uint64_t m);

  std::uint64_t order() const { return m_; }
  std::size_t dimension() const { return phi_.size() - 1; }
  /// Φ_m, low degree first, monic.
  const std::vector<std::int64_t>& cyclotomic_polynomial() const { return phi_; }

  Value from_int(std::int64_t n) const;
  /// Σ c_k ζ^k for a coefficient vector of any length (indices taken mod m).
  Value from_root_sum(const std::vector<std::int64_t>& coeffs) const;
  /// ζ^k for any integer k.
  Value root_power(std::int64_t k) const;
  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value scale(const Value& a, std::int64_t c) const;
  /// Complex conjugate, ζ -> ζ^-1.
  Value conj(const Value& a) const;
  bool is_integer(const Value& a, std::int64_t* out = nullptr) const;
  std::complex<double> to_complex(const Value& a) const;
  /// Integer or a polynomial in z, e.g. "-z^3-z+1".
  std::string to_string(const Value& a) const;

 private:
  Value reduce(std::vector<std::int64_t> poly) const;
  /// ζ^k reduced, for 0 <= k < m.
  std::vector<Value> powers_;
  std::uint64_t m_;
  std::vector<std::int64_t> phi_;
};

/// Irreducible complex characters of a small permutation group.
///
/// Columns follow `conjugacy_classes(g)`. Row 0 is the trivial character;
/// the remaining rows are ordered by degree, then by decreasing value vector.
struct CharacterTable {
  std::uint64_t group_order = 0;
  /// Values live in Z[ζ_m] with m the exponent of the group.
  std::uint64_t root_order = 1;
  std::uint64_t lifting_prime = 0;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> class_rep_orders;
  std::vector<Permutation> representatives;
  /// inverse_class[k] is the class of g^-1 for g in class k.
  std::vector<std::size_t> inverse_class;
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<Cyclotomics::Value>> values;
  /// The same values as sparse sums of roots of unity: (k, mult) stands for
  /// mult * ζ^k, one term per eigenvalue of a representing matrix.
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>> root_sums;

  Cyclotomics field() const { return Cyclotomics(root_order); }
};

/// Dixon-Schneider: common eigenvectors of the class multiplication
/// matrices modulo a prime p ≡ 1 (mod exponent) with p > 2 sqrt|G|, lifted to
/// exact values through eigenvalue multiplicities on cyclic subgroups.
/// Throws ResourceError above `limits().character_bound` and
/// ConfigurationError when no lifting prime below 10^7 exists.
CharacterTable character_table(const PermGroup& g);

/// Smallest prime p ≡ 1 (mod e) with p > 2 sqrt(n). The bound 2 sqrt(n)
/// exceeds twice every character degree, so degrees and eigenvalue
/// multiplicities are recovered exactly from their residues.
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t group_order);

/// Checks both orthogonality relations as exact identities in Z[ζ_m] and that
/// Σ d_i^2 = |G|. Empty on success, otherwise the first failure.
std::string verify_character_table(const CharacterTable& t);

}  // namespace fgt
