#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fgt/finite_field.hpp"
#include "fgt/numeric.hpp"
#include "fgt/perm_group.hpp"

namespace fgt {

/// Square matrix over a finite field, row-major.
class MatrixGF {
 public:
  MatrixGF(FieldSpec field, std::size_t n);  // zero matrix
  static MatrixGF identity(FieldSpec field, std::size_t n);
  /// Rows of element labels (see FieldSpec::index).
  static MatrixGF from_labels(FieldSpec field, const std::vector<std::vector<std::uint64_t>>& rows);

  std::size_t n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, FieldElement value);

  MatrixGF operator*(const MatrixGF& rhs) const;
  MatrixGF transpose() const;
  /// Gaussian elimination.
  FieldElement det() const;
  bool is_invertible() const { return !field_.is_zero(det()); }
  std::vector<FieldElement> apply(const std::vector<FieldElement>& column) const;

  friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  FieldSpec field_;
  std::size_t n_;
  std::vector<FieldElement> entries_;
};

enum class Family {
  GL, SL, PSL, PSp, POmegaOdd, POmegaPlus, POmegaMinus, PSU,
  G2, F4, E6, E7, E8,
  TwistedA, TwistedD, Triality, TwistedE6, Suzuki, ReeG2, ReeF4,
};

/// Tags: GL SL PSL PSp POmega_odd POmega_even_plus POmega_even_minus PSU G2 F4
/// E6 E7 E8 2An 2Dn 3D4 2E6 2B2 2G2 2F4.
Family parse_family(std::string_view tag);
std::string family_tag(Family f);
/// Families that take a rank parameter.
bool family_has_rank(Family f);

/// Rank conventions: GL/SL/PSL/PSU use the matrix size n; PSp(n) is the
/// symplectic group on 2n dimensions; POmega_odd(l) acts on 2l+1 dimensions,
/// POmega_even_plus/minus(l) on 2l; 2An and 2Dn use the Dynkin rank. PSU's q
/// is the size of the field of definition (a square q0^2).
struct FamilyOrderQuery {
  Family family = Family::GL;
  unsigned n = 0;
  std::uint64_t q = 0;
};

struct OrderResult {
  std::string label;
  BigInt order;
  /// order * center_divisor is the order before factoring out the center.
  std::uint64_t center_divisor = 1;
  /// Reasons this instance is not simple, for the known small exceptions.
  std::vector<std::string> exceptions;
};

/// Exact order. Throws ValidationError for a non-prime-power q, a rank out of
/// range, a field constraint (2B2/2F4 need q = 2^(2m+1), 2G2 needs
/// q = 3^(2m+1), PSU needs a square q), or a characteristic-2 orthogonal
/// query (unsupported).
OrderResult order_formula(const FamilyOrderQuery& query);

enum class ProjectiveVariant { PGL, PSL };

struct ProjectiveAction {
  PermGroup group;
  /// Canonical representatives (first nonzero coordinate 1), in point order.
  std::vector<std::vector<FieldElement>> points;
  std::vector<MatrixGF> generators;
};

/// PGL_n(q) or PSL_n(q) on the (q^n - 1)/(q - 1) points of projective space,
/// generated by elementary transvections (and a diagonal generator for PGL).
/// The stabilizer-chain order is checked against order_formula. Throws
/// ResourceError above `limits().projective_point_bound` points.
ProjectiveAction projective_action(ProjectiveVariant variant, unsigned n, const FieldSpec& field);

struct CensusEntry {
  BigInt order;
  /// Labels of isomorphic instances, e.g. {"Alt_5", "PSL_2(4)", "SL_2(4)", "PSL_2(5)"}.
  std::vector<std::string> names;
  bool is_sporadic = false;
  bool is_abelian = false;
};

struct CensusOptions {
  /// Cyclic groups Z_p for primes p below this cutoff are included; 0 disables.
  std::uint64_t abelian_prime_cutoff = 10;
};

/// Simple groups of order <= bound (bound <= 10^7), sorted by order. Classical
/// and exceptional families are enumerated with early cutoff, known
/// isomorphisms merged, sporadic groups added from the sporadic table.
std::vector<CensusEntry> simple_census(std::uint64_t bound, const CensusOptions& options = {});

struct IdentificationCheck {
  std::string left;
  std::string right;
  bool claimed_isomorphic = true;
  BigInt left_order, right_order;
  std::size_t left_classes = 0, right_classes = 0;
  bool same_histogram = false;
  /// Claimed isomorphism: all invariants agree. Claimed non-isomorphism:
  /// orders agree and histograms differ.
  bool holds = false;
  std::string detail;
};

/// Compares explicit permutation realizations of PSL_2(2) ~ Sym_3,
/// SL_2(4) ~ PSL_2(5) ~ Alt_5, PSL_2(9) ~ Alt_6, PSL_2(7) ~ GL_3(2),
/// GL_4(2) ~ Alt_8, and Alt_8 vs PSL_3(4) (same order, not isomorphic).
std::vector<IdentificationCheck> verify_claimed_identifications();

}  // namespace fgt
