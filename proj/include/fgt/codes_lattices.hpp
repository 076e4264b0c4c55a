#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fgt/moonshine.hpp"
#include "fgt/perm_group.hpp"

namespace fgt {

/// Bit i of a codeword is coordinate i.
using Codeword = std::uint32_t;

/// The binary Golay code as the extended quadratic-residue code of length 24:
/// coordinates 0..22 are F_23 and coordinate 23 is the point at infinity of
/// the projective line, so PSL_2(23) acts on coordinates by Moebius maps.
class BinaryCode {
 public:
  BinaryCode(unsigned length, std::vector<Codeword> generators);

  unsigned length() const { return length_; }
  unsigned dimension() const { return static_cast<unsigned>(generators_.size()); }
  /// Linearly independent rows.
  const std::vector<Codeword>& generators() const { return generators_; }
  /// All 2^dimension codewords, ascending.
  const std::vector<Codeword>& codewords() const { return words_; }
  bool contains(Codeword w) const;
  std::map<unsigned, std::uint64_t> weight_distribution() const;
  unsigned minimum_weight() const;
  /// Every pair of rows meets in an even number of coordinates and
  /// dimension == length / 2.
  bool is_self_dual() const;

 private:
  unsigned length_;
  std::vector<Codeword> generators_;
  std::vector<Codeword> words_;
};

/// Translates of {0} u QR(23) plus the all-ones word, reduced to 12
/// independent rows. DefectError unless the result is a [24,12,8] self-dual
/// code.
const BinaryCode& golay_code();

/// Weight-8 codewords, ascending.
std::vector<Codeword> octads(const BinaryCode& code);

struct SteinerReport {
  std::uint64_t octads = 0;
  std::uint64_t through_point = 0;  // octads containing coordinate 0
  std::uint64_t through_pair = 0;   // octads containing coordinates 0 and 1
  bool counting_identity = false;   // 759 * C(8,5) == C(24,5)
  bool exhaustive = false;
  /// Every 5-subset lies in exactly one octad (only when exhaustive).
  std::uint64_t five_subsets_checked = 0;
  bool every_five_subset_once = false;
  bool holds = false;
};

/// S(5,8,24) check. The exhaustive variant walks all C(24,5) = 42504 subsets.
SteinerReport octad_steiner_check(const BinaryCode& code, bool exhaustive = true);

/// Permutation of coordinates mapping every generator row into the code.
bool is_code_automorphism(const BinaryCode& code, const Permutation& g);

struct MathieuChain {
  PermGroup m24;
  /// x -> x + 1, x -> -1/x on the projective line, and one code automorphism
  /// fixing 0, 1 and infinity found by backtracking.
  std::vector<Permutation> generators;
  BigInt order;
  BigInt point_stabilizer_order;      // M23
  BigInt two_point_stabilizer_order;  // M22
  Transitivity transitivity;
  Factorization factorization;
};

/// Builds Aut(code) from the PSL_2(23) seed and a searched extra generator.
/// The search raises DefectError carrying the deepest partial assignment if
/// no automorphism is found.
MathieuChain mathieu_m24(const BinaryCode& code);

/// Leech lattice in the integral model: x in Z^24 belongs iff all x_i have
/// the parity m of x_0, sum x_i = 4m (mod 8), and the coordinates with
/// x_i = 2 (mod 4) for m = 0, or x_i = 1 (mod 4) for m = 1, form a codeword.
/// Squared length is x.x / 8, so minimal vectors have x.x = 32.
using LeechVector = std::array<int, 24>;
bool is_leech_vector(const BinaryCode& code, const LeechVector& x);

struct LatticeShapeCount {
  std::string shape;  // four_four, two_octad, three_ones
  std::uint64_t closed_form = 0;
  std::uint64_t enumerated = 0;
  unsigned norm = 4;
};

/// Minimal vectors by shape: (+-4^2 0^22), (+-2^8 0^16), (-+3 +-1^23). Each
/// count is produced by a closed formula and by enumerating shape candidates
/// through is_leech_vector.
std::vector<LatticeShapeCount> leech_minimal_vectors(const BinaryCode& code);

/// Norm-6 vectors of shape (+-2^12 0^12): a lower bound for the norm-6
/// theta coefficient.
std::uint64_t dodecad_vector_count(const BinaryCode& code);

/// Theta(q) = sum_m N(2m) q^m from (J + 24) Delta, exponents 0..num_terms.
IntegerSeries leech_theta_prefix(int num_terms);

}  // namespace fgt
