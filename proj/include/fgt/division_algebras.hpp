#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgt/numeric.hpp"

namespace fgt {

enum class AlgebraKind { Quaternion, Octonion };

/// "H" / "O" (also "quaternion" / "octonion"); ValidationError otherwise.
AlgebraKind parse_algebra_kind(const std::string& text);
std::string algebra_kind_name(AlgebraKind kind);

/// Element of H (coordinates 1, i, j, k) or O (coordinates 1, e1..e7) with
/// exact rational coordinates.
struct AlgebraElement {
  AlgebraKind kind = AlgebraKind::Quaternion;
  std::vector<Rational> coords;

  static AlgebraElement zero(AlgebraKind kind);
  static AlgebraElement real(AlgebraKind kind, const Rational& r);
  /// basis(kind, 0) is 1; basis(kind, i) is the i-th imaginary unit.
  static AlgebraElement basis(AlgebraKind kind, unsigned i);
  /// Comma-separated rationals, e.g. "1,0,-1/2,3". Wrong count is a
  /// ValidationError.
  static AlgebraElement parse(AlgebraKind kind, const std::string& text);

  std::size_t dimension() const { return coords.size(); }
  bool is_zero() const;
  std::string to_string() const;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Oriented Fano lines (a, b, c): e_a e_b = e_c and cyclically.
const std::array<std::array<unsigned, 3>, 7>& fano_lines();

/// Checks the octonion unit table: e_i^2 = -1, antisymmetry, every product a
/// signed unit, and alternativity on all basis triples. Empty on success.
std::string validate_octonion_table();

/// DomainError on mixed algebras.
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Rational& r);
/// (u, x)(u', x') = (uu' - x.x', ux' + u'x + x ^ x'); for O the wedge is the
/// antisymmetric part of the Fano table.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement conjugate(const AlgebraElement& a);
Rational norm(const AlgebraElement& a);
AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c);

struct ConjNormInverse {
  AlgebraElement conjugate;
  Rational norm;
  /// Absent exactly for zero.
  std::optional<AlgebraElement> inverse;
};

/// The inverse is verified: a * inverse == 1 (DefectError otherwise).
ConjNormInverse conj_norm_inverse(const AlgebraElement& a);

struct AssociativityReport {
  AlgebraKind kind = AlgebraKind::Quaternion;
  std::size_t samples = 0;
  std::size_t associative_failures = 0;       // (ab)c != a(bc)
  std::size_t left_alternative_failures = 0;  // (aa)b != a(ab)
  std::size_t right_alternative_failures = 0; // (ab)b != a(bb)
  std::size_t composition_failures = 0;       // N(ab) != N(a)N(b)
  std::size_t conjugation_failures = 0;       // conj(ab) != conj(b) conj(a)
  /// Imaginary basis triples with nonzero associator, out of 27 or 343.
  std::size_t nonassociative_basis_triples = 0;
  /// First basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k).
  std::optional<std::array<unsigned, 3>> witness;
  std::string witness_text;
  /// H: everything associative. O: alternative, composition holds and a
  /// non-associative witness exists.
  bool holds = false;
};

/// Random triples of rationals (numerators in [-9, 9], denominators 1..6)
/// from a fixed seed, plus all imaginary basis triples.
AssociativityReport associativity_probe(AlgebraKind kind, std::size_t sample_size, std::uint64_t seed = 1);

}  // namespace fgt
