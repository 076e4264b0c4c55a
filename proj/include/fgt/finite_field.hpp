#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fgt {

/// An element of F_{p^f} in the polynomial basis 1, t, ..., t^{f-1}.
/// Coefficients are stored low degree first and always reduced into [0, p).
struct FieldElement {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// The finite field F_q, q = p^f, presented as F_p[t]/(m(t)).
///
/// The modulus m is the lexicographically smallest monic irreducible
/// polynomial of degree f, comparing coefficient sequences from the constant
/// term upwards. Since the modulus is a function of (p, f), two specs with the
/// same characteristic and degree are the same field.
///
/// Element labels: `index(a)` = sum of coeffs[i] * p^i, so for F_4 the labels
/// 0, 1, 2, 3 are 0, 1, t, t + 1 (with t^2 = t + 1).
class FieldSpec {
 public:
  /// Builds F_{p^f}. Throws ValidationError for non-prime p (naming a divisor)
  /// or f == 0, ResourceError when p^f exceeds `max_order`.
  static FieldSpec make(std::uint64_t p, unsigned f);
  static FieldSpec make(std::uint64_t p, unsigned f, std::uint64_t max_order);

  std::uint32_t p() const { return p_; }
  unsigned f() const { return f_; }
  std::uint64_t q() const { return q_; }
  /// f + 1 coefficients, low degree first, leading coefficient 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t n) const;
  FieldElement element(std::vector<std::uint32_t> coeffs) const;
  FieldElement from_index(std::uint64_t index) const;
  std::uint64_t index(const FieldElement& a) const;
  /// All q elements in label order.
  std::vector<FieldElement> elements() const;

  bool is_zero(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Throws DivisionByZero on a == 0.
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  /// Negative exponents invert first.
  FieldElement pow(const FieldElement& a, std::int64_t exponent) const;

  FieldElement frobenius(const FieldElement& a) const;
  /// Orbit of a under x -> x^p, starting at a. Its length divides f.
  std::vector<FieldElement> frobenius_orbit(const FieldElement& a) const;
  /// Exhaustively checks that x -> x^p is additive and multiplicative.
  bool frobenius_is_automorphism() const;
  /// Order of x -> x^p as a map on the field.
  unsigned frobenius_order() const;

  std::uint64_t multiplicative_order(const FieldElement& a) const;
  /// Smallest label g with multiplicative order q - 1.
  FieldElement multiplicative_generator() const;

  /// Human-readable polynomial form, e.g. "t+1" or "2t^2+1".
  std::string to_string(const FieldElement& a) const;
  std::string modulus_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.f_ == b.f_;
  }

 private:
  FieldSpec() = default;
  void check(const FieldElement& a) const;

  std::uint32_t p_ = 0;
  unsigned f_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
};

/// Exhaustive check of the field axioms on label-indexed addition and
/// multiplication tables: associativity and distributivity over all triples,
/// commutativity, identities and inverses over all pairs. Returns an empty
/// string on success, else a description of the first violation. Intended for
/// q <= 256.
std::string check_field_axioms(const FieldSpec& field);

/// True iff the monic polynomial `poly` (low degree first) has no monic factor
/// of degree 1..deg/2 over F_p. Trial division.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace fgt
