#pragma once

#include <string>
#include <vector>

#include "fgt/numeric.hpp"

namespace fgt {

/// Truncated Laurent series in q with integer coefficients:
/// sum_k coeffs[k] q^(leading_exponent + k) + O(q^truncation_order).
/// coeffs.size() == truncation_order - leading_exponent always.
class IntegerSeries {
 public:
  IntegerSeries(int leading_exponent, std::vector<BigInt> coeffs);
  /// Zero series known up to O(q^truncation_order).
  static IntegerSeries zero(int leading_exponent, int truncation_order);
  static IntegerSeries constant(const BigInt& c, int truncation_order);

  int leading_exponent() const { return lead_; }
  int truncation_order() const { return lead_ + static_cast<int>(coeffs_.size()); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of q^e; zero below the leading exponent. DomainError at or
  /// past the truncation order.
  BigInt at(int e) const;

  /// Drops everything from q^order on. order must not exceed the current
  /// truncation order.
  IntegerSeries truncated(int order) const;
  /// Multiplies by q^k.
  IntegerSeries shifted(int k) const;

  friend IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b);
  friend IntegerSeries operator-(const IntegerSeries& a, const IntegerSeries& b);
  friend IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b);
  IntegerSeries scaled(const BigInt& c) const;
  /// Exact quotient a / b. The first stored coefficient of b must be nonzero;
  /// DomainError if some quotient coefficient is not an integer. Verified by
  /// re-multiplication.
  static IntegerSeries divide(const IntegerSeries& a, const IntegerSeries& b);
  /// The unique series s with s^n = *this and s(0) = 1. Requires leading
  /// exponent 0 and constant term 1; DomainError if a coefficient is not
  /// integral. Verified by re-multiplication (DefectError on mismatch).
  IntegerSeries nth_root(unsigned n) const;
  IntegerSeries pow(unsigned n) const;

  /// Equal coefficients up to the smaller truncation order.
  bool agrees_with(const IntegerSeries& other) const;

 private:
  int lead_;
  std::vector<BigInt> coeffs_;
};

/// q * prod_{n>=1} (1 - q^n)^24, exponents 1..num_terms. ResourceError above
/// `limits().series_bound`.
IntegerSeries delta_expansion(int num_terms);
/// 1 + 240 sum sigma_3(n) q^n, exponents 0..num_terms.
IntegerSeries e4_expansion(int num_terms);
/// j = E4^3 / Delta, exponents -1..num_terms. ResourceError above
/// `limits().j_series_bound`.
IntegerSeries j_expansion(int num_terms);
/// S with S^3 = q j, exponents 0..num_terms.
IntegerSeries j_cube_root(int num_terms);
/// (J + 24) Delta = (j - 720) Delta, exponents 0..num_terms. The coefficient
/// of q^m counts Leech vectors of norm 2m.
IntegerSeries theta_identity_series(int num_terms);

struct MonsterData {
  Factorization order_factorization;
  std::vector<BigInt> irrep_dims;  // 1, 196883, 21296876, 842609326
  std::vector<std::uint64_t> missing_primes;
};

const MonsterData& monster_data();
BigInt monster_order();

struct IdentityCheck {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  std::string rhs_text;
  bool holds = false;
};

/// McKay-Thompson style decompositions of the j and j^(1/3) coefficients into
/// Monster and E8 irreducible dimensions, each an exact integer equality.
std::vector<IdentityCheck> moonshine_decompositions();

/// Monster constants: digit count, prime divisibility, 196883 = 47 * 59 * 71.
std::vector<IdentityCheck> monster_constant_checks();

struct SumOfSquaresReport {
  BigInt direct_sum;        // sum_{i=1}^{24} i^2
  BigInt closed_form;       // 24 * 25 * 49 / 6
  BigInt root;              // 70
  std::uint64_t scan_limit = 0;
  /// N in [1, scan_limit] with a square total, the degenerate N = 1 excluded.
  std::vector<std::uint64_t> square_totals;
  bool holds = false;
};

/// Exact check that sum_{i=1}^N i^2 is a square only for N = 24 (and the
/// trivial N = 1) in [1, scan_limit].
SumOfSquaresReport sum_of_squares_check(std::uint64_t scan_limit = 1'000'000);

}  // namespace fgt
