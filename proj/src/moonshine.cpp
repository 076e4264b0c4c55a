#include "fgt/moonshine.hpp"

#include <algorithm>
#include <cmath>

#include "fgt/errors.hpp"
#include "fgt/limits.hpp"
#include "fgt/sporadic_data.hpp"

namespace fgt {

IntegerSeries::IntegerSeries(int leading_exponent, std::vector<BigInt> coeffs)
    : lead_(leading_exponent), coeffs_(std::move(coeffs)) {}

IntegerSeries IntegerSeries::zero(int leading_exponent, int truncation_order) {
  if (truncation_order < leading_exponent) throw DomainError("truncation order below the leading exponent");
  return IntegerSeries(leading_exponent, std::vector<BigInt>(truncation_order - leading_exponent));
}

IntegerSeries IntegerSeries::constant(const BigInt& c, int truncation_order) {
  IntegerSeries s = zero(0, truncation_order);
  if (truncation_order > 0) s.coeffs_[0] = c;
  return s;
}

BigInt IntegerSeries::at(int e) const {
  if (e >= truncation_order()) {
    throw DomainError("coefficient of q^" + std::to_string(e) + " is past the truncation order " +
                      std::to_string(truncation_order()));
  }
  if (e < lead_) return 0;
  return coeffs_[e - lead_];
}

IntegerSeries IntegerSeries::truncated(int order) const {
  if (order > truncation_order()) throw DomainError("cannot extend a series past its truncation order");
  if (order <= lead_) return zero(order, order);
  return IntegerSeries(lead_, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + (order - lead_)));
}

IntegerSeries IntegerSeries::shifted(int k) const { return IntegerSeries(lead_ + k, coeffs_); }

namespace {

IntegerSeries combine(const IntegerSeries& a, const IntegerSeries& b, int sign) {
  const int lead = std::min(a.leading_exponent(), b.leading_exponent());
  const int trunc = std::min(a.truncation_order(), b.truncation_order());
  std::vector<BigInt> c(std::max(0, trunc - lead));
  for (int e = lead; e < trunc; ++e) c[e - lead] = a.at(e) + (sign > 0 ? b.at(e) : BigInt(-b.at(e)));
  return IntegerSeries(lead, std::move(c));
}

}  // namespace

IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b) { return combine(a, b, 1); }
IntegerSeries operator-(const IntegerSeries& a, const IntegerSeries& b) { return combine(a, b, -1); }

IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b) {
  const int lead = a.lead_ + b.lead_;
  const int trunc = std::min(a.truncation_order() + b.lead_, b.truncation_order() + a.lead_);
  const std::size_t len = static_cast<std::size_t>(std::max(0, trunc - lead));
  std::vector<BigInt> c(len);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntegerSeries(lead, std::move(c));
}

IntegerSeries IntegerSeries::scaled(const BigInt& c) const {
  std::vector<BigInt> out = coeffs_;
  for (auto& x : out) x *= c;
  return IntegerSeries(lead_, std::move(out));
}

IntegerSeries IntegerSeries::pow(unsigned n) const {
  // Powers of the unit part keep full relative precision; the shift is re-applied.
  IntegerSeries base(0, coeffs_);
  IntegerSeries acc = constant(1, static_cast<int>(coeffs_.size()));
  for (unsigned bit = n; bit != 0; bit >>= 1) {
    if (bit & 1) acc = acc * base;
    if (bit > 1) base = base * base;
  }
  return acc.shifted(lead_ * static_cast<int>(n));
}

IntegerSeries IntegerSeries::divide(const IntegerSeries& a, const IntegerSeries& b) {
  if (b.coeffs_.empty() || b.coeffs_[0] == 0) {
    throw DivisionByZero("series division needs a nonzero first stored coefficient in the divisor");
  }
  const int lead = a.lead_ - b.lead_;
  const int rel = std::min(static_cast<int>(a.coeffs_.size()), static_cast<int>(b.coeffs_.size()));
  std::vector<BigInt> q(rel);
  const BigInt& b0 = b.coeffs_[0];
  for (int k = 0; k < rel; ++k) {
    BigInt r = a.coeffs_[k];
    for (int j = 1; j <= k; ++j) r -= b.coeffs_[j] * q[k - j];
    if (r % b0 != 0) throw DomainError("series quotient has a non-integral coefficient at q^" + std::to_string(lead + k));
    q[k] = r / b0;
  }
  IntegerSeries out(lead, std::move(q));
  if (!(out * b).agrees_with(a)) throw DefectError("series division certificate failed");
  return out;
}

IntegerSeries IntegerSeries::nth_root(unsigned n) const {
  if (n == 0) throw ValidationError("root index must be positive");
  if (lead_ != 0 || coeffs_.empty() || coeffs_[0] != 1) {
    throw DomainError("root extraction needs leading exponent 0 and constant term 1");
  }
  // g = f^(1/n) with f(0) = 1: n k g_k = sum_{j=1}^{k} ((n + 1) j - n k) f_j g_{k-j}.
  const std::size_t len = coeffs_.size();
  std::vector<BigInt> g(len);
  g[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (coeffs_[j] == 0) continue;
      BigInt w = BigInt(static_cast<long long>((n + 1) * j)) - BigInt(static_cast<long long>(n * k));
      acc += w * coeffs_[j] * g[k - j];
    }
    BigInt denom = BigInt(static_cast<long long>(n * k));
    if (acc % denom != 0) throw DomainError("root has a non-integral coefficient at q^" + std::to_string(k));
    g[k] = acc / denom;
  }
  IntegerSeries out(0, std::move(g));
  if (!out.pow(n).agrees_with(*this)) throw DefectError("root extraction certificate failed");
  return out;
}

bool IntegerSeries::agrees_with(const IntegerSeries& other) const {
  const int from = std::min(lead_, other.lead_);
  const int to = std::min(truncation_order(), other.truncation_order());
  for (int e = from; e < to; ++e) {
    if (at(e) != other.at(e)) return false;
  }
  return true;
}

// ---- Modular q-expansions -----------------------------------------------------

namespace {

void check_terms(int num_terms, std::uint64_t bound, const char* what) {
  if (num_terms < 0) throw ValidationError(std::string(what) + ": number of terms must be nonnegative");
  if (static_cast<std::uint64_t>(num_terms) > bound) {
    throw ResourceError(std::string(what) + ": " + std::to_string(num_terms) + " terms exceed the bound " +
                        std::to_string(bound));
  }
}

// prod_{n>=1} (1 - q^n)^24 with exponents 0..len-1.
IntegerSeries eta24(int len) {
  std::vector<BigInt> e(len);
  e[0] = 1;
  for (int n = 1; n < len; ++n) {
    for (int k = len - 1; k >= n; --k) e[k] -= e[k - n];
  }
  return IntegerSeries(0, std::move(e)).pow(24);
}

}  // namespace

IntegerSeries delta_expansion(int num_terms) {
  check_terms(num_terms, limits().series_bound, "delta_expansion");
  return eta24(std::max(0, num_terms)).shifted(1);
}

IntegerSeries e4_expansion(int num_terms) {
  check_terms(num_terms, limits().series_bound, "e4_expansion");
  std::vector<BigInt> c(num_terms + 1);
  c[0] = 1;
  for (int d = 1; d <= num_terms; ++d) {
    const BigInt d3 = BigInt(d) * d * d;
    for (int m = d; m <= num_terms; m += d) c[m] += d3;
  }
  for (int n = 1; n <= num_terms; ++n) c[n] *= 240;
  return IntegerSeries(0, std::move(c));
}

IntegerSeries j_expansion(int num_terms) {
  check_terms(num_terms, limits().j_series_bound, "j_expansion");
  // Relative precision num_terms + 2 on both sides gives exponents -1..num_terms.
  IntegerSeries e4 = e4_expansion(num_terms + 1);
  return IntegerSeries::divide(e4.pow(3), delta_expansion(num_terms + 2));
}

IntegerSeries j_cube_root(int num_terms) {
  check_terms(num_terms, limits().j_series_bound, "j_cube_root");
  return j_expansion(num_terms).shifted(1).truncated(num_terms + 1).nth_root(3);
}

IntegerSeries theta_identity_series(int num_terms) {
  check_terms(num_terms, limits().j_series_bound, "theta_identity_series");
  IntegerSeries j = j_expansion(num_terms);
  IntegerSeries shift = IntegerSeries::constant(720, num_terms + 1);
  return ((j - shift) * delta_expansion(num_terms + 1)).truncated(num_terms + 1);
}

// ---- Monster ----------------------------------------------------------------

const MonsterData& monster_data() {
  static const MonsterData data = [] {
    MonsterData d;
    d.order_factorization = sporadic("M").factorization;
    d.irrep_dims = {1, 196883, 21296876, 842609326};
    d.missing_primes = {37, 43, 53, 61, 67};
    return d;
  }();
  return data;
}

BigInt monster_order() { return multiply_out(monster_data().order_factorization); }

std::vector<IdentityCheck> moonshine_decompositions() {
  const IntegerSeries j = j_expansion(3);
  const IntegerSeries s = j_cube_root(3);
  const auto& m = monster_data().irrep_dims;
  const BigInt e8_1 = s.at(1);
  const BigInt e8_2 = s.at(2) - e8_1 - 1;
  const BigInt e8_3 = s.at(3) - e8_2 - 2 * e8_1 - 1;
  auto check = [](std::string name, BigInt lhs, BigInt rhs, std::string text) {
    return IdentityCheck{std::move(name), lhs, rhs, std::move(text), lhs == rhs};
  };
  return {
      check("j: leading coefficient", j.at(-1), 1, "1"),
      check("j: constant term", j.at(0), 24 * 31, "24*31"),
      check("j: q^1", j.at(1), m[0] + m[1], "1 + 196883"),
      check("j: q^2", j.at(2), m[0] + m[1] + m[2], "1 + 196883 + 21296876"),
      check("j: q^3", j.at(3), 2 * m[0] + 2 * m[1] + m[2] + m[3], "2*1 + 2*196883 + 21296876 + 842609326"),
      check("J = j - 744 has zero constant term", j.at(0) - 744, 0, "0"),
      check("j^(1/3): q^1", e8_1, 248, "248"),
      check("j^(1/3): q^2", s.at(2), 1 + 248 + 3875, "1 + 248 + 3875"),
      check("j^(1/3): q^3", s.at(3), 1 + 2 * 248 + 3875 + 30380, "1 + 2*248 + 3875 + 30380"),
      check("E8: 4124 - 248 - 1", e8_2, 3875, "3875"),
      check("E8: 34752 - 3875 - 2*248 - 1", e8_3, 30380, "30380"),
  };
}

std::vector<IdentityCheck> monster_constant_checks() {
  const BigInt order = monster_order();
  auto check = [](std::string name, BigInt lhs, BigInt rhs, std::string text) {
    return IdentityCheck{std::move(name), lhs, rhs, std::move(text), lhs == rhs};
  };
  std::vector<IdentityCheck> out;
  out.push_back(check("decimal digits of |M|", BigInt(to_decimal(order).size()), 54, "54"));
  out.push_back(check("|M| div 10^53 (leading digit)", order / BigInt("100000000000000000000000000000000000000000000000000000"),
                      8, "8"));
  out.push_back(check("|M| mod 71", order % 71, 0, "0"));
  for (auto p : monster_data().missing_primes) {
    out.push_back(check("|M| mod " + std::to_string(p) + " is nonzero", BigInt(order % p != 0), 1, "1"));
  }
  out.push_back(check("196883 = 47*59*71", monster_data().irrep_dims[1], BigInt(47) * 59 * 71, "47*59*71"));
  out.push_back(check("842609326 = 2*13^2*29*31*47*59", monster_data().irrep_dims[3],
                      BigInt(2) * 13 * 13 * 29 * 31 * 47 * 59, "2*13^2*29*31*47*59"));
  std::vector<std::uint64_t> primes;
  for (const auto& [p, e] : monster_data().order_factorization) primes.push_back(p);
  out.push_back(check("primes dividing |M|", BigInt(primes.size()), 15, "15"));
  return out;
}

SumOfSquaresReport sum_of_squares_check(std::uint64_t scan_limit) {
  if (scan_limit > 2'000'000) throw ResourceError("sum-of-squares scan limit above 2*10^6");
  SumOfSquaresReport r;
  r.scan_limit = scan_limit;
  for (int i = 1; i <= 24; ++i) r.direct_sum += BigInt(i) * i;
  r.closed_form = BigInt(24) * 25 * 49 / 6;
  is_perfect_square(r.direct_sum, &r.root);
  std::uint64_t total = 0;
  for (std::uint64_t n = 1; n <= scan_limit; ++n) {
    total += n * n;
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(total)));
    while (root * root > total) --root;
    while ((root + 1) * (root + 1) <= total) ++root;
    if (root * root == total && n > 1) r.square_totals.push_back(n);
  }
  r.holds = r.direct_sum == 4900 && r.closed_form == 4900 && r.root == 70 &&
            r.square_totals == std::vector<std::uint64_t>{24};
  return r;
}

}  // namespace fgt
