#include "fgt/numeric.hpp"

#include <numeric>

#include "fgt/errors.hpp"

namespace fgt {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ValidationError("malformed integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ValidationError("malformed integer '" + text + "'");
  }
  return BigInt(text);
}

std::uint64_t smallest_divisor(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

bool is_prime(std::uint64_t n) { return n >= 2 && smallest_divisor(n) == n; }

Factorization factorize(std::uint64_t n) {
  Factorization out;
  while (n > 1) {
    std::uint64_t p = smallest_divisor(n);
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

Factorization factorize(const BigInt& n, std::uint64_t prime_limit) {
  if (n < 1) throw ValidationError("factorize: argument must be positive");
  Factorization out;
  BigInt rest = n;
  for (std::uint64_t p : primes_up_to(prime_limit)) {
    if (rest == 1) break;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (rest != 1) {
    if (rest <= BigInt(prime_limit) * prime_limit) {
      out.emplace_back(static_cast<std::uint64_t>(rest), 1);
    } else {
      throw DefectError("factorize: cofactor " + rest.str() + " has no prime below the trial limit");
    }
  }
  return out;
}

BigInt multiply_out(const Factorization& f) {
  BigInt r = 1;
  for (const auto& [p, e] : f) r *= big_pow(p, e);
  return r;
}

std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = smallest_divisor(q);
  unsigned f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return {0, 0};
  return {p, f};
}

BigInt big_pow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exponent) {
    if (exponent & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return r;
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace fgt
