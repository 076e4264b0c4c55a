#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fgt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Prime factorization as (prime, exponent) pairs, primes ascending.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

std::string to_decimal(const BigInt& value);
BigInt parse_bigint(const std::string& text);

bool is_prime(std::uint64_t n);

/// Smallest divisor d > 1 of n (n itself when n is prime). Requires n >= 2.
std::uint64_t smallest_divisor(std::uint64_t n);

Factorization factorize(std::uint64_t n);

/// Trial division by primes below `prime_limit`. Throws DefectError if a
/// cofactor above the limit remains.
Factorization factorize(const BigInt& n, std::uint64_t prime_limit = 1000);

BigInt multiply_out(const Factorization& f);

/// Returns (p, f) with q = p^f, or (0, 0) when q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t q);

BigInt big_pow(std::uint64_t base, unsigned exponent);
std::uint64_t ipow(std::uint64_t base, unsigned exponent);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Exact integer square root when n is a perfect square.
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace fgt
