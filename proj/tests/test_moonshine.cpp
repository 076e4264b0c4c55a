#include <random>

#include "doctest.h"
#include "fgt/errors.hpp"
#include "fgt/limits.hpp"
#include "fgt/moonshine.hpp"

using namespace fgt;

namespace {

// Euler's pentagonal theorem: prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k in Z.
std::vector<BigInt> pentagonal_eta(int len) {
  std::vector<BigInt> c(len);
  for (long k = -len; k <= len; ++k) {
    long e = k * (3 * k - 1) / 2;
    if (e >= 0 && e < len) c[e] += (k % 2 == 0) ? 1 : -1;
  }
  return c;
}

// Delta / q via the logarithmic derivative: n a_n = -24 sum_{k=1}^n sigma(k) a_{n-k}.
std::vector<BigInt> delta_by_sigma(int len) {
  std::vector<BigInt> sigma(len), a(len);
  for (int d = 1; d < len; ++d) {
    for (int m = d; m < len; m += d) sigma[m] += d;
  }
  a[0] = 1;
  for (int n = 1; n < len; ++n) {
    BigInt acc = 0;
    for (int k = 1; k <= n; ++k) acc += sigma[k] * a[n - k];
    a[n] = -24 * acc / n;
  }
  return a;
}

IntegerSeries random_series(std::mt19937_64& rng, int lead, int len) {
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<BigInt> c(len);
  for (auto& x : c) x = d(rng);
  return IntegerSeries(lead, c);
}

}  // namespace

TEST_CASE("series arithmetic respects truncation") {
  IntegerSeries a(0, {1, 2, 3});        // O(q^3)
  IntegerSeries b(1, {1, 1, 1, 1, 1});  // O(q^6)
  auto p = a * b;
  CHECK(p.leading_exponent() == 1);
  CHECK(p.truncation_order() == 4);
  CHECK(p.coeffs() == std::vector<BigInt>{1, 3, 6});
  auto s = a + b;
  CHECK(s.truncation_order() == 3);
  CHECK(s.coeffs() == std::vector<BigInt>{1, 3, 4});
  CHECK_THROWS_AS(a.at(3), DomainError);
  CHECK(a.at(-5) == 0);
  CHECK_THROWS_AS(a.truncated(4), DomainError);
  CHECK_THROWS_AS(IntegerSeries::divide(a, IntegerSeries(0, {0, 1, 1})), DivisionByZero);
  CHECK_THROWS_AS(IntegerSeries::divide(a, IntegerSeries(0, {2, 1, 1})), DomainError);
  CHECK_THROWS_AS(IntegerSeries(0, {2, 1}).nth_root(3), DomainError);
}

TEST_CASE("series ring laws on random triples") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    auto a = random_series(rng, -1, 12), b = random_series(rng, 0, 9), c = random_series(rng, 2, 15);
    CHECK(((a * b) * c).agrees_with(a * (b * c)));
    CHECK(((a + b) * c).agrees_with(a * c + b * c));
    CHECK((a * b).agrees_with(b * a));
    auto unit = IntegerSeries(0, {1}) + random_series(rng, 1, 11);
    CHECK(IntegerSeries::divide(a * unit, unit).agrees_with(a));
    CHECK(unit.pow(3).nth_root(3).agrees_with(unit));
  }
}

TEST_CASE("delta agrees with the pentagonal and divisor-sum oracles") {
  auto delta = delta_expansion(60);
  CHECK(delta.leading_exponent() == 1);
  CHECK(delta.at(1) == 1);
  CHECK(delta.at(2) == -24);
  CHECK(delta.at(3) == 252);
  CHECK(delta.at(4) == -1472);
  CHECK(delta.at(5) == 4830);
  IntegerSeries eta(0, pentagonal_eta(60));
  CHECK(eta.pow(24).shifted(1).agrees_with(delta));
  CHECK(IntegerSeries(1, delta_by_sigma(60)).agrees_with(delta));
  // Ramanujan: tau(mn) = tau(m) tau(n) for coprime m, n
  CHECK(delta.at(6) == delta.at(2) * delta.at(3));
  CHECK(delta.at(35) == delta.at(5) * delta.at(7));
  CHECK_THROWS_AS(delta_expansion(static_cast<int>(limits().series_bound) + 1), ResourceError);
}

TEST_CASE("j expansion") {
  auto j = j_expansion(3);
  CHECK(j.leading_exponent() == -1);
  CHECK(j.coeffs() == std::vector<BigInt>{1, 744, 196884, 21493760, 864299970});
  auto j10 = j_expansion(10);
  CHECK(j10.at(4) == BigInt("20245856256"));
  CHECK(j10.at(10) == BigInt("22567393309593600"));
  // Division certificate: j * Delta = E4^3.
  CHECK((j10 * delta_expansion(12)).agrees_with(e4_expansion(11).pow(3)));
  CHECK_THROWS_AS(j_expansion(static_cast<int>(limits().j_series_bound) + 1), ResourceError);
}

TEST_CASE("cube root of q j") {
  auto s = j_cube_root(3);
  CHECK(s.coeffs() == std::vector<BigInt>{1, 248, 4124, 34752});
  auto s20 = j_cube_root(20);
  CHECK(s20.pow(3).agrees_with(j_expansion(20).shifted(1)));
}

TEST_CASE("decomposition identities all hold") {
  auto checks = moonshine_decompositions();
  CHECK(checks.size() == 11);
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.holds);
  }
}

TEST_CASE("monster constants") {
  CHECK(to_decimal(monster_order()) == "808017424794512875886459904961710757005754368000000000");
  for (const auto& c : monster_constant_checks()) {
    INFO(c.name);
    CHECK(c.holds);
  }
  for (auto p : monster_data().missing_primes) CHECK(monster_order() % p != 0);
}

TEST_CASE("theta identity") {
  auto theta = theta_identity_series(6);
  CHECK(theta.leading_exponent() == 0);
  CHECK(theta.at(0) == 1);
  CHECK(theta.at(1) == 0);
  CHECK(theta.at(2) == 196560);
  CHECK(theta.at(3) == 16773120);
  CHECK(theta.at(4) == 398034000);
  for (int m = 0; m <= 6; ++m) CHECK(theta.at(m) >= 0);
}

TEST_CASE("sum of the first 24 squares is the only square total") {
  auto r = sum_of_squares_check(1'000'000);
  CHECK(r.direct_sum == 4900);
  CHECK(r.closed_form == 4900);
  CHECK(r.root == 70);
  CHECK(r.square_totals == std::vector<std::uint64_t>{24});
  CHECK(r.holds);
}
