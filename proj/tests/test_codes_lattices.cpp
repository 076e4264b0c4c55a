#include <algorithm>
#include <set>

#include "doctest.h"
#include "fgt/codes_lattices.hpp"
#include "fgt/errors.hpp"

using namespace fgt;

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("Golay code is a [24,12,8] self-dual code") {
  const auto& g = golay_code();
  CHECK(g.length() == 24);
  CHECK(g.dimension() == 12);
  CHECK(g.codewords().size() == 4096);
  CHECK(g.minimum_weight() == 8);
  CHECK(g.is_self_dual());
  CHECK(g.weight_distribution() == std::map<unsigned, std::uint64_t>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
  CHECK(g.contains(0));
  CHECK(g.contains((1u << 24) - 1));
  // Self-orthogonality over all codewords, not only rows.
  for (Codeword w : g.codewords()) CHECK(std::popcount(w) % 4 == 0);
  for (std::size_t i = 0; i < g.codewords().size(); i += 97) {
    for (std::size_t j = 0; j < g.codewords().size(); j += 89) {
      CHECK(std::popcount(g.codewords()[i] & g.codewords()[j]) % 2 == 0);
    }
  }
  CHECK_THROWS_AS(BinaryCode(25, {}), ValidationError);
  CHECK_THROWS_AS(BinaryCode(4, {0b10000}), ValidationError);
}

TEST_CASE("octads form S(5,8,24)") {
  auto r = octad_steiner_check(golay_code(), true);
  CHECK(r.octads == 759);
  CHECK(r.through_point == 253);
  CHECK(r.through_pair == 77);
  CHECK(r.counting_identity);
  CHECK(759 * binomial(8, 5) == binomial(24, 5));
  CHECK(r.five_subsets_checked == 42504);
  CHECK(r.every_five_subset_once);
  CHECK(r.holds);
  // Every point lies in 253 octads, every pair in 77, every triple in 21.
  auto oct = octads(golay_code());
  for (unsigned i = 0; i < 24; ++i) {
    CHECK(std::count_if(oct.begin(), oct.end(), [&](Codeword o) { return o >> i & 1u; }) == 253);
  }
  CHECK(std::count_if(oct.begin(), oct.end(), [](Codeword o) { return (o & 0b111u) == 0b111u; }) == 21);
  auto counting = octad_steiner_check(golay_code(), false);
  CHECK(counting.holds);
  CHECK(counting.five_subsets_checked == 0);
}

TEST_CASE("Mathieu chain") {
  const auto& code = golay_code();
  auto chain = mathieu_m24(code);
  CHECK(chain.order == 244823040);
  CHECK(chain.point_stabilizer_order == 10200960);
  CHECK(chain.two_point_stabilizer_order == 443520);
  CHECK(chain.order == 24 * chain.point_stabilizer_order);
  CHECK(chain.point_stabilizer_order == 23 * chain.two_point_stabilizer_order);
  CHECK(chain.transitivity.k == 5);
  CHECK_FALSE(chain.transitivity.sharp);
  CHECK(chain.factorization == Factorization{{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}});
  REQUIRE(chain.generators.size() == 3);
  for (const auto& g : chain.generators) {
    CHECK(is_code_automorphism(code, g));
    // Exhaustive: the whole code maps onto itself.
    std::set<Codeword> image;
    for (Codeword w : code.codewords()) {
      Codeword x = 0;
      for (unsigned i = 0; i < 24; ++i) {
        if (w >> i & 1u) x |= 1u << g[i];
      }
      image.insert(x);
    }
    CHECK(std::equal(image.begin(), image.end(), code.codewords().begin(), code.codewords().end()));
  }
  const auto& extra = chain.generators[2];
  CHECK(extra[23] == 23);
  CHECK(extra[0] == 0);
  CHECK(extra[1] == 1);
  CHECK(extra[2] != 2);
  // PSL_2(23) alone has order 6072.
  CHECK(PermGroup(24, {chain.generators[0], chain.generators[1]}).order() == 6072);
  // A transposition is never a code automorphism.
  CHECK_FALSE(is_code_automorphism(code, Permutation::from_cycles(24, {{0, 1}})));
}

TEST_CASE("Leech membership predicate") {
  const auto& code = golay_code();
  LeechVector zero{};
  CHECK(is_leech_vector(code, zero));
  LeechVector a{};
  a[0] = 4;
  a[5] = -4;
  CHECK(is_leech_vector(code, a));
  LeechVector b{};
  b[0] = 4;
  CHECK_FALSE(is_leech_vector(code, b));  // sum 4, m = 0
  LeechVector c{};
  c[0] = 8;
  CHECK(is_leech_vector(code, c));
  LeechVector d;
  d.fill(1);
  d[0] = -3;
  CHECK(is_leech_vector(code, d));
  d[0] = 3;
  CHECK_FALSE(is_leech_vector(code, d));
  LeechVector e{};
  e[0] = 1;
  CHECK_FALSE(is_leech_vector(code, e));  // mixed parity
}

TEST_CASE("Leech minimal vectors by shape") {
  auto shapes = leech_minimal_vectors(golay_code());
  REQUIRE(shapes.size() == 3);
  CHECK(shapes[0].shape == "four_four");
  CHECK(shapes[0].closed_form == 1104);
  CHECK(shapes[1].closed_form == 97152);
  CHECK(shapes[2].closed_form == 98304);
  std::uint64_t total = 0;
  for (const auto& s : shapes) {
    INFO(s.shape);
    CHECK(s.enumerated == s.closed_form);
    CHECK(s.norm == 4);
    total += s.enumerated;
  }
  CHECK(total == 196560);
  CHECK(leech_theta_prefix(3).at(2) == total);
}

TEST_CASE("norm-6 dodecad vectors bound the theta coefficient") {
  auto dodecad = dodecad_vector_count(golay_code());
  CHECK(dodecad == 2576 * 2048);
  auto theta = leech_theta_prefix(3);
  CHECK(theta.at(0) == 1);
  CHECK(theta.at(1) == 0);
  CHECK(theta.at(3) == 16773120);
  CHECK(BigInt(dodecad) <= theta.at(3));
}
