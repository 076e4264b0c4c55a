#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fgt/errors.hpp"
#include "fgt/group_zoo.hpp"
#include "fgt/limits.hpp"

using namespace fgt;

namespace {

std::vector<std::uint64_t> sorted_class_sizes(const PermGroup& g) {
  auto sizes = conjugacy_classes(g).class_sizes;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Partitions by dynamic programming over part sizes; independent of the
// pentagonal recurrence.
std::uint64_t partitions_dp(unsigned n) {
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

// Invariant-factor chains d_1 | d_2 | ... | d_k with d_1 > 1 and product n.
std::uint64_t invariant_factor_chains(std::uint64_t n, std::uint64_t must_divide) {
  if (n == 1) return 1;
  std::uint64_t count = 0;
  // Choose the smallest factor d first; remaining factors must be multiples of d.
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d != 0 || must_divide % d != 0) continue;
    std::uint64_t rest = n / d;
    // Every later factor is a multiple of d, so d^(k-1) | rest; enforce by requiring d | each later factor.
    count += [&] {
      std::function<std::uint64_t(std::uint64_t, std::uint64_t)> chains = [&](std::uint64_t m, std::uint64_t lo) {
        if (m == 1) return std::uint64_t{1};
        std::uint64_t c = 0;
        for (std::uint64_t e = lo; e <= m; e += lo) {
          if (m % e == 0) c += chains(m / e, e);
        }
        return c;
      };
      return chains(rest, d);
    }();
  }
  return count;
}

}  // namespace

TEST_CASE("named family orders") {
  CHECK(cyclic_group(12).order() == 12);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dihedral_group(7).order() == 14);
  for (std::uint64_t n = 2; n <= 8; ++n) CHECK(dicyclic_group(n).order() == 4 * n);
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(clifford_group(n).order() == (std::uint64_t{1} << (n + 1)));
    CHECK(clifford_even_group(n).order() == (std::uint64_t{1} << n));
  }
  CHECK(symmetric_group(6).order() == 720);
  CHECK(alternating_group(7).order() == 2520);
  CHECK(alternating_group(8).order() == 20160);
  CHECK(vierergruppe().order() == 4);
  CHECK(elementary_abelian_group(3, 3).order() == 27);
  auto f21 = frobenius21();
  CHECK(f21.order() == 21);
  CHECK_FALSE(f21.is_abelian());
}

TEST_CASE("dihedral class equation") {
  CHECK(conjugacy_classes(dihedral_group(4)).class_sizes == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
  CHECK(sorted_class_sizes(dihedral_group(3)) == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("dicyclic(2) is the quaternion group") {
  auto q = dicyclic_group(2);
  CHECK(q.order() == 8);
  auto hist = element_order_histogram(q);
  CHECK(hist == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(conjugacy_classes(q).class_sizes == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
  // Q_3 has a unique involution, like every dicyclic group.
  CHECK(element_order_histogram(dicyclic_group(3))[2] == 1);
}

TEST_CASE("Clifford groups") {
  auto g2 = clifford_group(2);
  CHECK(g2.order() == 8);
  // γ1, γ2, γ1γ2 all square to -1: Γ_2 is the quaternion group.
  CHECK(element_order_histogram(g2) == element_order_histogram(quaternion_group()));
  CHECK(clifford_group(1).is_abelian());
  CHECK_FALSE(clifford_group(3).is_abelian());
}

TEST_CASE("construct_named dispatch and errors") {
  CHECK(construct_named("dihedral", {5}).order() == 10);
  CHECK(construct_named("elementary_abelian", {2, 3}).order() == 8);
  CHECK(construct_named("quaternion", {}).order() == 8);
  try {
    construct_named("dihedral", {2});
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("there is no D_2") != std::string::npos);
  }
  CHECK_THROWS_AS(construct_named("dicyclic", {1}), ValidationError);
  CHECK_THROWS_AS(construct_named("nonsense", {}), ValidationError);
  CHECK_THROWS_AS(construct_named("cyclic", {}), ValidationError);
  CHECK_THROWS_AS(construct_named("elementary_abelian", {4, 2}), ValidationError);
}

TEST_CASE("Cayley table basics") {
  CayleyTable t(symmetric_group(3));
  CHECK(t.size() == 6);
  CHECK(t.element(0).is_identity());
  for (ElementIndex a = 0; a < 6; ++a) CHECK(t.mul(a, t.inv(a)) == 0);
  CHECK_FALSE(t.is_abelian());
  CHECK(t.regular_group().order() == 6);

  // Alt_4 acting on itself by conjugation: orbits are its classes.
  CayleyTable a4(alternating_group(4));
  std::vector<Permutation> gens;
  for (ElementIndex g : a4.generator_indices()) gens.push_back(a4.conjugation_action(g));
  std::vector<std::size_t> sizes;
  for (const auto& o : orbit_partition(PermGroup(12, gens))) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 4, 4});
}

TEST_CASE("semidirect products") {
  auto z3 = cyclic_group(3), z2 = cyclic_group(2);
  CayleyTable t3(z3);
  std::vector<Point> inversion(3);
  for (ElementIndex x = 0; x < 3; ++x) inversion[x] = t3.inv(x);
  auto s3 = semidirect_product(z3, z2, ActionMap{{Permutation(inversion)}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(sorted_class_sizes(s3) == std::vector<std::uint64_t>{1, 2, 3});

  auto g21 = nonabelian_semidirect_pq(3, 7);
  REQUIRE(g21.has_value());
  CHECK(g21->order() == 21);
  CHECK_FALSE(g21->is_abelian());

  auto a = dihedral_group(4), b = cyclic_group(3);
  auto direct = semidirect_product(a, b, trivial_action(a, b));
  CHECK(direct.order() == 24);
  CHECK(conjugacy_classes(direct).num_classes == 15);
  CHECK(direct_product(a, b).order() == 24);
}

TEST_CASE("semidirect product rejects invalid actions") {
  auto z4 = cyclic_group(4), z2 = cyclic_group(2), z3 = cyclic_group(3);
  CayleyTable t4(z4);
  // Swapping two elements of order 4 with the identity fixed but products broken.
  std::vector<Point> bad{0, 2, 1, 3};
  CHECK_THROWS_AS(semidirect_product(z4, z2, ActionMap{{Permutation(bad)}}), ValidationError);
  // Inversion is an automorphism of Z_4, but it has order 2, not dividing 3.
  std::vector<Point> inversion(4);
  for (ElementIndex x = 0; x < 4; ++x) inversion[x] = t4.inv(x);
  try {
    semidirect_product(z4, z3, ActionMap{{Permutation(inversion)}});
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("relations") != std::string::npos);
  }
}

TEST_CASE("nonabelian pq exists iff p divides q - 1") {
  auto primes = primes_up_to(200);
  for (auto p : primes) {
    for (auto q : primes) {
      if (p >= q || p * q >= 200) continue;
      auto g = nonabelian_semidirect_pq(p, q);
      CAPTURE(p);
      CAPTURE(q);
      CHECK(g.has_value() == ((q - 1) % p == 0));
      if (g) {
        CHECK(g->order() == p * q);
        CHECK_FALSE(g->is_abelian());
      }
    }
  }
}

TEST_CASE("automorphism groups") {
  auto v = automorphism_group(vierergruppe());
  CHECK(v.aut_order == 6);
  CHECK_FALSE(v.group.is_abelian());
  CHECK(automorphism_group(cyclic_group(7)).aut_order == 6);
  CHECK(automorphism_group(cyclic_group(7)).group.is_abelian());
  CHECK(automorphism_group(cyclic_group(2)).aut_order == 1);
  CHECK(automorphism_group(cyclic_group(1)).aut_order == 1);

  auto q = automorphism_group(quaternion_group());
  CHECK(q.aut_order == 24);
  CHECK(q.inn_order == 4);
  CHECK(q.out_order == 6);
  auto d4 = automorphism_group(dihedral_group(4));
  CHECK(d4.aut_order == 8);
  CHECK(d4.out_order == 2);
  auto s3 = automorphism_group(symmetric_group(3));
  CHECK(s3.aut_order == 6);
  CHECK(s3.out_order == 1);
  CHECK(automorphism_group(elementary_abelian_group(2, 3)).aut_order == 168);
  CHECK(automorphism_group(abelian_group({3, 3})).aut_order == 48);
}

TEST_CASE("automorphism group respects its bound") {
  CHECK_THROWS_AS(automorphism_group(symmetric_group(5)), ResourceError);
}

TEST_CASE("automorphism counts agree with brute force over all bijections") {
  // Every bijection of a group of order <= 8 fixing the identity, checked
  // against the multiplication table.
  for (auto g : {cyclic_group(6), vierergruppe(), dihedral_group(4), quaternion_group(), abelian_group({4, 2})}) {
    CayleyTable t(g);
    std::vector<ElementIndex> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
      if (t.is_automorphism(perm)) ++count;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    CHECK(automorphism_group(g).aut_order == count);
  }
}

TEST_CASE("holomorphs") {
  auto hv = holomorph(vierergruppe());
  CHECK(hv.order() == 24);
  CHECK(sorted_class_sizes(hv) == sorted_class_sizes(symmetric_group(4)));
  CHECK(holomorph(cyclic_group(5)).order() == 20);
  auto h3 = holomorph(cyclic_group(3));
  CHECK(h3.order() == 6);
  CHECK_FALSE(h3.is_abelian());
  CHECK(holomorph(elementary_abelian_group(2, 3)).order() == 8 * 168);
  try {
    holomorph(symmetric_group(3));
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("abelian") != std::string::npos);
  }
}

TEST_CASE("partition counts") {
  CHECK(partition_count(10) == 42);
  CHECK(partition_count(0) == 1);
  for (unsigned n = 0; n <= 60; ++n) CHECK(partition_count(n) == partitions_dp(n));
  CHECK(partition_count(14) == partitions_dp(14));
  CHECK(partition_count(13) == 101);
  CHECK(partition_count(15) == 176);
}

TEST_CASE("abelian group counts") {
  CHECK(count_abelian_groups(8) == 3);
  CHECK(count_abelian_groups(720) == 10);
  CHECK(count_abelian_groups(1) == 1);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    auto types = abelian_types(n);
    CAPTURE(n);
    CHECK(BigInt(types.size()) == count_abelian_groups(n));
    CHECK(types.size() == invariant_factor_chains(n, n));
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& t : types) {
      CHECK(t.order() == n);
      for (auto f : t.factors) CHECK(prime_power_decomposition(f).first != 0);
      distinct.insert(t.factors);
    }
    CHECK(distinct.size() == types.size());
  }
  CHECK(abelian_group({4, 2}).order() == 8);
  CHECK(abelian_types(8).front().name() == "Z8");
  CHECK(abelian_types(8).back().name() == "Z2xZ2xZ2");
}

TEST_CASE("small group catalog") {
  auto catalog = small_group_catalog();
  CHECK(catalog.size() == 28);
  auto abelian = std::count_if(catalog.begin(), catalog.end(), [](const auto& e) { return e.is_abelian; });
  CHECK(abelian == 20);
  std::map<std::uint64_t, std::pair<int, int>> per_order;  // (abelian, nonabelian)
  for (const auto& e : catalog) {
    (e.is_abelian ? per_order[e.order].first : per_order[e.order].second)++;
    CHECK(e.class_sizes.size() == e.irrep_degrees.size());
  }
  CHECK(per_order[12] == std::pair{2, 3});
  CHECK(per_order[8] == std::pair{3, 2});
  CHECK(per_order[15] == std::pair{1, 0});
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) CHECK(per_order[p] == std::pair{1, 0});
  CHECK(std::is_sorted(catalog.begin(), catalog.end(),
                       [](const auto& a, const auto& b) { return std::tie(a.order, a.name) < std::tie(b.order, b.name); }));
  auto q = std::find_if(catalog.begin(), catalog.end(), [](const auto& e) { return e.name == "Q"; });
  REQUIRE(q != catalog.end());
  CHECK(q->aut_order == 24);
}

TEST_CASE("abelian type names use invariant factors") {
  CHECK(AbelianType{{4, 3}}.name() == "Z12");
  CHECK(AbelianType{{2, 2, 3}}.name() == "Z6xZ2");
  CHECK(AbelianType{{2, 2, 3}}.invariant_factors() == std::vector<std::uint64_t>{2, 6});
  CHECK(AbelianType{{8, 2, 9, 3, 5}}.name() == "Z360xZ6");
}
