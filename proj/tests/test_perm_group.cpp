#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "fgt/errors.hpp"
#include "fgt/limits.hpp"
#include "fgt/perm_group.hpp"

using namespace fgt;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

PermGroup sym(std::size_t n) {
  std::vector<Point> long_cycle(n);
  std::iota(long_cycle.begin(), long_cycle.end(), 0);
  return PermGroup(n, {cyc(n, {{0, 1}}), cyc(n, {long_cycle})});
}

PermGroup alt(std::size_t n) {
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(cyc(n, {{0, 1, i}}));
  return PermGroup(n, gens);
}

PermGroup cyclic(std::size_t n) {
  std::vector<Point> c(n);
  std::iota(c.begin(), c.end(), 0);
  return PermGroup(n, {cyc(n, {c})});
}

// Closure of the generators by breadth-first multiplication; independent of
// the stabilizer chain.
std::set<Permutation> brute_force_closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("permutation parsing and products") {
  auto a = Permutation::parse("(0 1 2)", 4);
  auto b = Permutation::parse("(1,3)", 4);
  CHECK((a * b)[0] == 3);  // 0 -> 1 -> 3
  CHECK(a.order() == 3);
  CHECK(Permutation::parse("()", 3).is_identity());
  CHECK(Permutation::parse("[1, 2, 0]", 3) == Permutation::parse("(0 1 2)", 3));
  CHECK(a.to_cycle_string() == "(0 1 2)");
  CHECK(Permutation::parse("(0 1)(2 3 4)", 5).cycle_type() == std::vector<std::size_t>{3, 2});
  CHECK(a.conjugate_by(b) == b.inverse() * a * b);
  CHECK(a.pow(-1) == a.inverse());
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("(0 5)", 4), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("(0 1", 4), ValidationError);
}

TEST_CASE("group orders") {
  CHECK(sym(4).order() == 24);
  CHECK(alt(5).order() == 60);
  CHECK(cyclic(7).order() == 7);
  CHECK(sym(8).order() == 40320);
  CHECK(PermGroup(5).order() == 1);
  CHECK_THROWS_AS(PermGroup(4, {cyc(5, {{0, 1}})}), DomainError);
}

TEST_CASE("orders agree with brute-force closure") {
  std::vector<std::pair<std::size_t, std::vector<Permutation>>> cases = {
      {4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}},
      {5, {cyc(5, {{0, 1, 2}}), cyc(5, {{2, 3, 4}})}},
      {6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})}},
      {7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})}},
      {7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{0, 1}, {2, 3}})}},
  };
  for (const auto& [n, gens] : cases) {
    PermGroup g(n, gens);
    auto closure = brute_force_closure(gens, n);
    CHECK(g.order() == closure.size());
    for (const auto& x : closure) CHECK(g.contains(x));
    auto listed = g.elements();
    CHECK(std::set<Permutation>(listed.begin(), listed.end()) == closure);
  }
}

TEST_CASE("membership") {
  auto a4 = alt(4);
  CHECK(a4.contains(a4.identity()));
  CHECK_FALSE(a4.contains(cyc(4, {{0, 1}})));
  CHECK(alt(6).contains(cyc(6, {{0, 1, 2}, {3, 4, 5}})));
  CHECK_THROWS_AS(a4.contains(Permutation(5)), DomainError);
}

TEST_CASE("orbits and stabilizers") {
  PermGroup g(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{4, 5}})});
  auto orbits = orbit_partition(g);
  CHECK(orbits == std::vector<std::vector<Point>>{{0, 1, 2}, {3}, {4, 5}});
  CHECK(orbit_partition(sym(4)).size() == 1);

  auto s5 = sym(5);
  for (Point x = 0; x < 5; ++x) {
    auto stab = s5.stabilizer(x);
    CHECK(stab.order() == 24);
    CHECK(s5.order() % stab.order() == 0);
    for (const auto& gen : stab.generators()) CHECK(gen[x] == x);
  }
}

TEST_CASE("transitivity degrees") {
  auto t = transitivity_degree(sym(5));
  CHECK(t.k == 5);
  CHECK(t.sharp);
  t = transitivity_degree(alt(5));
  CHECK(t.k == 3);
  CHECK(t.sharp);
  t = transitivity_degree(alt(6));
  CHECK(t.k == 4);
  CHECK(t.sharp);
  t = transitivity_degree(PermGroup(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})}));
  CHECK(t.k == 1);
  CHECK_FALSE(t.sharp);
  t = transitivity_degree(cyclic(5));
  CHECK(t.k == 1);
  CHECK(t.sharp);
  CHECK(transitivity_degree(PermGroup(6, {cyc(6, {{0, 1, 2}})})).k == 1);
}

TEST_CASE("conjugacy classes") {
  auto s4 = conjugacy_classes(sym(4));
  CHECK(s4.class_sizes == std::vector<std::uint64_t>{1, 6, 3, 8, 6});
  CHECK(s4.class_rep_orders == std::vector<std::uint64_t>{1, 2, 2, 3, 4});
  CHECK(s4.center_size == 1);

  auto a5 = conjugacy_classes(alt(5));
  CHECK(a5.class_sizes == std::vector<std::uint64_t>{1, 15, 20, 12, 12});
  CHECK(a5.num_classes == 5);

  auto z3 = conjugacy_classes(cyclic(3));
  CHECK(z3.class_sizes == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(z3.center_size == 3);
}

TEST_CASE("randomized class discovery matches the exhaustive path") {
  auto exhaustive = conjugacy_classes(sym(6));
  Limits saved = limits();
  Limits small = saved;
  small.exhaustive_listing_bound = 100;
  set_limits(small);
  auto sampled = conjugacy_classes(sym(6));
  set_limits(saved);
  CHECK(sampled.class_sizes == exhaustive.class_sizes);
  CHECK(sampled.representatives == exhaustive.representatives);
  CHECK(std::accumulate(sampled.class_sizes.begin(), sampled.class_sizes.end(), std::uint64_t{0}) == 720);
}

TEST_CASE("class sizes divide the order and are constant on classes") {
  auto g = sym(5);
  auto data = conjugacy_classes(g);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < data.num_classes; ++i) {
    CHECK(120 % data.class_sizes[i] == 0);
    total += data.class_sizes[i];
    std::unordered_set<Permutation, PermutationHash> cls;
    g.for_each_element([&](const Permutation& x) { cls.insert(data.representatives[i].conjugate_by(x)); });
    CHECK(cls.size() == data.class_sizes[i]);
    CHECK(*std::min_element(cls.begin(), cls.end()) == data.representatives[i]);
  }
  CHECK(total == 120);
}

TEST_CASE("structure reports") {
  auto s4 = structure_report(sym(4));
  CHECK(s4.center_order == 1);
  CHECK(s4.derived_order == 12);
  CHECK(s4.abelianization_order == 2);
  CHECK_FALSE(s4.is_perfect);

  auto a5 = structure_report(alt(5));
  CHECK(a5.derived_order == 60);
  CHECK(a5.is_perfect);

  auto z6 = structure_report(cyclic(6));
  CHECK(z6.center_order == 6);
  CHECK(z6.derived_order == 1);
}

TEST_CASE("simplicity") {
  CHECK(is_simple(alt(5)));
  CHECK(is_simple(alt(6)));
  CHECK_FALSE(is_simple(alt(4)));
  CHECK_FALSE(is_simple(sym(5)));
  CHECK(is_simple(cyclic(7)));
  CHECK_FALSE(is_simple(cyclic(6)));
  CHECK_FALSE(is_simple(PermGroup(3)));
}

TEST_CASE("element order histograms") {
  auto z4 = element_order_histogram(cyclic(4));
  CHECK(z4 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {4, 2}});
  auto a5 = element_order_histogram(alt(5));
  CHECK(a5 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}

TEST_CASE("Cauchy: even order groups contain an odd number of involutions") {
  for (auto g : {sym(4), alt(5), cyclic(6), alt(4)}) {
    auto hist = element_order_histogram(g);
    CHECK(hist[2] % 2 == 1);
  }
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(sym(11).elements(), ResourceError);
}
