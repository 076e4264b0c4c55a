#include <algorithm>
#include <set>

#include "doctest.h"
#include "fgt/errors.hpp"
#include "fgt/matrix_group.hpp"
#include "fgt/perm_group.hpp"

using namespace fgt;

namespace {

BigInt order_of(const char* tag, unsigned n, std::uint64_t q) { return order_formula({parse_family(tag), n, q}).order; }

// Independent count of GL_n(q) by enumerating all matrices over small fields.
std::uint64_t brute_gl(unsigned n, std::uint64_t p, unsigned f) {
  FieldSpec F = FieldSpec::make(p, f);
  const std::uint64_t q = F.q();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n * n; ++i) total *= q;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n));
    std::uint64_t c = code;
    for (auto& row : rows) {
      for (auto& x : row) {
        x = c % q;
        c /= q;
      }
    }
    if (MatrixGF::from_labels(F, rows).is_invertible()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("matrix arithmetic over F_4") {
  FieldSpec F = FieldSpec::make(2, 2);
  MatrixGF a = MatrixGF::from_labels(F, {{1, 2}, {3, 1}});
  MatrixGF id = MatrixGF::identity(F, 2);
  CHECK(a * id == a);
  CHECK(id * a == a);
  // det = 1*1 - t*(t+1) = 1 + t^2 + t = 1 + (t+1) + t = 0 in F_4
  CHECK(F.is_zero(a.det()));
  MatrixGF b = MatrixGF::from_labels(F, {{2, 1}, {1, 0}});
  CHECK(b.det() == F.one());
  CHECK(b.transpose().det() == b.det());
  CHECK((a * b).det() == F.mul(a.det(), b.det()));
  CHECK_THROWS_AS(MatrixGF::from_labels(F, {{1, 2}, {3}}), ValidationError);
  CHECK_THROWS_AS(a * MatrixGF::identity(FieldSpec::make(3, 1), 2), DomainError);
}

TEST_CASE("GL and SL orders agree with enumeration") {
  CHECK(brute_gl(2, 2, 1) == order_of("GL", 2, 2));
  CHECK(brute_gl(2, 3, 1) == order_of("GL", 2, 3));
  CHECK(brute_gl(2, 2, 2) == order_of("GL", 2, 4));
  CHECK(brute_gl(2, 5, 1) == order_of("GL", 2, 5));
  CHECK(brute_gl(3, 2, 1) == order_of("GL", 3, 2));
  CHECK(order_of("SL", 2, 5) == 120);
}

TEST_CASE("reference orders") {
  CHECK(order_of("PSL", 2, 7) == 168);
  CHECK(order_of("PSL", 3, 2) == 168);
  CHECK(order_of("PSL", 3, 4) == 20160);
  CHECK(order_of("PSL", 4, 2) == 20160);
  CHECK(order_of("PSL", 2, 9) == 360);
  CHECK(order_of("PSL", 2, 8) == 504);
  CHECK(order_of("PSL", 2, 11) == 660);
  CHECK(order_of("PSL", 3, 3) == 5616);
  CHECK(order_of("G2", 0, 3) == 4245696);
  CHECK(order_of("G2", 0, 4) == 251596800);
  CHECK(order_of("PSU", 3, 9) == 6048);
  CHECK(order_of("PSU", 4, 4) == 25920);
  CHECK(order_of("PSp", 2, 3) == 25920);
  CHECK(order_of("2B2", 0, 8) == 29120);
  CHECK(order_of("2B2", 0, 32) == 32537600);
  CHECK(order_of("2G2", 0, 27) == BigInt("10073444472"));
  CHECK(order_of("2F4", 0, 2) == 35942400);
  CHECK(order_of("3D4", 0, 2) == 211341312);
  CHECK(order_of("POmega_odd", 3, 3) == 4585351680ULL);
  CHECK(order_of("POmega_even_plus", 4, 3) == BigInt("4952179814400"));
  CHECK(order_of("POmega_even_minus", 4, 3) == BigInt("10151968619520"));
  CHECK(order_of("2An", 2, 3) == order_of("PSU", 3, 9));
  CHECK(order_of("2Dn", 4, 3) == order_of("POmega_even_minus", 4, 3));
  CHECK(order_of("E6", 0, 2) == BigInt("214841575522005575270400"));
  CHECK(order_of("2E6", 0, 2) == BigInt("76532479683774853939200"));
  CHECK(order_of("F4", 0, 2) == BigInt("3311126603366400"));
  CHECK(order_of("E7", 0, 2) == BigInt("7997476042075799759100487262680802918400"));
}

TEST_CASE("families whose coincidences are classical") {
  // PSU_2(q^2) = PSL_2(q) and PSp_2(q) = POmega_5(q)
  for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u}) {
    CHECK(order_of("PSU", 2, q * q) == order_of("PSL", 2, q));
  }
  for (std::uint64_t q : {3u, 5u, 7u}) CHECK(order_of("PSp", 2, q) == order_of("POmega_odd", 2, q));
}

TEST_CASE("non-simple small instances are flagged") {
  auto flagged = [](const char* tag, unsigned n, std::uint64_t q) {
    return !order_formula({parse_family(tag), n, q}).exceptions.empty();
  };
  CHECK(flagged("PSL", 2, 2));
  CHECK(flagged("PSL", 2, 3));
  CHECK_FALSE(flagged("PSL", 2, 4));
  CHECK(flagged("PSp", 2, 2));
  CHECK(flagged("PSU", 3, 4));
  CHECK(flagged("G2", 0, 2));
  CHECK(flagged("2B2", 0, 2));
  CHECK(flagged("2G2", 0, 3));
  CHECK(flagged("2F4", 0, 2));
  CHECK(flagged("POmega_even_plus", 2, 5));
  CHECK_FALSE(flagged("G2", 0, 3));
  CHECK(order_of("PSL", 2, 2) == 6);
  CHECK(order_of("PSL", 2, 3) == 12);
  CHECK(order_of("PSp", 2, 2) == 720);
}

TEST_CASE("field constraints") {
  CHECK_THROWS_AS(order_of("2B2", 0, 4), ValidationError);
  CHECK_THROWS_AS(order_of("2B2", 0, 27), ValidationError);
  CHECK_THROWS_AS(order_of("2G2", 0, 9), ValidationError);
  CHECK_THROWS_AS(order_of("2F4", 0, 16), ValidationError);
  CHECK_THROWS_AS(order_of("PSU", 3, 8), ValidationError);
  CHECK_THROWS_AS(order_of("PSL", 2, 6), ValidationError);
  CHECK_THROWS_AS(order_of("PSL", 1, 5), ValidationError);
  CHECK_THROWS_AS(order_of("POmega_odd", 3, 4), ValidationError);
  CHECK_THROWS_AS(parse_family("PSX"), ValidationError);
  try {
    order_of("POmega_even_plus", 4, 2);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("not supported") != std::string::npos);
  }
}

TEST_CASE("PGL_2(q) order is divisible by q, q - 1 and q + 1") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 49u, 64u, 81u, 121u}) {
    BigInt pgl = order_of("GL", 2, q) / (q - 1);
    CHECK(pgl == BigInt(q) * (q * q - 1));
    CHECK(pgl % q == 0);
    CHECK(pgl % (q - 1) == 0);
    CHECK(pgl % (q + 1) == 0);
  }
}

TEST_CASE("projective actions") {
  auto psl25 = projective_action(ProjectiveVariant::PSL, 2, FieldSpec::make(5, 1));
  CHECK(psl25.points.size() == 6);
  CHECK(psl25.group.order() == 60);
  CHECK(is_simple(psl25.group));

  auto pgl29 = projective_action(ProjectiveVariant::PGL, 2, FieldSpec::make(3, 2));
  CHECK(pgl29.points.size() == 10);
  CHECK(pgl29.group.order() == 720);
  auto t = transitivity_degree(pgl29.group);
  CHECK(t.k == 3);
  CHECK(t.sharp);

  auto psl22 = projective_action(ProjectiveVariant::PSL, 2, FieldSpec::make(2, 1));
  auto cls = conjugacy_classes(psl22.group);
  CHECK(cls.class_sizes == std::vector<std::uint64_t>{1, 3, 2});

  auto psl34 = projective_action(ProjectiveVariant::PSL, 3, FieldSpec::make(2, 2));
  CHECK(psl34.points.size() == 21);
  CHECK(psl34.group.order() == 20160);
  CHECK(transitivity_degree(psl34.group).k == 2);

  // Every generator has determinant 1 in the PSL variant.
  for (const auto& m : psl34.generators) CHECK(m.det() == m.field().one());
  // Points are canonical and distinct.
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& v : psl34.points) {
    auto lead = std::find_if(v.begin(), v.end(), [](const FieldElement& x) {
      return std::any_of(x.coeffs.begin(), x.coeffs.end(), [](std::uint32_t c) { return c != 0; });
    });
    REQUIRE(lead != v.end());
    CHECK(*lead == psl34.generators[0].field().one());
    std::vector<std::uint64_t> labels;
    for (const auto& x : v) labels.push_back(x.coeffs[0] + 2 * x.coeffs[1]);
    seen.insert(labels);
  }
  CHECK(seen.size() == 21);

  CHECK_THROWS_AS(projective_action(ProjectiveVariant::PSL, 1, FieldSpec::make(5, 1)), ValidationError);
  CHECK_THROWS_AS(projective_action(ProjectiveVariant::PSL, 3, FieldSpec::make(3, 4)), ResourceError);
}

TEST_CASE("unimodularity: 2x2 matrices preserving the symplectic form have det 1") {
  for (auto [p, f] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    FieldSpec F = FieldSpec::make(p, f);
    const std::uint64_t q = F.q();
    MatrixGF J = MatrixGF::from_labels(F, {{0, 1}, {F.index(F.neg(F.one())), 0}});
    std::uint64_t preserving = 0;
    for (std::uint64_t code = 0; code < q * q * q * q; ++code) {
      MatrixGF m = MatrixGF::from_labels(F, {{code % q, code / q % q}, {code / (q * q) % q, code / (q * q * q)}});
      if (m.transpose() * J * m == J) {
        ++preserving;
        CHECK(m.det() == F.one());
      }
    }
    CHECK(preserving == order_of("SL", 2, q));
  }
}

TEST_CASE("census up to 100 and 1000") {
  auto c100 = simple_census(100);
  REQUIRE(c100.size() == 5);
  CHECK(c100.back().order == 60);
  auto names60 = c100.back().names;
  CHECK(std::find(names60.begin(), names60.end(), "PSL_2(5)") != names60.end());
  CHECK(std::find(names60.begin(), names60.end(), "SL_2(4)") != names60.end());

  auto c1000 = simple_census(1000);
  std::vector<BigInt> orders;
  for (const auto& e : c1000) {
    if (!e.is_abelian) orders.push_back(e.order);
  }
  CHECK(orders == std::vector<BigInt>{60, 168, 360, 504, 660});
}

TEST_CASE("census up to 10000") {
  auto census = simple_census(10000);
  CHECK(census.size() == 20);
  std::vector<BigInt> orders;
  std::size_t abelian = 0, sporadic = 0;
  for (const auto& e : census) {
    if (e.is_abelian) {
      ++abelian;
      continue;
    }
    if (e.is_sporadic) ++sporadic;
    orders.push_back(e.order);
    // Every nonabelian simple group has at least three prime divisors, one of them 2.
    auto f = factorize(e.order);
    CHECK(f.size() >= 3);
    CHECK(f.front().first == 2);
  }
  CHECK(abelian == 4);
  CHECK(sporadic == 1);
  CHECK(orders == std::vector<BigInt>{60, 168, 360, 504, 660, 1092, 2448, 2520, 3420, 4080, 5616, 6048, 6072, 7800,
                                      7920, 9828});
  auto with = [&](const std::string& name) {
    return std::find_if(census.begin(), census.end(), [&](const CensusEntry& e) {
      return std::find(e.names.begin(), e.names.end(), name) != e.names.end();
    });
  };
  CHECK(with("PSL_3(2)") == with("PSL_2(7)"));
  CHECK(with("Alt_6") == with("PSL_2(9)"));
  CHECK(with("PSU_3(9)")->order == 6048);
  CHECK(with("M11")->is_sporadic);
  CHECK(with("G2(2)") == census.end());

  auto no_abelian = simple_census(10000, CensusOptions{0});
  CHECK(no_abelian.size() == 16);
  CHECK_THROWS_AS(simple_census(100'000'000), ResourceError);
}

TEST_CASE("census up to 30000 keeps Alt_8 and PSL_3(4) apart") {
  auto census = simple_census(30000, CensusOptions{0});
  std::vector<const CensusEntry*> at20160;
  for (const auto& e : census) {
    if (e.order == 20160) at20160.push_back(&e);
  }
  REQUIRE(at20160.size() == 2);
  auto has = [](const CensusEntry* e, const char* n) {
    return std::find(e->names.begin(), e->names.end(), n) != e->names.end();
  };
  CHECK((has(at20160[0], "Alt_8") ? has(at20160[0], "PSL_4(2)") : has(at20160[1], "PSL_4(2)")));
  bool merged_25920 = false, has_2b2 = false;
  for (const auto& e : census) {
    if (e.order == 25920) merged_25920 = has(&e, "PSp_2(3)") && has(&e, "PSU_4(4)");
    if (e.order == 29120) has_2b2 = has(&e, "2B2(8)");
  }
  CHECK(merged_25920);
  CHECK(has_2b2);
}

TEST_CASE("claimed identifications") {
  auto checks = verify_claimed_identifications();
  CHECK(checks.size() == 7);
  for (const auto& c : checks) {
    INFO(c.left << " vs " << c.right << ": " << c.detail);
    CHECK(c.holds);
  }
  CHECK(checks.back().claimed_isomorphic == false);
  CHECK(checks.back().detail.find("15") != std::string::npos);
}
