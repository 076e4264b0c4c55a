#include "doctest.h"
#include "fgt/division_algebras.hpp"
#include "fgt/errors.hpp"

using namespace fgt;

namespace {

AlgebraElement H(unsigned i) { return AlgebraElement::basis(AlgebraKind::Quaternion, i); }
AlgebraElement O(unsigned i) { return AlgebraElement::basis(AlgebraKind::Octonion, i); }
AlgebraElement neg(const AlgebraElement& a) { return scale(a, -1); }

}  // namespace

TEST_CASE("quaternion units") {
  CHECK(multiply(H(1), H(2)) == H(3));
  CHECK(multiply(H(2), H(1)) == neg(H(3)));
  CHECK(multiply(H(2), H(3)) == H(1));
  CHECK(multiply(H(3), H(1)) == H(2));
  for (unsigned i = 1; i <= 3; ++i) CHECK(multiply(H(i), H(i)) == AlgebraElement::real(AlgebraKind::Quaternion, -1));
  auto x = AlgebraElement::parse(AlgebraKind::Quaternion, "1, -2/3, 5, 7/2");
  CHECK(multiply(H(0), x) == x);
  CHECK(multiply(x, H(0)) == x);
  auto r = conj_norm_inverse(H(1));
  REQUIRE(r.inverse);
  CHECK(*r.inverse == neg(H(1)));
  CHECK(r.norm == 1);
  auto rx = conj_norm_inverse(x);
  CHECK(rx.norm == Rational(1) + Rational(4, 9) + 25 + Rational(49, 4));
  CHECK(multiply(*rx.inverse, x) == H(0));
  CHECK_FALSE(conj_norm_inverse(AlgebraElement::zero(AlgebraKind::Quaternion)).inverse.has_value());
}

TEST_CASE("octonion table") {
  CHECK(validate_octonion_table().empty());
  for (const auto& l : fano_lines()) {
    CHECK(multiply(O(l[0]), O(l[1])) == O(l[2]));
    CHECK(multiply(O(l[1]), O(l[2])) == O(l[0]));
    CHECK(multiply(O(l[1]), O(l[0])) == neg(O(l[2])));
  }
  // Every pair of distinct imaginary units lies on exactly one line.
  for (unsigned i = 1; i <= 7; ++i) {
    for (unsigned j = i + 1; j <= 7; ++j) {
      int on = 0;
      for (const auto& l : fano_lines()) {
        bool hi = l[0] == i || l[1] == i || l[2] == i;
        bool hj = l[0] == j || l[1] == j || l[2] == j;
        on += hi && hj;
      }
      CHECK(on == 1);
    }
  }
}

TEST_CASE("octonion anti-associativity off the lines") {
  // A triple on a line spans a quaternion subalgebra.
  CHECK(associator(O(1), O(2), O(3)).is_zero());
  auto left = multiply(multiply(O(1), O(2)), O(4));
  auto right = multiply(O(1), multiply(O(2), O(4)));
  CHECK(left == neg(right));
  CHECK_FALSE(left.is_zero());
  auto report = associativity_probe(AlgebraKind::Octonion, 100);
  REQUIRE(report.witness);
  CHECK(*report.witness == std::array<unsigned, 3>{1, 2, 4});
  CHECK(report.left_alternative_failures == 0);
  CHECK(report.right_alternative_failures == 0);
  CHECK(report.composition_failures == 0);
  CHECK(report.conjugation_failures == 0);
  CHECK(report.associative_failures > 0);
  // Distinct units not on a common line: 7 * 6 * 4 ordered triples.
  CHECK(report.nonassociative_basis_triples == 168);
  CHECK(report.holds);
}

TEST_CASE("quaternions are associative and compose norms") {
  auto report = associativity_probe(AlgebraKind::Quaternion, 100);
  CHECK(report.associative_failures == 0);
  CHECK(report.composition_failures == 0);
  CHECK(report.conjugation_failures == 0);
  CHECK(report.nonassociative_basis_triples == 0);
  CHECK_FALSE(report.witness.has_value());
  CHECK(report.holds);
}

TEST_CASE("norm composition on basis elements") {
  for (auto kind : {AlgebraKind::Quaternion, AlgebraKind::Octonion}) {
    const unsigned n = kind == AlgebraKind::Quaternion ? 4 : 8;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        auto a = add(AlgebraElement::basis(kind, i), scale(AlgebraElement::basis(kind, j), Rational(1, 2)));
        auto b = add(AlgebraElement::basis(kind, j), AlgebraElement::basis(kind, (i + j) % n));
        CHECK(norm(multiply(a, b)) == norm(a) * norm(b));
      }
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(multiply(H(1), O(1)), DomainError);
  CHECK_THROWS_AS(AlgebraElement::parse(AlgebraKind::Octonion, "1,2,3"), ValidationError);
  CHECK_THROWS_AS(AlgebraElement::parse(AlgebraKind::Quaternion, "1,x,0,0"), ValidationError);
  CHECK_THROWS_AS(AlgebraElement::parse(AlgebraKind::Quaternion, "1/0,0,0,0"), DivisionByZero);
  CHECK_THROWS_AS(parse_algebra_kind("S"), ValidationError);
  CHECK_THROWS_AS(associativity_probe(AlgebraKind::Octonion, 0), ValidationError);
}
