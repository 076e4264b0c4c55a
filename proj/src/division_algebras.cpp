#include "fgt/division_algebras.hpp"

#include <random>
#include <sstream>

#include "fgt/errors.hpp"

namespace fgt {

namespace {

std::size_t dim(AlgebraKind k) { return k == AlgebraKind::Quaternion ? 4 : 8; }

struct UnitProduct {
  int sign = 0;
  unsigned index = 0;
};

// e_i e_j for 1 <= i, j <= 7 (i != j) from the oriented lines.
const std::array<std::array<UnitProduct, 8>, 8>& octonion_table() {
  static const auto table = [] {
    std::array<std::array<UnitProduct, 8>, 8> t{};
    for (const auto& l : fano_lines()) {
      for (unsigned r = 0; r < 3; ++r) {
        unsigned a = l[r], b = l[(r + 1) % 3], c = l[(r + 2) % 3];
        t[a][b] = {1, c};
        t[b][a] = {-1, c};
      }
    }
    return t;
  }();
  return table;
}

// i j = k cyclically, as the line (1, 2, 3).
UnitProduct quaternion_units(unsigned a, unsigned b) {
  const unsigned c = 6 - a - b;
  const bool cyclic = (b == a % 3 + 1);
  return {cyclic ? 1 : -1, c};
}

void same_kind(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.kind != b.kind || a.coords.size() != b.coords.size()) {
    throw DomainError("operands from different algebras (" + algebra_kind_name(a.kind) + " and " +
                      algebra_kind_name(b.kind) + ")");
  }
}

}  // namespace

AlgebraKind parse_algebra_kind(const std::string& text) {
  if (text == "H" || text == "quaternion") return AlgebraKind::Quaternion;
  if (text == "O" || text == "octonion") return AlgebraKind::Octonion;
  throw ValidationError("unknown algebra '" + text + "' (expected H or O)");
}

std::string algebra_kind_name(AlgebraKind kind) { return kind == AlgebraKind::Quaternion ? "H" : "O"; }

AlgebraElement AlgebraElement::zero(AlgebraKind kind) { return {kind, std::vector<Rational>(dim(kind))}; }

AlgebraElement AlgebraElement::real(AlgebraKind kind, const Rational& r) {
  AlgebraElement e = zero(kind);
  e.coords[0] = r;
  return e;
}

AlgebraElement AlgebraElement::basis(AlgebraKind kind, unsigned i) {
  if (i >= dim(kind)) throw ValidationError("basis index out of range");
  AlgebraElement e = zero(kind);
  e.coords[i] = 1;
  return e;
}

AlgebraElement AlgebraElement::parse(AlgebraKind kind, const std::string& text) {
  AlgebraElement e{kind, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    try {
      const auto slash = item.find('/');
      if (slash == std::string::npos) {
        e.coords.emplace_back(parse_bigint(item));
      } else {
        BigInt den = parse_bigint(item.substr(slash + 1));
        if (den == 0) throw DivisionByZero("zero denominator in '" + item + "'");
        e.coords.emplace_back(parse_bigint(item.substr(0, slash)), den);
      }
    } catch (const DivisionByZero&) {
      throw;
    } catch (const std::exception&) {
      throw ValidationError("cannot parse coordinate '" + item + "'");
    }
  }
  if (e.coords.size() != dim(kind)) {
    throw ValidationError(algebra_kind_name(kind) + " element needs " + std::to_string(dim(kind)) +
                          " coordinates, got " + std::to_string(e.coords.size()));
  }
  return e;
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords) {
    if (c != 0) return false;
  }
  return true;
}

std::string AlgebraElement::to_string() const {
  std::string s;
  for (const auto& c : coords) s += (s.empty() ? "" : ",") + c.str();
  return s;
}

const std::array<std::array<unsigned, 3>, 7>& fano_lines() {
  static const std::array<std::array<unsigned, 3>, 7> lines = {
      {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
  return lines;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  same_kind(a, b);
  AlgebraElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  same_kind(a, b);
  AlgebraElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

AlgebraElement scale(const AlgebraElement& a, const Rational& s) {
  AlgebraElement r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  same_kind(a, b);
  const std::size_t n = a.coords.size();
  AlgebraElement r = AlgebraElement::zero(a.kind);
  const auto& u = a.coords;
  const auto& v = b.coords;
  r.coords[0] = u[0] * v[0];
  for (std::size_t i = 1; i < n; ++i) {
    r.coords[0] -= u[i] * v[i];
    r.coords[i] += u[0] * v[i] + v[0] * u[i];
  }
  for (unsigned i = 1; i < n; ++i) {
    if (u[i] == 0) continue;
    for (unsigned j = 1; j < n; ++j) {
      if (i == j || v[j] == 0) continue;
      UnitProduct p = a.kind == AlgebraKind::Quaternion ? quaternion_units(i, j) : octonion_table()[i][j];
      if (p.sign > 0) {
        r.coords[p.index] += u[i] * v[j];
      } else {
        r.coords[p.index] -= u[i] * v[j];
      }
    }
  }
  return r;
}

AlgebraElement conjugate(const AlgebraElement& a) {
  AlgebraElement r = a;
  for (std::size_t i = 1; i < r.coords.size(); ++i) r.coords[i] = -r.coords[i];
  return r;
}

Rational norm(const AlgebraElement& a) {
  Rational s = 0;
  for (const auto& c : a.coords) s += c * c;
  return s;
}

AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
  return sub(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
}

ConjNormInverse conj_norm_inverse(const AlgebraElement& a) {
  ConjNormInverse r{conjugate(a), norm(a), std::nullopt};
  AlgebraElement n = multiply(r.conjugate, a);
  for (std::size_t i = 1; i < n.coords.size(); ++i) {
    if (n.coords[i] != 0) throw DefectError("conj(a) a has an imaginary part");
  }
  if (n.coords[0] != r.norm) throw DefectError("conj(a) a differs from the norm");
  if (r.norm != 0) {
    AlgebraElement inv = scale(r.conjugate, Rational(1) / r.norm);
    if (!(multiply(a, inv) == AlgebraElement::real(a.kind, 1))) throw DefectError("a * inverse(a) != 1");
    r.inverse = inv;
  }
  return r;
}

std::string validate_octonion_table() {
  const auto& t = octonion_table();
  for (unsigned i = 1; i <= 7; ++i) {
    AlgebraElement e = AlgebraElement::basis(AlgebraKind::Octonion, i);
    if (!(multiply(e, e) == AlgebraElement::real(AlgebraKind::Octonion, -1))) {
      return "e" + std::to_string(i) + "^2 != -1";
    }
    for (unsigned j = 1; j <= 7; ++j) {
      if (i == j) continue;
      if (t[i][j].sign == 0 || t[i][j].index == 0 || t[i][j].index == i || t[i][j].index == j) {
        return "e" + std::to_string(i) + " e" + std::to_string(j) + " is not a signed unit";
      }
      if (t[i][j].index != t[j][i].index || t[i][j].sign != -t[j][i].sign) {
        return "e" + std::to_string(i) + " e" + std::to_string(j) + " is not antisymmetric";
      }
    }
  }
  for (unsigned i = 0; i < 8; ++i) {
    for (unsigned j = 0; j < 8; ++j) {
      AlgebraElement a = AlgebraElement::basis(AlgebraKind::Octonion, i);
      AlgebraElement b = AlgebraElement::basis(AlgebraKind::Octonion, j);
      if (!associator(a, a, b).is_zero() || !associator(a, b, b).is_zero()) {
        return "alternativity fails for e" + std::to_string(i) + ", e" + std::to_string(j);
      }
      // Alternativity on sums of two units covers the flexible/mixed cases.
      AlgebraElement s = add(a, b);
      for (unsigned k = 0; k < 8; ++k) {
        AlgebraElement c = AlgebraElement::basis(AlgebraKind::Octonion, k);
        if (!associator(s, s, c).is_zero()) {
          return "alternativity fails for e" + std::to_string(i) + " + e" + std::to_string(j);
        }
      }
    }
  }
  return "";
}

AssociativityReport associativity_probe(AlgebraKind kind, std::size_t sample_size, std::uint64_t seed) {
  if (sample_size == 0) throw ValidationError("sample size must be at least 1");
  AssociativityReport r;
  r.kind = kind;
  r.samples = sample_size;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  auto random_element = [&] {
    AlgebraElement e = AlgebraElement::zero(kind);
    for (auto& c : e.coords) c = Rational(num(rng), den(rng));
    return e;
  };
  for (std::size_t s = 0; s < sample_size; ++s) {
    AlgebraElement a = random_element(), b = random_element(), c = random_element();
    AlgebraElement ab = multiply(a, b);
    if (!associator(a, b, c).is_zero()) ++r.associative_failures;
    if (!associator(a, a, b).is_zero()) ++r.left_alternative_failures;
    if (!associator(a, b, b).is_zero()) ++r.right_alternative_failures;
    if (norm(ab) != norm(a) * norm(b)) ++r.composition_failures;
    if (!(conjugate(ab) == multiply(conjugate(b), conjugate(a)))) ++r.conjugation_failures;
  }
  const unsigned n = static_cast<unsigned>(dim(kind));
  for (unsigned i = 1; i < n; ++i) {
    for (unsigned j = 1; j < n; ++j) {
      for (unsigned k = 1; k < n; ++k) {
        AlgebraElement ei = AlgebraElement::basis(kind, i), ej = AlgebraElement::basis(kind, j),
                       ek = AlgebraElement::basis(kind, k);
        if (associator(ei, ej, ek).is_zero()) continue;
        ++r.nonassociative_basis_triples;
        if (!r.witness) {
          r.witness = std::array<unsigned, 3>{i, j, k};
          r.witness_text = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k) + " = " +
                           multiply(multiply(ei, ej), ek).to_string() + ", e" + std::to_string(i) + " (e" +
                           std::to_string(j) + " e" + std::to_string(k) + ") = " +
                           multiply(ei, multiply(ej, ek)).to_string();
        }
      }
    }
  }
  const bool alternative = r.left_alternative_failures == 0 && r.right_alternative_failures == 0;
  const bool composition = r.composition_failures == 0 && r.conjugation_failures == 0;
  if (kind == AlgebraKind::Quaternion) {
    r.holds = alternative && composition && r.associative_failures == 0 && r.nonassociative_basis_triples == 0;
  } else {
    r.holds = alternative && composition && r.witness.has_value();
  }
  return r;
}

}  // namespace fgt
