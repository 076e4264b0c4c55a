#include "fgt/matrix_group.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "fgt/errors.hpp"
#include "fgt/group_zoo.hpp"
#include "fgt/limits.hpp"
#include "fgt/sporadic_data.hpp"

namespace fgt {

// ---- MatrixGF ----------------------------------------------------------------

MatrixGF::MatrixGF(FieldSpec field, std::size_t n)
    : field_(std::move(field)), n_(n), entries_(n * n, field_.zero()) {}

MatrixGF MatrixGF::identity(FieldSpec field, std::size_t n) {
  MatrixGF m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = m.field_.one();
  return m;
}

MatrixGF MatrixGF::from_labels(FieldSpec field, const std::vector<std::vector<std::uint64_t>>& rows) {
  MatrixGF m(std::move(field), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ValidationError("matrix rows must have equal length");
    for (std::size_t j = 0; j < rows.size(); ++j) m.entries_[i * m.n_ + j] = m.field_.from_index(rows[i][j]);
  }
  return m;
}

void MatrixGF::set(std::size_t i, std::size_t j, FieldElement value) {
  if (!(value.p == field_.p() && value.coeffs.size() == field_.f())) throw DomainError("entry from another field");
  entries_[i * n_ + j] = std::move(value);
}

MatrixGF MatrixGF::operator*(const MatrixGF& rhs) const {
  if (!(field_ == rhs.field_) || n_ != rhs.n_) throw DomainError("matrix product of incompatible matrices");
  MatrixGF out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      FieldElement acc = field_.zero();
      for (std::size_t k = 0; k < n_; ++k) acc = field_.add(acc, field_.mul(at(i, k), rhs.at(k, j)));
      out.entries_[i * n_ + j] = std::move(acc);
    }
  }
  return out;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.entries_[j * n_ + i] = at(i, j);
  }
  return out;
}

FieldElement MatrixGF::det() const {
  std::vector<FieldElement> a = entries_;
  FieldElement d = field_.one();
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && field_.is_zero(a[piv * n_ + c])) ++piv;
    if (piv == n_) return field_.zero();
    if (piv != c) {
      for (std::size_t k = 0; k < n_; ++k) std::swap(a[piv * n_ + k], a[c * n_ + k]);
      d = field_.neg(d);
    }
    d = field_.mul(d, a[c * n_ + c]);
    FieldElement inv = field_.inv(a[c * n_ + c]);
    for (std::size_t r = c + 1; r < n_; ++r) {
      FieldElement factor = field_.mul(a[r * n_ + c], inv);
      if (field_.is_zero(factor)) continue;
      for (std::size_t k = c; k < n_; ++k) a[r * n_ + k] = field_.sub(a[r * n_ + k], field_.mul(factor, a[c * n_ + k]));
    }
  }
  return d;
}

std::vector<FieldElement> MatrixGF::apply(const std::vector<FieldElement>& column) const {
  if (column.size() != n_) throw DomainError("vector length differs from the matrix size");
  std::vector<FieldElement> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    FieldElement acc = field_.zero();
    for (std::size_t k = 0; k < n_; ++k) acc = field_.add(acc, field_.mul(at(i, k), column[k]));
    out.push_back(std::move(acc));
  }
  return out;
}

// ---- Families ---------------------------------------------------------------

namespace {

const std::vector<std::pair<Family, std::string>>& family_tags() {
  static const std::vector<std::pair<Family, std::string>> tags = {
      {Family::GL, "GL"},
      {Family::SL, "SL"},
      {Family::PSL, "PSL"},
      {Family::PSp, "PSp"},
      {Family::POmegaOdd, "POmega_odd"},
      {Family::POmegaPlus, "POmega_even_plus"},
      {Family::POmegaMinus, "POmega_even_minus"},
      {Family::PSU, "PSU"},
      {Family::G2, "G2"},
      {Family::F4, "F4"},
      {Family::E6, "E6"},
      {Family::E7, "E7"},
      {Family::E8, "E8"},
      {Family::TwistedA, "2An"},
      {Family::TwistedD, "2Dn"},
      {Family::Triality, "3D4"},
      {Family::TwistedE6, "2E6"},
      {Family::Suzuki, "2B2"},
      {Family::ReeG2, "2G2"},
      {Family::ReeF4, "2F4"},
  };
  return tags;
}

BigInt bp(std::uint64_t q, std::uint64_t e) { return big_pow(q, static_cast<unsigned>(e)); }

std::uint64_t gcd_big(std::uint64_t a, const BigInt& b) {
  return static_cast<std::uint64_t>(boost::multiprecision::gcd(BigInt(a), b));
}

std::string q_str(std::uint64_t q) { return "(" + std::to_string(q) + ")"; }

}  // namespace

Family parse_family(std::string_view tag) {
  for (const auto& [f, t] : family_tags()) {
    if (t == tag) return f;
  }
  std::string known;
  for (const auto& [f, t] : family_tags()) known += (known.empty() ? "" : ", ") + t;
  throw ValidationError("unknown family '" + std::string(tag) + "' (known: " + known + ")");
}

std::string family_tag(Family f) {
  for (const auto& [g, t] : family_tags()) {
    if (g == f) return t;
  }
  return "?";
}

bool family_has_rank(Family f) {
  switch (f) {
    case Family::GL:
    case Family::SL:
    case Family::PSL:
    case Family::PSp:
    case Family::POmegaOdd:
    case Family::POmegaPlus:
    case Family::POmegaMinus:
    case Family::PSU:
    case Family::TwistedA:
    case Family::TwistedD:
      return true;
    default:
      return false;
  }
}

OrderResult order_formula(const FamilyOrderQuery& query) {
  const std::uint64_t q = query.q;
  const unsigned n = query.n;
  auto [p, f] = prime_power_decomposition(q);
  if (p == 0) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
  const Family fam = query.family;
  auto need_rank = [&](unsigned min_rank) {
    if (n < min_rank) {
      throw ValidationError(family_tag(fam) + " needs rank parameter >= " + std::to_string(min_rank) + ", got " +
                            std::to_string(n));
    }
    if (n > 64) throw ResourceError("rank parameter above 64");
  };
  auto odd_power_of = [&](std::uint64_t prime, const char* constraint) {
    if (p != prime || f % 2 == 0) {
      throw ValidationError(family_tag(fam) + " requires " + constraint + ", got q = " + std::to_string(q));
    }
  };

  OrderResult r;
  const BigInt Q(q);
  switch (fam) {
    case Family::GL:
    case Family::SL:
    case Family::PSL: {
      need_rank(fam == Family::PSL ? 2 : 1);
      BigInt gl = 1;
      for (unsigned i = 0; i < n; ++i) gl *= bp(q, n) - bp(q, i);
      if (fam == Family::GL) {
        r.label = "GL_" + std::to_string(n) + q_str(q);
        r.order = gl;
        break;
      }
      BigInt sl = gl / (q - 1);
      if (fam == Family::SL) {
        r.label = "SL_" + std::to_string(n) + q_str(q);
        r.order = sl;
        break;
      }
      r.label = "PSL_" + std::to_string(n) + q_str(q);
      r.center_divisor = gcd_u64(n, q - 1);
      r.order = sl / r.center_divisor;
      if (n == 2 && q == 2) r.exceptions.push_back("PSL_2(2) is not simple: it is isomorphic to Sym_3");
      if (n == 2 && q == 3) r.exceptions.push_back("PSL_2(3) is not simple: it is isomorphic to Alt_4");
      break;
    }
    case Family::PSp: {
      // Symplectic group on 2n dimensions; center divisor gcd(n, q - 1) as in
      // the reference formula (the standard divisor is gcd(2, q - 1); the two
      // agree for n = 2 and for every q when n is odd and q even).
      need_rank(1);
      BigInt o = bp(q, std::uint64_t{n} * n);
      for (unsigned i = 1; i <= n; ++i) o *= bp(q, 2 * i) - 1;
      r.label = "PSp_" + std::to_string(n) + q_str(q);
      r.center_divisor = gcd_u64(n, q - 1);
      r.order = o / r.center_divisor;
      if (n == 1) {
        r.exceptions.push_back(q % 2 == 1 ? "PSp_1(q) with divisor gcd(1, q - 1) is Sp_2(q) = SL_2(q), whose center "
                                            "{+1, -1} is not factored out"
                                          : "PSp_1(2^f) is SL_2(2^f); PSp_1(2) is Sym_3");
      }
      if (n == 2 && q == 2) r.exceptions.push_back("Sp_2(2) (on 4 dimensions) is not simple: it is isomorphic to Sym_6");
      break;
    }
    case Family::POmegaOdd: {
      need_rank(1);
      if (p == 2) throw ValidationError("orthogonal groups in characteristic 2 are not supported");
      BigInt o = bp(q, std::uint64_t{n} * n);
      for (unsigned i = 1; i <= n; ++i) o *= bp(q, 2 * i) - 1;
      r.label = "POmega_" + std::to_string(2 * n + 1) + q_str(q);
      r.center_divisor = gcd_u64(2, q - 1);
      r.order = o / r.center_divisor;
      break;
    }
    case Family::POmegaPlus:
    case Family::POmegaMinus: {
      need_rank(2);
      if (p == 2) throw ValidationError("orthogonal groups in characteristic 2 are not supported");
      const bool plus = fam == Family::POmegaPlus;
      BigInt ql = bp(q, n);
      BigInt twist = plus ? BigInt(ql - 1) : BigInt(ql + 1);
      BigInt o = bp(q, std::uint64_t{n} * (n - 1)) * twist;
      for (unsigned i = 1; i < n; ++i) o *= bp(q, 2 * i) - 1;
      r.label = std::string("POmega") + (plus ? "+" : "-") + "_" + std::to_string(2 * n) + q_str(q);
      r.center_divisor = gcd_big(4, twist);
      r.order = o / r.center_divisor;
      if (plus && n == 2) r.exceptions.push_back("POmega+_4(q) is PSL_2(q) x PSL_2(q), not simple");
      break;
    }
    case Family::PSU:
    case Family::TwistedA: {
      // PSU_n(q0^2) = 2A_{n-1}(q0).
      std::uint64_t q0 = q;
      unsigned size = n;
      if (fam == Family::PSU) {
        need_rank(2);
        if (f % 2 != 0) {
          throw ValidationError("PSU_n(q) takes the field size q = q0^2, a square; got q = " + std::to_string(q));
        }
        q0 = ipow(p, f / 2);
      } else {
        need_rank(2);
        size = n + 1;
      }
      BigInt o = bp(q0, std::uint64_t{size} * (size - 1) / 2);
      for (unsigned i = 2; i <= size; ++i) o *= i % 2 == 0 ? BigInt(bp(q0, i) - 1) : BigInt(bp(q0, i) + 1);
      r.center_divisor = gcd_u64(size, q0 + 1);
      r.order = o / r.center_divisor;
      if (fam == Family::PSU) {
        r.label = "PSU_" + std::to_string(n) + q_str(q);
        if ((n == 2 && (q == 4 || q == 9)) || (n == 3 && q == 4)) {
          r.exceptions.push_back(r.label + " is not simple (order " + to_decimal(r.order) + ")");
        }
      } else {
        r.label = "2A_" + std::to_string(n) + q_str(q);
        if (n == 2 && q == 2) r.exceptions.push_back("2A_2(2) = PSU_3(4) is not simple (order 72)");
      }
      break;
    }
    case Family::G2:
      r.label = "G2" + q_str(q);
      r.order = bp(q, 6) * (bp(q, 6) - 1) * (Q * Q - 1);
      if (q == 2) r.exceptions.push_back("G2(2) is not simple: PSU_3(9) is a normal subgroup of index 2");
      break;
    case Family::F4:
      r.label = "F4" + q_str(q);
      r.order = bp(q, 24) * (bp(q, 12) - 1) * (bp(q, 8) - 1) * (bp(q, 6) - 1) * (Q * Q - 1);
      break;
    case Family::E6: {
      r.label = "E6" + q_str(q);
      BigInt o = bp(q, 36);
      for (unsigned e : {12u, 9u, 8u, 6u, 5u, 2u}) o *= bp(q, e) - 1;
      r.center_divisor = gcd_u64(3, q - 1);
      r.order = o / r.center_divisor;
      break;
    }
    case Family::E7: {
      r.label = "E7" + q_str(q);
      BigInt o = bp(q, 63);
      for (unsigned e : {18u, 14u, 12u, 10u, 8u, 6u, 2u}) o *= bp(q, e) - 1;
      r.center_divisor = gcd_u64(2, q - 1);
      r.order = o / r.center_divisor;
      break;
    }
    case Family::E8: {
      r.label = "E8" + q_str(q);
      BigInt o = bp(q, 120);
      for (unsigned e : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u}) o *= bp(q, e) - 1;
      r.order = o;
      break;
    }
    case Family::TwistedD: {
      need_rank(4);
      BigInt twist = bp(q, n) + 1;
      BigInt o = bp(q, std::uint64_t{n} * (n - 1)) * twist;
      for (unsigned i = 1; i < n; ++i) o *= bp(q, 2 * i) - 1;
      r.label = "2D_" + std::to_string(n) + q_str(q);
      r.center_divisor = gcd_big(4, twist);
      r.order = o / r.center_divisor;
      break;
    }
    case Family::Triality:
      r.label = "3D4" + q_str(q);
      r.order = bp(q, 12) * (bp(q, 8) + bp(q, 4) + 1) * (bp(q, 6) - 1) * (Q * Q - 1);
      break;
    case Family::TwistedE6: {
      r.label = "2E6" + q_str(q);
      BigInt o = bp(q, 36) * (bp(q, 12) - 1) * (bp(q, 9) + 1) * (bp(q, 8) - 1) * (bp(q, 6) - 1) * (bp(q, 5) + 1) *
                 (Q * Q - 1);
      r.center_divisor = gcd_u64(3, q + 1);
      r.order = o / r.center_divisor;
      break;
    }
    case Family::Suzuki:
      odd_power_of(2, "q = 2^(2m+1)");
      r.label = "2B2" + q_str(q);
      r.order = Q * Q * (Q * Q + 1) * (Q - 1);
      if (q == 2) r.exceptions.push_back("2B2(2) is not simple: it is the Frobenius group of order 20");
      break;
    case Family::ReeG2:
      odd_power_of(3, "q = 3^(2m+1)");
      r.label = "2G2" + q_str(q);
      r.order = Q * Q * Q * (Q * Q * Q + 1) * (Q - 1);
      if (q == 3) r.exceptions.push_back("2G2(3) is not simple: it is isomorphic to PSL_2(8) extended by Z_3");
      break;
    case Family::ReeF4:
      odd_power_of(2, "q = 2^(2m+1)");
      r.label = "2F4" + q_str(q);
      r.order = bp(q, 12) * (bp(q, 6) + 1) * (bp(q, 4) - 1) * (bp(q, 3) + 1) * (Q - 1);
      if (q == 2) r.exceptions.push_back("2F4(2) is not simple: its derived subgroup (the Tits group) has index 2");
      break;
  }
  return r;
}

// ---- Projective actions -----------------------------------------------------

ProjectiveAction projective_action(ProjectiveVariant variant, unsigned n, const FieldSpec& field) {
  if (n < 2) throw ValidationError("projective actions need n >= 2");
  const std::uint64_t q = field.q();
  const BigInt count = (big_pow(q, n) - 1) / (q - 1);
  if (count > limits().projective_point_bound) {
    throw ResourceError("projective space of dimension " + std::to_string(n - 1) + " over F_" + std::to_string(q) +
                        " has " + to_decimal(count) + " points, above the bound " +
                        std::to_string(limits().projective_point_bound));
  }
  const auto elements = field.elements();

  // Canonical points: first nonzero coordinate 1, ordered by leading position
  // (later first) and then by the labels of the remaining coordinates.
  ProjectiveAction out{PermGroup(), {}, {}};
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  auto key = [&](const std::vector<FieldElement>& v) {
    std::uint64_t k = 0;
    for (const auto& x : v) k = k * q + field.index(x);
    return k;
  };
  for (std::size_t lead = n; lead-- > 0;) {
    const std::size_t free = n - 1 - lead;
    const std::uint64_t combos = ipow(q, static_cast<unsigned>(free));
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::vector<FieldElement> v(n, field.zero());
      v[lead] = field.one();
      std::uint64_t rest = c;
      for (std::size_t k = n; k-- > lead + 1;) {
        v[k] = elements[rest % q];
        rest /= q;
      }
      index.emplace(key(v), static_cast<std::uint32_t>(out.points.size()));
      out.points.push_back(std::move(v));
    }
  }
  std::reverse(out.points.begin(), out.points.end());
  for (std::size_t i = 0; i < out.points.size(); ++i) index[key(out.points[i])] = static_cast<std::uint32_t>(i);

  auto canonical = [&](std::vector<FieldElement> v) {
    std::size_t lead = 0;
    while (field.is_zero(v[lead])) ++lead;
    FieldElement s = field.inv(v[lead]);
    for (auto& x : v) x = field.mul(x, s);
    return v;
  };
  auto as_permutation = [&](const MatrixGF& m) {
    std::vector<Point> images(out.points.size());
    for (std::size_t i = 0; i < out.points.size(); ++i) images[i] = index.at(key(canonical(m.apply(out.points[i]))));
    return Permutation(std::move(images));
  };

  // Elementary transvections I + λ E_ij, λ over the polynomial basis, generate SL_n(q).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (unsigned b = 0; b < field.f(); ++b) {
        MatrixGF m = MatrixGF::identity(field, n);
        std::vector<std::uint32_t> coeffs(field.f(), 0);
        coeffs[b] = 1;
        m.set(i, j, field.element(coeffs));
        out.generators.push_back(std::move(m));
      }
    }
  }
  if (variant == ProjectiveVariant::PGL && q > 2) {
    MatrixGF d = MatrixGF::identity(field, n);
    d.set(0, 0, field.multiplicative_generator());
    out.generators.push_back(std::move(d));
  }
  std::vector<Permutation> perms;
  for (const auto& m : out.generators) perms.push_back(as_permutation(m));
  out.group = PermGroup(out.points.size(), std::move(perms));

  BigInt expected;
  if (variant == ProjectiveVariant::PGL) {
    expected = order_formula({Family::GL, n, q}).order / (q - 1);
  } else {
    expected = order_formula({Family::PSL, n, q}).order;
  }
  if (out.group.order() != expected) {
    throw DefectError("projective action order " + to_decimal(out.group.order()) + " differs from the formula " +
                      to_decimal(expected));
  }
  return out;
}

// ---- Census -----------------------------------------------------------------

namespace {

struct Candidate {
  BigInt order;
  std::string label;
  std::vector<std::string> aliases;
};

// Known isomorphisms among small family members; labels in one group are
// merged into a single census entry.
const std::vector<std::vector<std::string>>& identification_table() {
  static const std::vector<std::vector<std::string>> table = {
      {"Alt_5", "PSL_2(4)", "PSL_2(5)"},
      {"Alt_6", "PSL_2(9)"},
      {"PSL_2(7)", "PSL_3(2)"},
      {"Alt_8", "PSL_4(2)"},
      {"PSp_2(3)", "PSU_4(4)"},
  };
  return table;
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (prime_power_decomposition(q).first != 0) out.push_back(q);
  }
  return out;
}

void add_family(std::vector<Candidate>& out, Family fam, std::uint64_t bound, unsigned min_rank,
                const std::vector<std::uint64_t>& qs, bool (*accept_q)(std::uint64_t), std::uint64_t max_center) {
  const BigInt limit = BigInt(bound) * max_center;
  const bool ranked = family_has_rank(fam);
  for (unsigned n = min_rank;; ++n) {
    bool any_q = false;
    for (std::uint64_t q : qs) {
      if (!accept_q(q)) continue;
      OrderResult r = order_formula({fam, n, q});
      // The unreduced order is increasing in q and in n.
      if (r.order * r.center_divisor > limit) break;
      any_q = true;
      if (r.order > bound || !r.exceptions.empty()) continue;
      Candidate c{r.order, r.label, {}};
      if (fam == Family::PSL && gcd_u64(n, q - 1) == 1) c.aliases.push_back("SL_" + std::to_string(n) + q_str(q));
      if (fam == Family::PSL && q == 2) c.aliases.push_back("GL_" + std::to_string(n) + "(2)");
      out.push_back(std::move(c));
    }
    if (!ranked || !any_q) break;
  }
}

}  // namespace

std::vector<CensusEntry> simple_census(std::uint64_t bound, const CensusOptions& options) {
  if (bound > 10'000'000) throw ResourceError("census bound above 10^7");
  std::vector<Candidate> found;

  for (std::uint64_t n = 5;; ++n) {
    BigInt order = 1;
    for (std::uint64_t k = 3; k <= n; ++k) order *= k;
    if (order > bound) break;
    found.push_back({order, "Alt_" + std::to_string(n), {}});
  }

  // q up to the largest value with |PSL_2(q)| <= bound.
  std::uint64_t q_max = 2;
  while (BigInt(q_max) * (BigInt(q_max) * q_max - 1) / 2 <= bound) ++q_max;
  const auto qs = prime_powers_up_to(q_max);
  auto any = [](std::uint64_t) { return true; };
  auto odd = [](std::uint64_t q) { return q % 2 == 1; };
  auto square = [](std::uint64_t q) { return prime_power_decomposition(q).second % 2 == 0; };
  auto suzuki = [](std::uint64_t q) {
    auto [p, f] = prime_power_decomposition(q);
    return p == 2 && f % 2 == 1 && q > 2;
  };
  auto ree = [](std::uint64_t q) {
    auto [p, f] = prime_power_decomposition(q);
    return p == 3 && f % 2 == 1 && q > 3;
  };
  auto ree_f4 = [](std::uint64_t q) {
    auto [p, f] = prime_power_decomposition(q);
    return p == 2 && f % 2 == 1 && q > 2;
  };
  // PSp_1 and the small orthogonal ranks duplicate PSL_2, PSL_4 and PSU_4.
  add_family(found, Family::PSL, bound, 2, qs, any, q_max);
  add_family(found, Family::PSp, bound, 2, qs, any, q_max);
  add_family(found, Family::POmegaOdd, bound, 3, qs, odd, 2);
  add_family(found, Family::POmegaPlus, bound, 4, qs, odd, 4);
  add_family(found, Family::POmegaMinus, bound, 4, qs, odd, 4);
  add_family(found, Family::PSU, bound, 3, qs, square, q_max);
  add_family(found, Family::G2, bound, 0, qs, any, 1);
  add_family(found, Family::F4, bound, 0, qs, any, 1);
  add_family(found, Family::E6, bound, 0, qs, any, 3);
  add_family(found, Family::E7, bound, 0, qs, any, 2);
  add_family(found, Family::E8, bound, 0, qs, any, 1);
  add_family(found, Family::Triality, bound, 0, qs, any, 1);
  add_family(found, Family::TwistedE6, bound, 0, qs, any, 3);
  add_family(found, Family::Suzuki, bound, 0, qs, suzuki, 1);
  add_family(found, Family::ReeG2, bound, 0, qs, ree, 1);
  add_family(found, Family::ReeF4, bound, 0, qs, ree_f4, 1);

  std::vector<CensusEntry> entries;
  std::map<std::string, std::size_t> entry_of_label;
  for (const auto& c : found) {
    std::size_t target = entries.size();
    for (const auto& group : identification_table()) {
      if (std::find(group.begin(), group.end(), c.label) == group.end()) continue;
      for (const auto& other : group) {
        if (auto it = entry_of_label.find(other); it != entry_of_label.end()) target = it->second;
      }
    }
    if (target == entries.size()) entries.push_back({c.order, {}, false, false});
    if (entries[target].order != c.order) throw DefectError("identified groups " + c.label + " differ in order");
    entries[target].names.push_back(c.label);
    for (const auto& a : c.aliases) entries[target].names.push_back(a);
    entry_of_label[c.label] = target;
  }
  for (const auto& s : sporadic_table()) {
    if (s.order() <= bound) entries.push_back({s.order(), {s.symbol}, true, false});
  }
  for (auto p : primes_up_to(std::min(bound, options.abelian_prime_cutoff == 0 ? 0 : options.abelian_prime_cutoff - 1))) {
    entries.push_back({BigInt(p), {"Z_" + std::to_string(p)}, false, true});
  }
  std::sort(entries.begin(), entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return std::tie(a.order, a.names.front()) < std::tie(b.order, b.names.front());
  });
  return entries;
}

// ---- Identification checks --------------------------------------------------

std::vector<IdentificationCheck> verify_claimed_identifications() {
  struct Claim {
    std::string left, right;
    bool isomorphic;
    PermGroup (*build_left)();
    PermGroup (*build_right)();
  };
  const std::vector<Claim> claims = {
      {"PSL_2(2)", "Sym_3", true,
       [] { return projective_action(ProjectiveVariant::PSL, 2, FieldSpec::make(2, 1)).group; },
       [] { return symmetric_group(3); }},
      {"SL_2(4)", "PSL_2(5)", true,
       [] { return projective_action(ProjectiveVariant::PSL, 2, FieldSpec::make(2, 2)).group; },
       [] { return projective_action(ProjectiveVariant::PSL, 2, FieldSpec::make(5, 1)).group; }},
      {"PSL_2(5)", "Alt_5", true,
       [] { return projective_action(ProjectiveVariant::PSL, 2, FieldSpec::make(5, 1)).group; },
       [] { return alternating_group(5); }},
      {"PSL_2(9)", "Alt_6", true,
       [] { return projective_action(ProjectiveVariant::PSL, 2, FieldSpec::make(3, 2)).group; },
       [] { return alternating_group(6); }},
      {"PSL_2(7)", "GL_3(2)", true,
       [] { return projective_action(ProjectiveVariant::PSL, 2, FieldSpec::make(7, 1)).group; },
       [] { return projective_action(ProjectiveVariant::PGL, 3, FieldSpec::make(2, 1)).group; }},
      {"GL_4(2)", "Alt_8", true,
       [] { return projective_action(ProjectiveVariant::PGL, 4, FieldSpec::make(2, 1)).group; },
       [] { return alternating_group(8); }},
      {"Alt_8", "PSL_3(4)", false, [] { return alternating_group(8); },
       [] { return projective_action(ProjectiveVariant::PSL, 3, FieldSpec::make(2, 2)).group; }},
  };

  std::vector<IdentificationCheck> report;
  for (const auto& claim : claims) {
    PermGroup a = claim.build_left(), b = claim.build_right();
    IdentificationCheck c;
    c.left = claim.left;
    c.right = claim.right;
    c.claimed_isomorphic = claim.isomorphic;
    c.left_order = a.order();
    c.right_order = b.order();
    c.left_classes = conjugacy_classes(a).num_classes;
    c.right_classes = conjugacy_classes(b).num_classes;
    auto ha = element_order_histogram(a), hb = element_order_histogram(b);
    c.same_histogram = ha == hb;
    const bool same_order = c.left_order == c.right_order;
    if (claim.isomorphic) {
      c.holds = same_order && c.left_classes == c.right_classes && c.same_histogram;
      c.detail = "order " + to_decimal(c.left_order) + ", " + std::to_string(c.left_classes) + " classes";
    } else {
      c.holds = same_order && !c.same_histogram;
      std::string diff;
      for (const auto& [o, cnt] : ha) {
        if (hb.count(o) == 0) diff += (diff.empty() ? "" : ", ") + std::to_string(o);
      }
      c.detail = "order " + to_decimal(c.left_order) + " on both sides; element orders only in " + claim.left + ": " +
                 (diff.empty() ? "none" : diff);
    }
    report.push_back(std::move(c));
  }
  return report;
}

}  // namespace fgt
