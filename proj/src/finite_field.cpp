#include "fgt/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "fgt/errors.hpp"
#include "fgt/limits.hpp"
#include "fgt/numeric.hpp"

namespace fgt {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

/// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

/// Quotient and remainder.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly quot(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    quot[shift] = static_cast<std::uint32_t>(factor);
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * b[i]) % p);
    }
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly m = poly;
  trim(m);
  const std::size_t deg = m.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      if (poly_mod(m, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::make(std::uint64_t p, unsigned f) { return make(p, f, limits().max_field_order); }

FieldSpec FieldSpec::make(std::uint64_t p, unsigned f, std::uint64_t max_order) {
  if (p < 2) throw ValidationError("field characteristic must be a prime, got " + std::to_string(p));
  if (std::uint64_t d = smallest_divisor(p); d != p) {
    throw ValidationError("field characteristic " + std::to_string(p) + " is not prime (divisible by " +
                          std::to_string(d) + ")");
  }
  if (f == 0) throw ValidationError("field degree must be at least 1");
  BigInt q_big = big_pow(p, f);
  if (q_big > max_order) {
    throw ResourceError("field order " + q_big.str() + " exceeds the configured maximum " +
                        std::to_string(max_order));
  }
  FieldSpec spec;
  spec.p_ = static_cast<std::uint32_t>(p);
  spec.f_ = f;
  spec.q_ = static_cast<std::uint64_t>(q_big);

  // Lexicographic order on (c_0, c_1, ..., c_{f-1}): c_0 is the most
  // significant digit of the enumeration counter.
  const std::uint64_t count = spec.q_;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly m(f + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = f; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[f] = 1;
    if (is_irreducible(m, spec.p_)) {
      spec.modulus_ = std::move(m);
      return spec;
    }
  }
  throw DefectError("no irreducible polynomial of degree " + std::to_string(f) + " over F_" + std::to_string(p));
}

void FieldSpec::check(const FieldElement& a) const {
  if (a.p != p_ || a.coeffs.size() != f_) {
    throw DomainError("element of F_" + std::to_string(a.p) + "^" + std::to_string(a.coeffs.size()) +
                      " used with F_" + std::to_string(p_) + "^" + std::to_string(f_));
  }
}

FieldElement FieldSpec::zero() const { return FieldElement{p_, std::vector<std::uint32_t>(f_, 0)}; }

FieldElement FieldSpec::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1 % p_;
  return e;
}

FieldElement FieldSpec::from_int(std::int64_t n) const {
  FieldElement e = zero();
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  e.coeffs[0] = static_cast<std::uint32_t>(r);
  return e;
}

FieldElement FieldSpec::element(std::vector<std::uint32_t> coeffs) const {
  if (coeffs.size() > f_) throw DomainError("too many coefficients for F_" + std::to_string(q_));
  coeffs.resize(f_, 0);
  for (auto c : coeffs) {
    if (c >= p_) throw DomainError("coefficient " + std::to_string(c) + " outside [0, " + std::to_string(p_) + ")");
  }
  return FieldElement{p_, std::move(coeffs)};
}

FieldElement FieldSpec::from_index(std::uint64_t index) const {
  if (index >= q_) throw DomainError("element label " + std::to_string(index) + " outside F_" + std::to_string(q_));
  FieldElement e = zero();
  for (unsigned i = 0; i < f_; ++i) {
    e.coeffs[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t FieldSpec::index(const FieldElement& a) const {
  check(a);
  std::uint64_t r = 0;
  for (unsigned i = f_; i-- > 0;) r = r * p_ + a.coeffs[i];
  return r;
}

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(from_index(i));
  return out;
}

bool FieldSpec::is_zero(const FieldElement& a) const {
  check(a);
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](auto c) { return c == 0; });
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = zero();
  for (unsigned i = 0; i < f_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FieldSpec::neg(const FieldElement& a) const {
  check(a);
  FieldElement r = zero();
  for (unsigned i = 0; i < f_; ++i) r.coeffs[i] = (p_ - a.coeffs[i]) % p_;
  return r;
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  Poly prod = poly_mul(a.coeffs, b.coeffs, p_);
  if (f_ > 1) prod = poly_mod(std::move(prod), modulus_, p_);
  prod.resize(f_, 0);
  return FieldElement{p_, std::move(prod)};
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  if (f_ == 1) return from_int(inv_mod_p(a.coeffs[0], p_));
  // Extended Euclid: track s with s * a == r (mod m).
  Poly r0 = modulus_, r1 = a.coeffs;
  trim(r1);
  Poly s0, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1, p_);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since m is irreducible.
  if (r0.size() != 1) throw DefectError("modulus is not irreducible");
  const std::uint64_t scale = inv_mod_p(r0[0], p_);
  Poly out(f_, 0);
  for (std::size_t i = 0; i < s0.size() && i < f_; ++i) out[i] = static_cast<std::uint32_t>(s0[i] * scale % p_);
  return FieldElement{p_, std::move(out)};
}

FieldElement FieldSpec::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement FieldSpec::pow(const FieldElement& a, std::int64_t exponent) const {
  check(a);
  FieldElement base = a;
  if (exponent < 0) {
    base = inv(a);
    exponent = -exponent;
  }
  FieldElement result = one();
  auto e = static_cast<std::uint64_t>(exponent);
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement FieldSpec::frobenius(const FieldElement& a) const { return pow(a, p_); }

std::vector<FieldElement> FieldSpec::frobenius_orbit(const FieldElement& a) const {
  check(a);
  std::vector<FieldElement> orbit{a};
  for (FieldElement x = frobenius(a); !(x == a); x = frobenius(x)) orbit.push_back(x);
  return orbit;
}

bool FieldSpec::frobenius_is_automorphism() const {
  const auto all = elements();
  std::vector<FieldElement> image;
  image.reserve(all.size());
  for (const auto& x : all) image.push_back(frobenius(x));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (!(frobenius(add(all[i], all[j])) == add(image[i], image[j]))) return false;
      if (!(frobenius(mul(all[i], all[j])) == mul(image[i], image[j]))) return false;
    }
  }
  return true;
}

unsigned FieldSpec::frobenius_order() const {
  const auto all = elements();
  std::vector<FieldElement> current = all;
  for (unsigned k = 1;; ++k) {
    for (auto& x : current) x = frobenius(x);
    if (current == all) return k;
  }
}

std::uint64_t FieldSpec::multiplicative_order(const FieldElement& a) const {
  if (is_zero(a)) throw DivisionByZero("zero has no multiplicative order");
  const std::uint64_t group_order = q_ - 1;
  std::uint64_t order = group_order;
  for (const auto& [r, e] : factorize(group_order)) {
    for (unsigned i = 0; i < e && order % r == 0; ++i) {
      if (pow(a, static_cast<std::int64_t>(order / r)) == one()) {
        order /= r;
      } else {
        break;
      }
    }
  }
  return order;
}

FieldElement FieldSpec::multiplicative_generator() const {
  const std::uint64_t group_order = q_ - 1;
  const auto prime_factors = factorize(group_order);
  for (std::uint64_t label = 1; label < q_; ++label) {
    FieldElement g = from_index(label);
    bool primitive = true;
    for (const auto& [r, e] : prime_factors) {
      if (pow(g, static_cast<std::int64_t>(group_order / r)) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw DefectError("F_" + std::to_string(q_) + " has no multiplicative generator");
}

namespace {

std::string poly_string(const std::vector<std::uint32_t>& c, const char* var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!c[i]) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c[i];
      continue;
    }
    if (c[i] != 1) out << c[i];
    out << var;
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace

std::string FieldSpec::to_string(const FieldElement& a) const {
  check(a);
  return poly_string(a.coeffs, "t");
}

std::string FieldSpec::modulus_string() const { return poly_string(modulus_, "t"); }

}  // namespace fgt

namespace fgt {

std::string check_field_axioms(const FieldSpec& field) {
  const std::uint64_t q = field.q();
  if (q > 4096) throw ResourceError("exhaustive axiom check is limited to q <= 4096");
  const auto els = field.elements();
  std::vector<std::uint32_t> add(q * q), mul(q * q);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      add[a * q + b] = static_cast<std::uint32_t>(field.index(field.add(els[a], els[b])));
      mul[a * q + b] = static_cast<std::uint32_t>(field.index(field.mul(els[a], els[b])));
    }
  }
  const std::string tag = "F_" + std::to_string(q) + ": ";
  for (std::uint64_t a = 0; a < q; ++a) {
    if (add[a * q] != a) return tag + "0 is not an additive identity";
    if (mul[a * q + 1] != a) return tag + "1 is not a multiplicative identity";
    bool has_neg = false, has_inv = a == 0;
    for (std::uint64_t b = 0; b < q; ++b) {
      if (add[a * q + b] != add[b * q + a]) return tag + "addition is not commutative";
      if (mul[a * q + b] != mul[b * q + a]) return tag + "multiplication is not commutative";
      has_neg |= add[a * q + b] == 0;
      has_inv |= mul[a * q + b] == 1;
    }
    if (!has_neg) return tag + "missing additive inverse for label " + std::to_string(a);
    if (!has_inv) return tag + "missing multiplicative inverse for label " + std::to_string(a);
  }
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      const std::uint64_t ab_add = add[a * q + b], ab_mul = mul[a * q + b];
      for (std::uint64_t c = 0; c < q; ++c) {
        if (add[ab_add * q + c] != add[a * q + add[b * q + c]]) return tag + "addition is not associative";
        if (mul[ab_mul * q + c] != mul[a * q + mul[b * q + c]]) return tag + "multiplication is not associative";
        if (mul[a * q + add[b * q + c]] != add[ab_mul * q + mul[a * q + c]]) return tag + "distributivity fails";
      }
    }
  }
  return {};
}

}  // namespace fgt
