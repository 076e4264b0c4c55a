#include "fgt/group_zoo.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "fgt/errors.hpp"
#include "fgt/limits.hpp"

namespace fgt {

namespace {

Permutation cycle_on(std::size_t degree, Point start, std::size_t length) {
  std::vector<Point> c(length);
  std::iota(c.begin(), c.end(), start);
  return Permutation::from_cycles(degree, {c});
}

std::size_t to_size(std::uint64_t n, const char* what, std::uint64_t max_degree = 1u << 16) {
  if (n > max_degree) {
    throw ResourceError(std::string(what) + " needs " + std::to_string(n) + " points, above " +
                        std::to_string(max_degree));
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

PermGroup cyclic_group(std::uint64_t n) {
  if (n == 0) throw ValidationError("cyclic group needs n >= 1");
  const std::size_t d = to_size(n, "cyclic group");
  if (d == 1) return PermGroup(1);
  return PermGroup(d, {cycle_on(d, 0, d)});
}

PermGroup dihedral_group(std::uint64_t n) {
  if (n < 3) {
    throw ValidationError("dihedral group needs n >= 3: there is no D_2 (Z_2 has no nontrivial automorphism, so "
                          "\"D_2\" would be the direct product Z_2 x Z_2, and D_1 would be Z_2)");
  }
  const std::size_t d = to_size(n, "dihedral group");
  std::vector<Point> reflection(d);
  for (std::size_t x = 0; x < d; ++x) reflection[x] = static_cast<Point>((d - x) % d);
  return PermGroup(d, {cycle_on(d, 0, d), Permutation(std::move(reflection))});
}

PermGroup dicyclic_group(std::uint64_t n) {
  if (n < 2) throw ValidationError("dicyclic group Q_n needs n >= 2 (Q_1 would be cyclic of order 4)");
  const std::uint64_t m = 2 * n;
  to_size(4 * n, "dicyclic group", 4096);
  // Element a^k b^j has index k + m j, 0 <= k < 2n, j in {0, 1}. Uses b a^l = a^-l b and b^2 = a^n.
  auto mul = [m, n](ElementIndex x, ElementIndex y) -> ElementIndex {
    std::uint64_t k = x % m, j = x / m, l = y % m, i = y / m;
    if (j == 0) return static_cast<ElementIndex>((k + l) % m + m * i);
    std::uint64_t e = (k + m - l) % m;
    if (i == 0) return static_cast<ElementIndex>(e + m);
    return static_cast<ElementIndex>((e + n) % m);
  };
  return group_from_multiplication(4 * n, mul, {1, static_cast<ElementIndex>(m)});
}

namespace {

// Signed monomials ±γ_S, S a bitmask with generators in increasing order.
// Index = mask + 2^n * (sign is negative).
PermGroup clifford_impl(unsigned n, bool even_only) {
  if (n == 0) throw ValidationError("Clifford group needs n >= 1");
  if (n > 10) throw ResourceError("Clifford group order 2^" + std::to_string(n + 1) + " is above the supported size");
  const std::uint32_t full = 1u << n;
  auto mul_signed = [n](std::uint32_t a, std::uint32_t b) {
    // Moving each γ_j of b left past the γ_i of a with i > j costs a sign each;
    // each common γ_j then squares to -1.
    unsigned flips = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (!(b >> j & 1)) continue;
      flips += static_cast<unsigned>(__builtin_popcount(a >> (j + 1)));
    }
    flips += static_cast<unsigned>(__builtin_popcount(a & b));
    return std::pair<std::uint32_t, bool>{a ^ b, flips % 2 == 1};
  };
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < full; ++s) {
    if (!even_only || __builtin_popcount(s) % 2 == 0) masks.push_back(s);
  }
  std::vector<std::int32_t> position(full, -1);
  for (std::size_t i = 0; i < masks.size(); ++i) position[masks[i]] = static_cast<std::int32_t>(i);
  const std::size_t half = masks.size();
  auto mul = [&](ElementIndex x, ElementIndex y) -> ElementIndex {
    bool sx = x >= half, sy = y >= half;
    auto [mask, flip] = mul_signed(masks[x % half], masks[y % half]);
    bool sign = sx ^ sy ^ flip;
    return static_cast<ElementIndex>(position[mask] + (sign ? half : 0));
  };
  std::vector<ElementIndex> gens{static_cast<ElementIndex>(half)};  // -1
  if (even_only) {
    for (unsigned i = 0; i + 1 < n; ++i) gens.push_back(static_cast<ElementIndex>(position[(1u << i) | (1u << (i + 1))]));
  } else {
    for (unsigned i = 0; i < n; ++i) gens.push_back(static_cast<ElementIndex>(position[1u << i]));
  }
  return group_from_multiplication(2 * half, mul, gens);
}

}  // namespace

PermGroup clifford_group(unsigned n) { return clifford_impl(n, false); }
PermGroup clifford_even_group(unsigned n) { return clifford_impl(n, true); }

PermGroup symmetric_group(std::uint64_t n) {
  if (n == 0) throw ValidationError("symmetric group needs n >= 1");
  const std::size_t d = to_size(n, "symmetric group");
  if (d == 1) return PermGroup(1);
  if (d == 2) return PermGroup(2, {cycle_on(2, 0, 2)});
  return PermGroup(d, {cycle_on(d, 0, 2), cycle_on(d, 0, d)});
}

PermGroup alternating_group(std::uint64_t n) {
  if (n == 0) throw ValidationError("alternating group needs n >= 1");
  const std::size_t d = to_size(n, "alternating group");
  if (d < 3) return PermGroup(d);
  // (0 1 2) with the (n-1)- or n-cycle fixing 0 or not, whichever is even.
  Permutation big = d % 2 == 1 ? cycle_on(d, 0, d) : cycle_on(d, 1, d - 1);
  return PermGroup(d, {cycle_on(d, 0, 3), big});
}

PermGroup vierergruppe() {
  return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup quaternion_group() { return dicyclic_group(2); }

PermGroup frobenius21() {
  std::vector<Point> shift(7), scale(7);
  for (Point x = 0; x < 7; ++x) {
    shift[x] = (x + 1) % 7;
    scale[x] = (2 * x) % 7;
  }
  return PermGroup(7, {Permutation(std::move(shift)), Permutation(std::move(scale))});
}

PermGroup elementary_abelian_group(std::uint64_t p, unsigned m) {
  if (!is_prime(p)) throw ValidationError("elementary abelian group needs a prime, got " + std::to_string(p));
  if (m == 0) return PermGroup(1);
  return abelian_group(std::vector<std::uint64_t>(m, p));
}

const std::vector<std::string>& named_families() {
  static const std::vector<std::string> names = {"cyclic",       "dihedral",      "dicyclic",   "clifford",
                                                 "clifford_even", "symmetric",    "alternating", "vierergruppe",
                                                 "quaternion",   "frobenius21",   "elementary_abelian"};
  return names;
}

PermGroup construct_named(std::string_view name, const std::vector<std::uint64_t>& params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw ValidationError("group family '" + std::string(name) + "' takes " + std::to_string(count) +
                            " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (name == "cyclic") return want(1), cyclic_group(params[0]);
  if (name == "dihedral") return want(1), dihedral_group(params[0]);
  if (name == "dicyclic") return want(1), dicyclic_group(params[0]);
  if (name == "clifford") return want(1), clifford_group(static_cast<unsigned>(std::min<std::uint64_t>(params[0], 64)));
  if (name == "clifford_even") {
    return want(1), clifford_even_group(static_cast<unsigned>(std::min<std::uint64_t>(params[0], 64)));
  }
  if (name == "symmetric") return want(1), symmetric_group(params[0]);
  if (name == "alternating") return want(1), alternating_group(params[0]);
  if (name == "vierergruppe") return want(0), vierergruppe();
  if (name == "quaternion") return want(0), quaternion_group();
  if (name == "frobenius21") return want(0), frobenius21();
  if (name == "elementary_abelian") {
    want(2);
    return elementary_abelian_group(params[0], static_cast<unsigned>(std::min<std::uint64_t>(params[1], 1u << 16)));
  }
  std::string known;
  for (const auto& n : named_families()) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("unknown group family '" + std::string(name) + "' (known: " + known + ")");
}

// ---- Abelian groups -------------------------------------------------------

std::uint64_t AbelianType::order() const {
  std::uint64_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

std::vector<std::uint64_t> AbelianType::invariant_factors() const {
  // Group the prime powers by prime, largest first; the k-th largest of each
  // prime multiply into the k-th largest invariant factor.
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (auto f : factors) by_prime[prime_power_decomposition(f).first].push_back(f);
  std::vector<std::uint64_t> result;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.rbegin(), powers.rend());
    if (result.size() < powers.size()) result.resize(powers.size(), 1);
    for (std::size_t k = 0; k < powers.size(); ++k) result[k] *= powers[k];
  }
  std::reverse(result.begin(), result.end());
  return result;
}

std::string AbelianType::name() const {
  auto inv = invariant_factors();
  if (inv.empty()) return "Z1";
  std::string s;
  for (auto it = inv.rbegin(); it != inv.rend(); ++it) s += (s.empty() ? "Z" : "xZ") + std::to_string(*it);
  return s;
}

PermGroup abelian_group(const std::vector<std::uint64_t>& cyclic_orders) {
  std::uint64_t degree = 0;
  for (auto c : cyclic_orders) {
    if (c == 0) throw ValidationError("cyclic factor of order 0");
    degree += c;
  }
  const std::size_t d = to_size(std::max<std::uint64_t>(degree, 1), "abelian group");
  std::vector<Permutation> gens;
  Point start = 0;
  for (auto c : cyclic_orders) {
    if (c > 1) gens.push_back(cycle_on(d, start, c));
    start += static_cast<Point>(c);
  }
  return PermGroup(d, std::move(gens));
}

namespace {

void partitions_of(unsigned n, unsigned max_part, std::vector<unsigned>& current,
                   std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_of(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<AbelianType> abelian_types(std::uint64_t n) {
  if (n == 0) throw ValidationError("group order must be positive");
  std::vector<AbelianType> result{AbelianType{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> scratch;
    partitions_of(e, e, scratch, parts);
    std::vector<AbelianType> next;
    for (const auto& base : result) {
      for (const auto& part : parts) {
        AbelianType t = base;
        for (unsigned k : part) t.factors.push_back(ipow(p, k));
        next.push_back(std::move(t));
      }
    }
    result = std::move(next);
  }
  return result;
}

BigInt partition_count(std::uint64_t n) {
  if (n > 100000) throw ResourceError("partition count above n = 100000");
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    BigInt total = 0;
    for (std::int64_t k = 1;; ++k) {
      // Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2.
      std::uint64_t g1 = static_cast<std::uint64_t>(k * (3 * k - 1) / 2);
      if (g1 > m) break;
      const bool plus = k % 2 == 1;
      total += plus ? p[m - g1] : -p[m - g1];
      std::uint64_t g2 = static_cast<std::uint64_t>(k * (3 * k + 1) / 2);
      if (g2 <= m) total += plus ? p[m - g2] : -p[m - g2];
    }
    p[m] = total;
  }
  return p[n];
}

BigInt count_abelian_groups(std::uint64_t n) {
  if (n == 0) throw ValidationError("group order must be positive");
  BigInt count = 1;
  for (auto [p, e] : factorize(n)) count *= partition_count(e);
  return count;
}

// ---- Products -------------------------------------------------------------

ActionMap trivial_action(const PermGroup& a, const PermGroup& b) {
  const auto n = static_cast<std::size_t>(a.order_u64());
  return ActionMap{std::vector<Permutation>(b.generators().size(), Permutation(n))};
}

PermGroup semidirect_product(const PermGroup& a, const PermGroup& b, const ActionMap& action) {
  CayleyTable ta(a), tb(b);
  const std::size_t na = ta.size(), nb = tb.size();
  if (action.generator_images.size() != b.generators().size()) {
    throw ValidationError("action assigns " + std::to_string(action.generator_images.size()) + " images for " +
                          std::to_string(b.generators().size()) + " generators of B");
  }
  std::vector<std::vector<ElementIndex>> gen_maps;
  for (std::size_t j = 0; j < action.generator_images.size(); ++j) {
    const auto& img = action.generator_images[j];
    if (img.degree() != na) {
      throw ValidationError("image of generator " + std::to_string(j) + " acts on " + std::to_string(img.degree()) +
                            " points, A has " + std::to_string(na) + " elements");
    }
    std::vector<ElementIndex> map(img.images().begin(), img.images().end());
    std::string why;
    if (!ta.is_automorphism(map, &why)) {
      throw ValidationError("image of generator " + std::to_string(j) + " of B is not an automorphism of A: " + why);
    }
    gen_maps.push_back(std::move(map));
  }

  // Extend to mu: B -> Aut(A) with mu(x g) = mu(x) o mu(g).
  std::vector<std::vector<ElementIndex>> mu(nb);
  mu[0].resize(na);
  std::iota(mu[0].begin(), mu[0].end(), 0);
  std::deque<ElementIndex> queue{0};
  while (!queue.empty()) {
    ElementIndex x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gen_maps.size(); ++j) {
      ElementIndex y = tb.mul(x, tb.generator_indices()[j]);
      std::vector<ElementIndex> candidate(na);
      for (ElementIndex e = 0; e < na; ++e) candidate[e] = mu[x][gen_maps[j][e]];
      if (mu[y].empty()) {
        mu[y] = std::move(candidate);
        queue.push_back(y);
      } else if (mu[y] != candidate) {
        throw ValidationError("action does not respect the relations of B: mu(" + tb.element(x).to_cycle_string() +
                              " * " + tb.element(tb.generator_indices()[j]).to_cycle_string() +
                              ") differs from mu(x) o mu(g)");
      }
    }
  }

  const std::size_t degree = na * nb;
  std::vector<Permutation> gens;
  for (ElementIndex ag : ta.generator_indices()) {
    std::vector<Point> images(degree);
    for (ElementIndex y = 0; y < nb; ++y) {
      for (ElementIndex x = 0; x < na; ++x) images[x + na * y] = static_cast<Point>(ta.mul(x, mu[y][ag]) + na * y);
    }
    gens.emplace_back(std::move(images));
  }
  for (ElementIndex bg : tb.generator_indices()) {
    std::vector<Point> images(degree);
    for (ElementIndex y = 0; y < nb; ++y) {
      for (ElementIndex x = 0; x < na; ++x) images[x + na * y] = static_cast<Point>(x + na * tb.mul(y, bg));
    }
    gens.emplace_back(std::move(images));
  }
  PermGroup product(degree, std::move(gens));
  if (product.order() != degree) throw DefectError("semidirect product has the wrong order");
  return product;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree(), d = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images(d);
    std::iota(images.begin(), images.end(), 0);
    for (Point x = 0; x < da; ++x) images[x] = g[x];
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> images(d);
    std::iota(images.begin(), images.end(), 0);
    for (Point x = 0; x < b.degree(); ++x) images[da + x] = static_cast<Point>(da + g[x]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(d, std::move(gens));
}

std::optional<PermGroup> nonabelian_semidirect_pq(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q)) throw ValidationError("p and q must be primes");
  PermGroup a = cyclic_group(q), b = cyclic_group(p);
  CayleyTable ta(a);
  for (std::uint64_t r = 2; r < q; ++r) {
    std::vector<Point> images(ta.size());
    for (ElementIndex x = 0; x < ta.size(); ++x) images[x] = ta.index_of(ta.element(x).pow(static_cast<std::int64_t>(r)));
    try {
      return semidirect_product(a, b, ActionMap{{Permutation(std::move(images))}});
    } catch (const ValidationError&) {
      // x -> x^r has order not dividing p.
    }
  }
  return std::nullopt;
}

// ---- Automorphisms --------------------------------------------------------

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const CayleyTable& t) : t_(t), n_(t.size()) { choose_generators(); }

  const std::vector<ElementIndex>& gens() const { return gens_; }

  // Map on <gens[0..count)> induced by images[0..count), or empty if it is
  // not a well-defined injective homomorphism there.
  std::vector<std::int64_t> partial_map(const std::vector<ElementIndex>& images, std::size_t count) const {
    std::vector<std::int64_t> map(n_, -1);
    std::vector<bool> used(n_, false);
    map[0] = 0;
    used[0] = true;
    std::vector<ElementIndex> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ElementIndex x = queue[head];
      for (std::size_t j = 0; j < count; ++j) {
        ElementIndex y = t_.mul(x, gens_[j]);
        auto fy = static_cast<std::int64_t>(t_.mul(static_cast<ElementIndex>(map[x]), images[j]));
        if (map[y] == -1) {
          if (used[fy]) return {};
          map[y] = fy;
          used[fy] = true;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return {};
        }
      }
    }
    return map;
  }

  // Completes images[level..] depth first; true on success.
  bool complete(std::vector<ElementIndex>& images, std::size_t level) const {
    if (level == gens_.size()) return true;
    for (ElementIndex y = 1; y < n_; ++y) {
      if (t_.element_order(y) != t_.element_order(gens_[level])) continue;
      images[level] = y;
      if (partial_map(images, level + 1).empty()) continue;
      if (complete(images, level + 1)) return true;
    }
    return false;
  }

 private:
  void choose_generators() {
    std::vector<ElementIndex> by_order(n_);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](ElementIndex a, ElementIndex b) { return t_.element_order(a) > t_.element_order(b); });
    std::vector<bool> in_subgroup(n_, false);
    in_subgroup[0] = true;
    std::size_t covered = 1;
    for (ElementIndex g : by_order) {
      if (covered == n_) break;
      if (in_subgroup[g]) continue;
      gens_.push_back(g);
      std::vector<ElementIndex> queue;
      for (ElementIndex x = 0; x < n_; ++x) {
        if (in_subgroup[x]) queue.push_back(x);
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (ElementIndex s : gens_) {
          ElementIndex y = t_.mul(queue[head], s);
          if (!in_subgroup[y]) {
            in_subgroup[y] = true;
            queue.push_back(y);
          }
        }
      }
      covered = queue.size();
    }
  }

  const CayleyTable& t_;
  std::size_t n_;
  std::vector<ElementIndex> gens_;
};

}  // namespace

AutomorphismGroup automorphism_group(const PermGroup& g) {
  const std::uint64_t bound = limits().automorphism_bound;
  if (g.order() > bound) {
    throw ResourceError("automorphism search is limited to groups of order <= " + std::to_string(bound) + ", got " +
                        to_decimal(g.order()));
  }
  CayleyTable t(g);
  const std::size_t n = t.size();
  AutomorphismSearch search(t);
  const auto& gens = search.gens();

  // Level i: orbit of gens[i] under the automorphisms fixing gens[0..i).
  std::vector<Permutation> witnesses;
  std::uint64_t aut_order = 1;
  for (std::size_t level = 0; level < gens.size(); ++level) {
    std::uint64_t orbit = 0;
    for (ElementIndex y = 1; y < n; ++y) {
      if (t.element_order(y) != t.element_order(gens[level])) continue;
      std::vector<ElementIndex> images(gens.begin(), gens.end());
      images[level] = y;
      if (search.partial_map(images, level + 1).empty()) continue;
      if (!search.complete(images, level + 1)) continue;
      ++orbit;
      auto map = search.partial_map(images, gens.size());
      std::vector<ElementIndex> full(map.begin(), map.end());
      std::string why;
      if (!t.is_automorphism(full, &why)) throw DefectError("automorphism witness failed verification: " + why);
      if (y != gens[level]) witnesses.emplace_back(std::vector<Point>(full.begin(), full.end()));
    }
    aut_order *= orbit;
  }

  PermGroup aut(n, std::move(witnesses));
  if (aut.order() != aut_order) throw DefectError("automorphism orbit product disagrees with the generated group");

  std::uint64_t center = 0;
  for (ElementIndex x = 0; x < n; ++x) {
    bool central = std::all_of(gens.begin(), gens.end(), [&](ElementIndex s) { return t.mul(x, s) == t.mul(s, x); });
    if (central) ++center;
  }
  AutomorphismGroup result{std::move(aut), aut_order, n / center, 0};
  result.out_order = aut_order / result.inn_order;
  return result;
}

PermGroup holomorph(const PermGroup& a) {
  if (!a.is_abelian()) {
    throw ValidationError("the holomorph is only formed for abelian groups: for nonabelian G the inner "
                          "automorphisms would repeat G");
  }
  auto aut = automorphism_group(a);
  // The action must satisfy mu(b b') = mu(b) o mu(b'); with products applied
  // left to right, b -> b^-1 does.
  ActionMap action;
  for (const auto& s : aut.group.generators()) action.generator_images.push_back(s.inverse());
  return semidirect_product(a, aut.group, action);
}

}  // namespace fgt
