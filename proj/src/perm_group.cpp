#include "fgt/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "fgt/errors.hpp"
#include "fgt/limits.hpp"

namespace fgt {

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Point> base_prefix)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw DomainError("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                        std::to_string(degree));
    }
  }
  generators_ = std::move(generators);

  std::vector<Permutation> strong;
  for (const auto& g : generators_) {
    if (!g.is_identity()) strong.push_back(g);
  }
  std::vector<Point> base;
  for (Point b : base_prefix) {
    if (b >= degree) throw DomainError("base point " + std::to_string(b) + " out of range");
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  }
  for (const auto& s : strong) {
    bool fixes_base = std::all_of(base.begin(), base.end(), [&](Point b) { return s[b] == b; });
    if (fixes_base) base.push_back(*s.first_moved_point());
  }
  if (strong.empty()) base.clear();

  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base_point = base[i];
    for (const auto& s : strong) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = s[base[j]] == base[j];
      if (fixes) levels_[i].generators.push_back(s);
    }
    rebuild_orbit(i);
  }
  schreier_sims();

  // Trailing levels with trivial orbits carry no information.
  while (!levels_.empty() && levels_.back().orbit.size() == 1) levels_.pop_back();
}

void PermGroup::rebuild_orbit(std::size_t level) {
  ChainLevel& L = levels_[level];
  L.orbit.assign(1, L.base_point);
  L.position.assign(degree_, -1);
  L.position[L.base_point] = 0;
  L.transversal.assign(1, Permutation(degree_));
  L.transversal_inverse.assign(1, Permutation(degree_));
  for (std::size_t idx = 0; idx < L.orbit.size(); ++idx) {
    for (const auto& s : L.generators) {
      Point y = s[L.orbit[idx]];
      if (L.position[y] >= 0) continue;
      L.position[y] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(y);
      L.transversal.push_back(L.transversal[idx] * s);
      L.transversal_inverse.push_back(L.transversal.back().inverse());
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const ChainLevel& L = levels_[l];
    Point beta = g[L.base_point];
    std::int32_t pos = L.position[beta];
    if (pos < 0) return {std::move(g), l};
    g = g * L.transversal_inverse[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t idx = 0; idx < levels_[level].orbit.size() && !restarted; ++idx) {
      for (std::size_t s_idx = 0; s_idx < levels_[level].generators.size(); ++s_idx) {
        const ChainLevel& L = levels_[level];
        const Permutation& s = L.generators[s_idx];
        Point gamma = s[L.orbit[idx]];
        auto pos = static_cast<std::size_t>(L.position[gamma]);
        Permutation schreier = L.transversal[idx] * s;
        if (schreier == L.transversal[pos]) continue;
        schreier = schreier * L.transversal_inverse[pos];
        auto [residue, stop] = sift(std::move(schreier), level + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          ChainLevel fresh;
          fresh.base_point = *residue.first_moved_point();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = level + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& L : levels_) out.push_back(L.base_point);
  return out;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  return levels_.empty() ? std::vector<Permutation>{} : levels_.front().generators;
}

BigInt PermGroup::order() const {
  BigInt r = 1;
  for (const auto& L : levels_) r *= L.orbit.size();
  return r;
}

std::uint64_t PermGroup::order_u64() const {
  BigInt r = order();
  if (r > std::numeric_limits<std::uint64_t>::max()) throw ResourceError("group order " + r.str() + " exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    throw DomainError("permutation of degree " + std::to_string(g.degree()) + " tested against a group of degree " +
                      std::to_string(degree_));
  }
  return sift(g, 0).first.is_identity();
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw DomainError("point " + std::to_string(x) + " out of range");
  std::vector<Point> out{x};
  std::vector<char> seen(degree_, 0);
  seen[x] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators_) {
      Point y = g[out[i]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<Point> PermGroup::support() const {
  std::vector<Point> out;
  for (Point x = 0; x < degree_; ++x) {
    for (const auto& g : generators_) {
      if (g[x] != x) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

PermGroup PermGroup::stabilizer(Point x) const {
  if (x >= degree_) throw DomainError("point " + std::to_string(x) + " out of range");
  PermGroup rebased(degree_, strong_generators(), {x});
  if (rebased.levels_.empty() || rebased.levels_.front().base_point != x) return rebased;
  if (rebased.levels_.size() < 2) return PermGroup(degree_);
  std::vector<Point> rest;
  for (std::size_t l = 1; l < rebased.levels_.size(); ++l) rest.push_back(rebased.levels_[l].base_point);
  return PermGroup(degree_, rebased.levels_[1].generators, rest);
}

PermGroup PermGroup::extended(const Permutation& g) const {
  auto gens = strong_generators();
  gens.push_back(g);
  return PermGroup(degree_, std::move(gens), base());
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

std::vector<Permutation> PermGroup::elements() const {
  if (order() > limits().enumeration_bound) {
    throw ResourceError("group of order " + order().str() + " exceeds the enumeration bound " +
                        std::to_string(limits().enumeration_bound));
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order()));
  for_each_element([&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation acc(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& t = levels_[l].transversal;
    std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
    acc = acc * t[pick(rng)];
  }
  return acc;
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup(degree, std::move(generators));
}

std::vector<std::vector<Point>> orbit_partition(const PermGroup& g) {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(g.degree(), 0);
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    auto orb = g.orbit(x);
    for (Point y : orb) seen[y] = 1;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

Transitivity transitivity_degree(const PermGroup& g) {
  std::vector<Point> points = g.support();
  PermGroup h = g;
  unsigned k = 0;
  while (!points.empty()) {
    if (h.orbit(points.front()).size() != points.size()) break;
    ++k;
    h = h.stabilizer(points.front());
    points.erase(points.begin());
  }
  return {k, k > 0 && h.is_trivial()};
}

namespace {

struct ClassRecord {
  Permutation rep;
  std::uint64_t size = 0;
  std::uint64_t rep_order = 0;
};

/// Conjugacy class of x under the group generated by `gens`, returned as a
/// member list; `known` receives every member with the class id.
std::vector<Permutation> class_orbit(const Permutation& x, const std::vector<Permutation>& gens,
                                     const std::vector<Permutation>& gens_inv) {
  std::vector<Permutation> members{x};
  std::unordered_set<Permutation, PermutationHash> seen{x};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = gens_inv[s] * members[i] * gens[s];
      if (seen.insert(y).second) members.push_back(std::move(y));
    }
  }
  return members;
}

ClassData finish_classes(std::vector<ClassRecord> records) {
  std::sort(records.begin(), records.end(), [](const ClassRecord& a, const ClassRecord& b) {
    return std::make_tuple(a.size > 1, a.rep_order, -static_cast<std::int64_t>(a.size), std::cref(a.rep)) <
           std::make_tuple(b.size > 1, b.rep_order, -static_cast<std::int64_t>(b.size), std::cref(b.rep));
  });
  ClassData out;
  for (auto& r : records) {
    out.class_sizes.push_back(r.size);
    out.class_rep_orders.push_back(r.rep_order);
    out.representatives.push_back(std::move(r.rep));
    if (r.size == 1) ++out.center_size;
  }
  out.num_classes = out.class_sizes.size();
  return out;
}

}  // namespace

ClassData conjugacy_classes(const PermGroup& g) {
  const BigInt order = g.order();
  if (order > limits().enumeration_bound) {
    throw ResourceError("conjugacy classes: group order " + order.str() + " exceeds the enumeration bound " +
                        std::to_string(limits().enumeration_bound) + "; use the order census instead");
  }
  const auto n = static_cast<std::uint64_t>(order);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    if (!s.is_identity()) gens.push_back(s);
  }
  std::vector<Permutation> gens_inv;
  for (const auto& s : gens) gens_inv.push_back(s.inverse());

  std::vector<ClassRecord> records;
  std::unordered_set<Permutation, PermutationHash> classified;
  std::uint64_t covered = 0;
  auto absorb = [&](const Permutation& x) {
    if (classified.count(x)) return;
    auto members = class_orbit(x, gens, gens_inv);
    ClassRecord rec;
    rec.rep = *std::min_element(members.begin(), members.end());
    rec.size = members.size();
    rec.rep_order = x.order();
    for (auto& m : members) classified.insert(std::move(m));
    covered += rec.size;
    records.push_back(std::move(rec));
  };

  if (n <= limits().exhaustive_listing_bound) {
    g.for_each_element([&](const Permutation& x) { absorb(x); });
  } else {
    // Randomized discovery: seeds, powers of each new representative, then
    // random elements until the class sizes account for the whole group.
    absorb(g.identity());
    for (const auto& s : gens) absorb(s);
    std::mt19937_64 rng(0x5eed5eedULL);
    const std::uint64_t max_samples = 200 * n;
    for (std::uint64_t tries = 0; covered < n; ++tries) {
      if (tries > max_samples) {
        throw ResourceError("randomized class discovery did not cover the group after " + std::to_string(tries) +
                            " samples");
      }
      Permutation x = g.random_element(rng);
      const std::size_t before = records.size();
      absorb(x);
      if (records.size() != before) {
        const std::uint64_t ord = x.order();
        for (std::uint64_t k = 2; k < ord; ++k) absorb(x.pow(static_cast<std::int64_t>(k)));
      }
    }
  }
  if (covered != n) throw DefectError("class sizes sum to " + std::to_string(covered) + ", not " + std::to_string(n));
  return finish_classes(std::move(records));
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& elements) {
  std::vector<Permutation> seeds;
  for (const auto& x : elements) {
    if (x.degree() != g.degree()) throw DomainError("normal closure: element degree mismatch");
    if (!x.is_identity()) seeds.push_back(x);
  }
  PermGroup h(g.degree(), seeds);
  std::deque<Permutation> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : g.generators()) {
      Permutation c = x.conjugate_by(s);
      if (h.contains(c)) continue;
      h = h.extended(c);
      queue.push_back(std::move(c));
    }
  }
  return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      commutators.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    }
  }
  return normal_closure(g, commutators);
}

StructureReport structure_report(const PermGroup& g) {
  StructureReport r;
  ClassData classes = conjugacy_classes(g);
  r.center_order = classes.center_size;
  r.derived_order = derived_subgroup(g).order();
  r.abelianization_order = g.order() / r.derived_order;
  r.is_perfect = r.abelianization_order == 1;
  return r;
}

bool is_simple(const PermGroup& g) {
  const BigInt order = g.order();
  if (order == 1) return false;
  if (g.is_abelian()) return order <= std::numeric_limits<std::uint64_t>::max() &&
                              is_prime(static_cast<std::uint64_t>(order));
  ClassData classes = conjugacy_classes(g);
  for (const auto& rep : classes.representatives) {
    if (rep.is_identity()) continue;
    if (normal_closure(g, {rep}).order() != order) return false;
  }
  return true;
}

std::map<std::uint64_t, std::uint64_t> element_order_histogram(const PermGroup& g) {
  if (g.order() > limits().enumeration_bound) {
    throw ResourceError("element-order histogram: group order " + g.order().str() + " exceeds the enumeration bound");
  }
  std::map<std::uint64_t, std::uint64_t> hist;
  g.for_each_element([&](const Permutation& x) { ++hist[x.order()]; });
  return hist;
}

}  // namespace fgt
