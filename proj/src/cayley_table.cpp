#include "fgt/cayley_table.hpp"

#include "fgt/errors.hpp"

namespace fgt {

CayleyTable::CayleyTable(const PermGroup& g, std::uint64_t max_order) {
  if (g.order() > max_order) {
    throw ResourceError("group of order " + to_decimal(g.order()) + " exceeds the Cayley table bound " +
                        std::to_string(max_order));
  }
  elements_ = g.elements();
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<ElementIndex>(i));
  table_.resize(n * n);
  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
    inverse_[a] = index_.at(elements_[a].inverse());
    orders_[a] = elements_[a].order();
  }
  for (const auto& gen : g.generators()) generator_indices_.push_back(index_.at(gen));
}

ElementIndex CayleyTable::index_of(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw DomainError("permutation " + g.to_cycle_string() + " is not in the group");
  return it->second;
}

bool CayleyTable::is_abelian() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (table_[a * n + b] != table_[b * n + a]) return false;
    }
  }
  return true;
}

Permutation CayleyTable::right_regular(ElementIndex a) const {
  std::vector<Point> images(size());
  for (ElementIndex x = 0; x < size(); ++x) images[x] = mul(x, a);
  return Permutation(std::move(images));
}

Permutation CayleyTable::conjugation_action(ElementIndex a) const {
  std::vector<Point> images(size());
  for (ElementIndex x = 0; x < size(); ++x) images[x] = mul(mul(inv(a), x), a);
  return Permutation(std::move(images));
}

PermGroup CayleyTable::regular_group() const {
  std::vector<Permutation> gens;
  for (ElementIndex a : generator_indices_) gens.push_back(right_regular(a));
  return PermGroup(size(), std::move(gens));
}

bool CayleyTable::is_automorphism(const std::vector<ElementIndex>& map, std::string* violation) const {
  const std::size_t n = size();
  auto fail = [&](const std::string& why) {
    if (violation) *violation = why;
    return false;
  };
  if (map.size() != n) return fail("map has " + std::to_string(map.size()) + " entries, group has " + std::to_string(n));
  std::vector<bool> hit(n, false);
  for (ElementIndex x : map) {
    if (x >= n || hit[x]) return fail("map is not a bijection");
    hit[x] = true;
  }
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      if (map[mul(a, b)] != mul(map[a], map[b])) {
        return fail("mu(x*y) != mu(x)*mu(y) for x = " + elements_[a].to_cycle_string() +
                    ", y = " + elements_[b].to_cycle_string());
      }
    }
  }
  return true;
}

PermGroup group_from_multiplication(std::size_t n, const std::function<ElementIndex(ElementIndex, ElementIndex)>& mul,
                                    const std::vector<ElementIndex>& generators) {
  std::vector<ElementIndex> table(n * n);
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      table[a * n + b] = mul(a, b);
      if (table[a * n + b] >= n) throw DefectError("product outside the element range");
    }
  }
  for (ElementIndex a = 0; a < n; ++a) {
    if (table[a] != a || table[a * n] != a) throw DefectError("element 0 is not the identity");
    for (ElementIndex b = 0; b < n; ++b) {
      for (ElementIndex c = 0; c < n; ++c) {
        if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) {
          throw DefectError("multiplication is not associative");
        }
      }
    }
  }
  std::vector<Permutation> gens;
  for (ElementIndex g : generators) {
    std::vector<Point> images(n);
    for (ElementIndex x = 0; x < n; ++x) images[x] = table[x * n + g];
    gens.emplace_back(std::move(images));
  }
  PermGroup group(n, std::move(gens));
  if (group.order() != n) throw DefectError("generators do not generate the whole group");
  return group;
}

}  // namespace fgt
