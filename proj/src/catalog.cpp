#include <algorithm>
#include <map>

#include "fgt/character_table.hpp"
#include "fgt/errors.hpp"
#include "fgt/group_zoo.hpp"

namespace fgt {

namespace {

struct Reference {
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> degrees;
  std::uint64_t aut_order;
};

// Automorphism group orders of the abelian groups of order < 16.
const std::map<std::string, std::uint64_t>& abelian_aut_orders() {
  static const std::map<std::string, std::uint64_t> table = {
      {"Z1", 1},  {"Z2", 1},    {"Z3", 2},      {"Z4", 2},  {"Z2xZ2", 6},  {"Z5", 4},   {"Z6", 2},
      {"Z7", 6},  {"Z8", 4},    {"Z4xZ2", 8},   {"Z2xZ2xZ2", 168},         {"Z9", 6},   {"Z3xZ3", 48},
      {"Z10", 4}, {"Z11", 10},  {"Z12", 4},     {"Z6xZ2", 12},             {"Z13", 12}, {"Z14", 6},
      {"Z15", 8},
  };
  return table;
}

struct Nonabelian {
  const char* name;
  const char* construction;
  const char* notes;
  PermGroup (*build)();
  Reference reference;
};

const std::vector<Nonabelian>& nonabelian_table() {
  static const std::vector<Nonabelian> table = {
      {"S3", "symmetric(3)", "Sym3 = D3 = Hol(Z3), smallest nonabelian group", [] { return symmetric_group(3); },
       {{1, 3, 2}, {1, 1, 2}, 6}},
      {"D4", "dihedral(4)", "symmetries of the square; Out = Z2", [] { return dihedral_group(4); },
       {{1, 1, 2, 2, 2}, {1, 1, 1, 1, 2}, 8}},
      {"Q", "quaternion()", "dicyclic Q_2 = {±1, ±i, ±j, ±k}; Out = S3", [] { return quaternion_group(); },
       {{1, 1, 2, 2, 2}, {1, 1, 1, 1, 2}, 24}},
      {"D5", "dihedral(5)", "Z5 ⋊ Z2", [] { return dihedral_group(5); }, {{1, 5, 2, 2}, {1, 1, 2, 2}, 20}},
      {"Alt4", "alternating(4)", "V ⋊ Z3, rotations of the tetrahedron", [] { return alternating_group(4); },
       {{1, 3, 4, 4}, {1, 1, 1, 3}, 24}},
      {"D6", "dihedral(6)", "D6 = Z2 x S3", [] { return dihedral_group(6); },
       {{1, 1, 3, 3, 2, 2}, {1, 1, 1, 1, 2, 2}, 12}},
      {"Dic3", "dicyclic(3)", "dicyclic Q_3 = Z3 ⋊ Z4", [] { return dicyclic_group(3); },
       {{1, 1, 3, 3, 2, 2}, {1, 1, 1, 1, 2, 2}, 12}},
      {"D7", "dihedral(7)", "Z7 ⋊ Z2", [] { return dihedral_group(7); }, {{1, 7, 2, 2, 2}, {1, 1, 2, 2, 2}, 42}},
  };
  return table;
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

CatalogEntry describe(const std::string& name, const std::string& construction, const std::string& notes,
                      const PermGroup& g, const Reference& ref) {
  CatalogEntry e;
  e.order = g.order_u64();
  e.name = name;
  e.construction = construction;
  e.notes = notes;
  e.is_abelian = g.is_abelian();
  e.class_sizes = conjugacy_classes(g).class_sizes;
  e.irrep_degrees = character_table(g).degrees;
  e.aut_order = automorphism_group(g).aut_order;

  auto fail = [&](const std::string& what) { throw DefectError("catalog entry " + name + ": " + what); };
  std::uint64_t class_sum = 0, degree_sq = 0;
  for (auto c : e.class_sizes) class_sum += c;
  for (auto d : e.irrep_degrees) degree_sq += d * d;
  if (class_sum != e.order) fail("class sizes do not sum to the order");
  if (degree_sq != e.order) fail("squared degrees do not sum to the order");
  if (e.class_sizes.size() != e.irrep_degrees.size()) fail("class count differs from irrep count");
  if (sorted(e.class_sizes) != sorted(ref.class_sizes)) fail("class sizes differ from the reference");
  if (sorted(e.irrep_degrees) != sorted(ref.degrees)) fail("irrep degrees differ from the reference");
  if (e.aut_order != ref.aut_order) fail("|Aut| = " + std::to_string(e.aut_order) + " differs from the reference");
  return e;
}

}  // namespace

std::vector<CatalogEntry> small_group_catalog() {
  std::vector<CatalogEntry> entries;
  for (std::uint64_t n = 1; n < 16; ++n) {
    for (const auto& type : abelian_types(n)) {
      const std::string name = type.name();
      auto it = abelian_aut_orders().find(name);
      if (it == abelian_aut_orders().end()) throw DefectError("no reference data for " + name);
      std::string divisors;
      for (auto f : type.factors) divisors += (divisors.empty() ? "" : ",") + std::to_string(f);
      const std::string construction = "abelian(" + divisors + ")";
      const std::string notes = type.invariant_factors().size() <= 1 ? "cyclic" : "elementary divisors " + divisors;
      Reference ref{std::vector<std::uint64_t>(n, 1), std::vector<std::uint64_t>(n, 1), it->second};
      entries.push_back(describe(name, construction, notes, abelian_group(type.factors), ref));
    }
  }
  for (const auto& na : nonabelian_table()) entries.push_back(describe(na.name, na.construction, na.notes, na.build(), na.reference));
  std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::tie(a.order, a.name) < std::tie(b.order, b.name);
  });
  return entries;
}

}  // namespace fgt
