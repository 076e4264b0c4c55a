#include "fgt/sporadic_data.hpp"

#include <algorithm>

#include "fgt/errors.hpp"

namespace fgt {

std::string generation_name(Generation g) {
  switch (g) {
    case Generation::Mathieu: return "mathieu";
    case Generation::Leech: return "leech";
    case Generation::Monster: return "monster";
    case Generation::Pariah: return "pariah";
  }
  return "?";
}

namespace {

std::vector<SporadicEntry> build_table() {
  using G = Generation;
  std::vector<SporadicEntry> t = {
      {"M11", "Mathieu", G::Mathieu, {{2, 4}, {3, 2}, {5, 1}, {11, 1}}, "Mathieu 1861"},
      {"M12", "Mathieu", G::Mathieu, {{2, 6}, {3, 3}, {5, 1}, {11, 1}}, "Mathieu 1861"},
      {"J1", "Janko", G::Pariah, {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}, "Janko 1965"},
      {"M22", "Mathieu", G::Mathieu, {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}, "Mathieu 1873"},
      {"J2", "Hall-Janko", G::Leech, {{2, 7}, {3, 3}, {5, 2}, {7, 1}}, "Hall, Janko 1968"},
      {"M23", "Mathieu", G::Mathieu, {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, "Mathieu 1873"},
      {"HS", "Higman-Sims", G::Leech, {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}, "Higman, Sims 1967"},
      {"J3", "Janko", G::Pariah, {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}, "Janko 1968"},
      {"M24", "Mathieu", G::Mathieu, {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, "Mathieu 1873"},
      {"McL", "McLaughlin", G::Leech, {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}, "McLaughlin 1969"},
      {"He", "Held", G::Monster, {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}, "Held 1969"},
      {"Ru", "Rudvalis", G::Pariah, {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}, "Rudvalis 1972"},
      {"Suz", "Suzuki", G::Leech, {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, "Suzuki 1969"},
      {"ON", "O'Nan", G::Pariah, {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}, "O'Nan 1976"},
      {"Co3", "Conway", G::Leech, {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, "Conway 1969"},
      {"Co2", "Conway", G::Leech, {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, "Conway 1969"},
      {"Fi22", "Fischer", G::Monster, {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, "Fischer 1971"},
      {"HN", "Harada-Norton", G::Monster, {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}, "Harada, Norton 1976"},
      {"Ly", "Lyons", G::Pariah, {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}, "Lyons 1972"},
      {"Th", "Thompson", G::Monster, {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}, "Thompson 1976"},
      {"Fi23", "Fischer", G::Monster, {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}},
       "Fischer 1971"},
      {"Co1", "Conway", G::Leech, {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}, "Conway 1969"},
      {"J4", "Janko", G::Pariah,
       {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}, "Janko 1976"},
      {"Fi24'", "Fischer", G::Monster,
       {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}, "Fischer 1971"},
      {"B", "Baby Monster", G::Monster,
       {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}},
       "Fischer 1973"},
      {"M", "Monster", G::Monster,
       {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {41, 1},
        {47, 1}, {59, 1}, {71, 1}},
       "Fischer, Griess 1973"},
  };
  std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.order() < b.order(); });
  return t;
}

}  // namespace

const std::vector<SporadicEntry>& sporadic_table() {
  static const std::vector<SporadicEntry> table = build_table();
  return table;
}

const SporadicEntry& sporadic(const std::string& symbol) {
  for (const auto& e : sporadic_table()) {
    if (e.symbol == symbol) return e;
  }
  throw ValidationError("unknown sporadic group '" + symbol + "'");
}

}  // namespace fgt
