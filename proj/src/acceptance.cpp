#include "fgt/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <unordered_set>

#include "fgt/character_table.hpp"
#include "fgt/codes_lattices.hpp"
#include "fgt/division_algebras.hpp"
#include "fgt/errors.hpp"
#include "fgt/finite_field.hpp"
#include "fgt/group_zoo.hpp"
#include "fgt/matrix_group.hpp"
#include "fgt/moonshine.hpp"

namespace fgt::acceptance {

namespace {

// Collects failed checks; the detail line lists the first few.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    expect(actual == expected, what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary(const std::string& success) const {
    if (ok()) return success + " (" + std::to_string(count_) + " checks)";
    std::string s = std::to_string(failures_.size()) + " of " + std::to_string(count_) + " checks failed: ";
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) s += (i ? "; " : "") + failures_[i];
    return s;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

using Body = std::function<std::pair<bool, std::string>()>;

std::pair<bool, std::string> order_table() {
  Checker c;
  struct Row {
    Family family;
    unsigned n;
    std::uint64_t q;
    std::uint64_t expected;
  };
  const std::vector<Row> rows = {
      {Family::GL, 3, 2, 168},        {Family::GL, 4, 2, 20160},      {Family::PSL, 3, 4, 20160},
      {Family::GL, 4, 3, 24261120},   {Family::SL, 4, 3, 12130560},   {Family::PSL, 4, 3, 6065280},
      {Family::SL, 3, 3, 5616},       {Family::G2, 0, 2, 12096},      {Family::PSL, 2, 9, 360},
      {Family::SL, 2, 8, 504},        {Family::PSL, 2, 11, 660},
  };
  for (const auto& r : rows) {
    OrderResult o = order_formula({r.family, r.n, r.q});
    c.equal(o.order, BigInt(r.expected), o.label + " = " + std::to_string(r.expected));
  }
  return {c.ok(), c.summary("11 orders reproduced exactly")};
}

std::pair<bool, std::string> census_10000() {
  Checker c;
  const auto entries = simple_census(10000);
  std::set<std::pair<std::string, std::string>> got;  // (order, first name)
  std::set<std::string> all_names;
  std::size_t nonabelian = 0, abelian = 0;
  for (const auto& e : entries) {
    for (const auto& n : e.names) all_names.insert(n);
    (e.is_abelian ? abelian : nonabelian)++;
    got.insert({to_decimal(e.order), e.names.front()});
  }
  const std::set<std::pair<std::string, std::string>> expected = {
      {"2", "Z_2"},          {"3", "Z_3"},          {"5", "Z_5"},           {"7", "Z_7"},
      {"60", "Alt_5"},       {"168", "PSL_2(7)"},   {"360", "Alt_6"},       {"504", "PSL_2(8)"},
      {"660", "PSL_2(11)"},  {"1092", "PSL_2(13)"}, {"2448", "PSL_2(17)"},  {"2520", "Alt_7"},
      {"3420", "PSL_2(19)"}, {"4080", "PSL_2(16)"}, {"5616", "PSL_3(3)"},   {"6048", "PSU_3(9)"},
      {"6072", "PSL_2(23)"}, {"7800", "PSL_2(25)"}, {"7920", "M11"},        {"9828", "PSL_2(27)"},
  };
  c.equal(entries.size(), std::size_t{20}, "20 entries");
  c.equal(nonabelian, std::size_t{16}, "16 nonabelian");
  c.equal(abelian, std::size_t{4}, "4 abelian primes");
  c.expect(got == expected, "entry set equals the reference set");
  for (const char* alias : {"PSL_2(4)", "PSL_2(5)", "PSL_3(2)", "PSL_2(9)"}) {
    c.expect(all_names.count(alias) == 1, std::string("alias ") + alias);
  }
  return {c.ok(), c.summary("20 entries, 16 nonabelian from 60 to 9828 including M11")};
}

std::pair<bool, std::string> mathieu() {
  Checker c;
  const auto chain = mathieu_m24(golay_code());
  c.equal(chain.order, BigInt(244823040), "|M24|");
  c.equal(chain.point_stabilizer_order, BigInt(10200960), "|M23|");
  c.equal(chain.two_point_stabilizer_order, BigInt(443520), "|M22|");
  c.equal(chain.transitivity.k, 5u, "5-transitive");
  c.expect(!chain.transitivity.sharp, "not sharply 5-transitive");
  c.expect(chain.factorization == Factorization{{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}},
           "2^10 3^3 5 7 11 23");
  for (const auto& g : chain.generators) c.expect(is_code_automorphism(golay_code(), g), "generator preserves code");
  return {c.ok(), c.summary("244823040 > 10200960 > 443520, 5-transitive")};
}

std::pair<bool, std::string> golay() {
  Checker c;
  const auto& code = golay_code();
  c.expect(code.weight_distribution() ==
               std::map<unsigned, std::uint64_t>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}},
           "weight distribution");
  c.expect(code.is_self_dual(), "self-dual");
  const auto r = octad_steiner_check(code, true);
  c.expect(r.counting_identity, "759 C(8,5) = C(24,5)");
  c.expect(r.every_five_subset_once, "exhaustive 5-subset coverage");
  c.expect(r.holds, "253 / 77 octads through a point / pair");
  return {c.ok(), c.summary("weights {1,759,2576,759,1}, S(5,8,24) exhaustive")};
}

std::pair<bool, std::string> leech() {
  Checker c;
  std::uint64_t total = 0;
  for (const auto& s : leech_minimal_vectors(golay_code())) {
    c.equal(s.enumerated, s.closed_form, s.shape + " enumeration vs closed form");
    total += s.enumerated;
  }
  c.equal(total, std::uint64_t{196560}, "shape total");
  c.equal(leech_theta_prefix(2).at(2), BigInt(total), "q^2 coefficient of (J + 24) Delta");
  return {c.ok(), c.summary("1104 + 97152 + 98304 = 196560 = theta coefficient")};
}

std::pair<bool, std::string> moonshine() {
  Checker c;
  c.expect(j_expansion(3).coeffs() == std::vector<BigInt>{1, 744, 196884, 21493760, 864299970}, "j coefficients");
  c.expect(j_cube_root(3).coeffs() == std::vector<BigInt>{1, 248, 4124, 34752}, "cube-root coefficients");
  for (const auto& id : moonshine_decompositions()) c.expect(id.holds, id.name);
  return {c.ok(), c.summary("j, j^(1/3) and every decomposition identity")};
}

std::pair<bool, std::string> monster() {
  Checker c;
  const BigInt m = monster_order();
  c.equal(to_decimal(m).size(), std::size_t{54}, "54 digits");
  c.expect(m % 71 == 0, "71 divides |M|");
  for (int p : {37, 43, 53, 61, 67}) c.expect(m % p != 0, std::to_string(p) + " does not divide |M|");
  c.equal(BigInt(196883), BigInt(47) * 59 * 71, "196883 = 47 59 71");
  for (const auto& id : monster_constant_checks()) c.expect(id.holds, id.name);
  return {c.ok(), c.summary("54 digits, 71 | |M|, 37/43/53/61/67 absent")};
}

std::pair<bool, std::string> catalog() {
  Checker c;
  const auto entries = small_group_catalog();
  c.equal(entries.size(), std::size_t{28}, "28 entries");
  std::size_t abelian = 0;
  for (const auto& e : entries) {
    abelian += e.is_abelian;
    std::uint64_t sum = 0, squares = 0;
    for (auto s : e.class_sizes) sum += s;
    for (auto d : e.irrep_degrees) squares += d * d;
    c.equal(sum, e.order, e.name + " class equation");
    c.equal(squares, e.order, e.name + " Burnside relation");
    c.equal(e.class_sizes.size(), e.irrep_degrees.size(), e.name + " classes = irreps");
  }
  c.equal(abelian, std::size_t{20}, "20 abelian");
  auto sorted_sizes = [](const PermGroup& g) {
    auto s = conjugacy_classes(g).class_sizes;
    std::sort(s.begin(), s.end());
    return s;
  };
  c.expect(sorted_sizes(dihedral_group(4)) == std::vector<std::uint64_t>{1, 1, 2, 2, 2}, "D4: 1+1+2+2+2");
  const auto q = conjugacy_classes(quaternion_group());
  c.expect(sorted_sizes(quaternion_group()) == std::vector<std::uint64_t>{1, 1, 2, 2, 2}, "Q: 1+1+2+2+2");
  std::size_t order4 = 0;
  for (std::size_t k = 0; k < q.num_classes; ++k) order4 += q.class_sizes[k] == 2 && q.class_rep_orders[k] == 4;
  c.equal(order4, std::size_t{3}, "Q: the three classes {+-i}, {+-j}, {+-k} have order 4");
  auto d5 = character_table(dihedral_group(5)).degrees;
  std::sort(d5.begin(), d5.end());
  c.expect(d5 == std::vector<std::uint64_t>{1, 1, 2, 2}, "D5: 10 = 2*1^2 + 2*2^2");
  return {c.ok(), c.summary("28 groups (20 abelian, 8 nonabelian) verified")};
}

std::pair<bool, std::string> character_tables() {
  Checker c;
  // Rows keyed by cycle type of the class representative.
  auto check = [&](const PermGroup& g, const std::vector<std::vector<std::size_t>>& columns,
                   const std::set<std::vector<std::int64_t>>& rows, const std::string& name) {
    const CharacterTable t = character_table(g);
    c.expect(verify_character_table(t).empty(), name + " orthogonality");
    const Cyclotomics field = t.field();
    std::vector<std::size_t> perm(columns.size());
    c.equal(t.representatives.size(), columns.size(), name + " class count");
    if (t.representatives.size() != columns.size()) return;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      auto it = std::find(columns.begin(), columns.end(), t.representatives[k].cycle_type());
      c.expect(it != columns.end(), name + " column cycle type");
      if (it == columns.end()) return;
      perm[static_cast<std::size_t>(it - columns.begin())] = k;
    }
    std::set<std::vector<std::int64_t>> got;
    for (const auto& row : t.values) {
      std::vector<std::int64_t> r;
      for (std::size_t col = 0; col < columns.size(); ++col) {
        std::int64_t v = 0;
        c.expect(field.is_integer(row[perm[col]], &v), name + " integral values");
        r.push_back(v);
      }
      got.insert(r);
    }
    c.expect(got == rows, name + " table entries");
  };
  check(symmetric_group(3), {{1, 1, 1}, {2, 1}, {3}}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}, "S3");
  check(symmetric_group(4), {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}},
        {{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {3, -1, -1, 0, 1}}, "S4");
  return {c.ok(), c.summary("S3 and S4 tables match, orthogonality exact")};
}

std::pair<bool, std::string> alt8_vs_psl34() {
  Checker c;
  const PermGroup a8 = alternating_group(8);
  const PermGroup l34 = projective_action(ProjectiveVariant::PSL, 3, FieldSpec::make(2, 2)).group;
  c.equal(a8.order(), l34.order(), "equal orders");
  c.equal(a8.order(), BigInt(20160), "order 20160");
  const auto ha = element_order_histogram(a8), hl = element_order_histogram(l34);
  std::uint64_t ta = 0, tl = 0;
  for (const auto& [o, n] : ha) ta += n;
  for (const auto& [o, n] : hl) tl += n;
  c.equal(ta, std::uint64_t{20160}, "Alt_8 census covers every element");
  c.equal(tl, std::uint64_t{20160}, "PSL_3(4) census covers every element");
  c.expect(ha != hl, "histograms differ");
  c.expect(ha.count(15) == 1 && hl.count(15) == 0, "order 15 only in Alt_8");
  return {c.ok(), c.summary("same order 20160; elements of order 15 in Alt_8 only")};
}

std::uint64_t brute_force_order(const PermGroup& g) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier = {g.identity()};
  seen.insert(g.identity());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& s : g.generators()) {
        Permutation y = x * s;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::pair<bool, std::string> property_suites() {
  Checker c;
  std::size_t fields = 0;
  for (std::uint64_t q = 2; q <= 256; ++q) {
    auto [p, f] = prime_power_decomposition(q);
    if (p == 0) continue;
    FieldSpec F = FieldSpec::make(p, f);
    const std::string problem = check_field_axioms(F);
    c.expect(problem.empty(), "F_" + std::to_string(q) + " axioms: " + problem);
    c.equal(F.frobenius_order(), f, "F_" + std::to_string(q) + " Frobenius order");
    c.expect(F.frobenius_is_automorphism(), "F_" + std::to_string(q) + " Frobenius is an automorphism");
    ++fields;
  }

  std::vector<std::pair<std::string, PermGroup>> zoo;
  for (std::uint64_t n = 1; n <= 24; ++n) zoo.emplace_back("Z" + std::to_string(n), cyclic_group(n));
  for (std::uint64_t n = 3; n <= 16; ++n) zoo.emplace_back("D" + std::to_string(n), dihedral_group(n));
  for (std::uint64_t n = 2; n <= 8; ++n) zoo.emplace_back("Dic" + std::to_string(n), dicyclic_group(n));
  for (unsigned n = 1; n <= 5; ++n) zoo.emplace_back("Cl" + std::to_string(n), clifford_group(n));
  for (unsigned n = 1; n <= 5; ++n) zoo.emplace_back("Cl+" + std::to_string(n), clifford_even_group(n));
  for (std::uint64_t n = 1; n <= 7; ++n) zoo.emplace_back("Sym" + std::to_string(n), symmetric_group(n));
  for (std::uint64_t n = 3; n <= 7; ++n) zoo.emplace_back("Alt" + std::to_string(n), alternating_group(n));
  zoo.emplace_back("V4", vierergruppe());
  zoo.emplace_back("Q8", quaternion_group());
  zoo.emplace_back("F21", frobenius21());
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    zoo.emplace_back("E" + std::to_string(p) + "^" + std::to_string(m), elementary_abelian_group(p, m));
  }
  for (auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {2, 5}, {3, 7}, {5, 11}, {3, 13}}) {
    if (auto g = nonabelian_semidirect_pq(p, q)) zoo.emplace_back("Z" + std::to_string(q) + ":Z" + std::to_string(p), *g);
  }
  for (std::uint64_t n : {5u, 7u, 8u, 9u}) zoo.emplace_back("Hol(Z" + std::to_string(n) + ")", holomorph(cyclic_group(n)));
  for (const auto& t : abelian_types(72)) zoo.emplace_back(t.name(), abelian_group(t.factors));
  for (std::uint64_t q : {5u, 7u}) {
    zoo.emplace_back("PSL_2(" + std::to_string(q) + ")",
                     projective_action(ProjectiveVariant::PSL, 2, FieldSpec::make(q, 1)).group);
  }

  for (const auto& [name, g] : zoo) {
    const BigInt order = g.order();
    const auto hist = element_order_histogram(g);
    std::uint64_t total = 0;
    for (const auto& [o, n] : hist) {
      total += n;
      c.expect(order % o == 0, name + " Lagrange: element order " + std::to_string(o));
    }
    c.equal(BigInt(total), order, name + " histogram total");
    const auto primes = factorize(order);
    for (const auto& [p, e] : primes) c.expect(hist.count(p) == 1, name + " Cauchy: element of order " + std::to_string(p));
    if (primes.size() == 1) {
      c.expect(conjugacy_classes(g).center_size > 1, name + " p-group has nontrivial center");
    }
    if (order <= 5040) c.equal(BigInt(brute_force_order(g)), order, name + " BSGS order vs brute force");
  }

  const auto h = associativity_probe(AlgebraKind::Quaternion, 200, 11);
  const auto o = associativity_probe(AlgebraKind::Octonion, 200, 12);
  c.expect(h.holds && h.associative_failures == 0, "quaternion associativity");
  c.expect(o.holds && o.left_alternative_failures == 0 && o.right_alternative_failures == 0, "octonion alternativity");
  c.expect(validate_octonion_table().empty(), "octonion table");
  return {c.ok(), c.summary(std::to_string(fields) + " fields, " + std::to_string(zoo.size()) +
                            " zoo groups, quaternion and octonion probes")};
}

struct Entry {
  CriterionInfo info;
  Body body;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{1, "order-formula table", 1}, order_table},
      {{2, "simple-group census to 10000", 5}, census_10000},
      {{3, "Mathieu chain M24 > M23 > M22", 10}, mathieu},
      {{4, "Golay code and S(5,8,24)", 30}, golay},
      {{5, "Leech kissing number", 5}, leech},
      {{6, "moonshine coefficients and decompositions", 1}, moonshine},
      {{7, "Monster constants", 1}, monster},
      {{8, "small-group catalog", 5}, catalog},
      {{9, "character tables of S3 and S4", 2}, character_tables},
      {{10, "Alt_8 vs PSL_3(4) element orders", 60}, alt8_vs_psl34},
      {{11, "property suites", 180}, property_suites},
  };
  return list;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CriterionResult run_criterion(int id) {
  const auto& list = entries();
  auto it = std::find_if(list.begin(), list.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == list.end()) throw ValidationError("no acceptance criterion " + std::to_string(id) + " (valid: 1..11)");
  CriterionResult r;
  r.id = id;
  r.title = it->info.title;
  r.budget_seconds = it->info.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = it->body();
    r.correct = ok;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.correct = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.correct && r.seconds <= r.budget_seconds;
  if (r.correct && !r.passed) r.detail += " (over the time budget)";
  return r;
}

std::vector<CriterionResult> run_all(const std::vector<int>& only) {
  std::vector<CriterionResult> out;
  for (const auto& info : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), info.id) == only.end()) continue;
    out.push_back(run_criterion(info.id));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s %2d  %-44s %8.3f s / %g s  ", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.budget_seconds);
  return head + r.detail;
}

}  // namespace fgt::acceptance
