#include "fgt/json_io.hpp"

#include "fgt/errors.hpp"

namespace fgt::json_io {

Json number(const BigInt& n) { return to_decimal(n); }
Json number(std::uint64_t n) { return std::to_string(n); }

Json numbers(const std::vector<std::uint64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(number(x));
  return a;
}

Json numbers(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(number(x));
  return a;
}

Json factorization(const Factorization& f) {
  Json a = Json::array();
  for (const auto& [p, e] : f) a.push_back(Json::array({number(p), number(std::uint64_t{e})}));
  return a;
}

Json field(const FieldSpec& f, bool with_elements) {
  Json j;
  j["p"] = number(std::uint64_t{f.p()});
  j["f"] = number(std::uint64_t{f.f()});
  j["q"] = number(f.q());
  j["modulus"] = f.modulus_string();
  const FieldElement g = f.multiplicative_generator();
  j["generator"] = {{"label", number(f.index(g))}, {"value", f.to_string(g)}, {"order", number(f.multiplicative_order(g))}};
  j["frobenius_order"] = number(std::uint64_t{f.frobenius_order()});
  if (with_elements) {
    Json elems = Json::array();
    for (const auto& e : f.elements()) {
      Json x = {{"label", number(f.index(e))}, {"value", f.to_string(e)}};
      x["order"] = f.is_zero(e) ? Json(nullptr) : number(f.multiplicative_order(e));
      elems.push_back(x);
    }
    j["elements"] = elems;
  }
  return j;
}

Json group(const PermGroup& g, bool report, bool histogram) {
  Json j;
  j["degree"] = number(std::uint64_t{g.degree()});
  j["order"] = number(g.order());
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(x.to_cycle_string());
  j["generators"] = gens;
  j["abelian"] = g.is_abelian();
  if (report) {
    const ClassData cls = conjugacy_classes(g);
    j["classes"] = numbers(cls.class_sizes);
    j["class_rep_orders"] = numbers(cls.class_rep_orders);
    Json reps = Json::array();
    for (const auto& r : cls.representatives) reps.push_back(r.to_cycle_string());
    j["class_representatives"] = reps;
    j["center_order"] = number(cls.center_size);
    const StructureReport s = structure_report(g);
    j["derived_order"] = number(s.derived_order);
    j["abelianization_order"] = number(s.abelianization_order);
    j["perfect"] = s.is_perfect;
    j["simple"] = is_simple(g);
    const Transitivity t = transitivity_degree(g);
    j["transitivity"] = {{"k", number(std::uint64_t{t.k})}, {"sharp", t.sharp}};
    j["orbits"] = number(std::uint64_t{orbit_partition(g).size()});
  }
  if (histogram) {
    Json h;
    for (const auto& [order, count] : element_order_histogram(g)) h[std::to_string(order)] = number(count);
    j["element_orders"] = h;
  }
  return j;
}

Json character_table(const CharacterTable& t) {
  const Cyclotomics field = t.field();
  Json j;
  j["group_order"] = number(t.group_order);
  j["root_order"] = number(t.root_order);
  j["lifting_prime"] = number(t.lifting_prime);
  j["class_sizes"] = numbers(t.class_sizes);
  j["class_rep_orders"] = numbers(t.class_rep_orders);
  Json reps = Json::array();
  for (const auto& r : t.representatives) reps.push_back(r.to_cycle_string());
  j["class_representatives"] = reps;
  j["degrees"] = numbers(t.degrees);
  Json rows = Json::array();
  for (const auto& row : t.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(field.to_string(v));
    rows.push_back(r);
  }
  j["values"] = rows;
  j["value_notation"] = "polynomial in z = exp(2 pi i / root_order)";
  const std::string problem = verify_character_table(t);
  j["verified"] = problem.empty();
  if (!problem.empty()) j["verification_error"] = problem;
  return j;
}

Json order_result(const OrderResult& r) {
  Json j;
  j["label"] = r.label;
  j["order"] = number(r.order);
  j["center_divisor"] = number(r.center_divisor);
  j["factorization"] = factorization(factorize(r.order));
  j["exceptions"] = r.exceptions;
  return j;
}

Json census(const std::vector<CensusEntry>& entries) {
  Json a = Json::array();
  for (const auto& e : entries) {
    a.push_back({{"order", number(e.order)}, {"names", e.names}, {"sporadic", e.is_sporadic}, {"abelian", e.is_abelian}});
  }
  return a;
}

Json identification(const IdentificationCheck& c) {
  return {{"left", c.left},
          {"right", c.right},
          {"claimed_isomorphic", c.claimed_isomorphic},
          {"left_order", number(c.left_order)},
          {"right_order", number(c.right_order)},
          {"left_classes", number(std::uint64_t{c.left_classes})},
          {"right_classes", number(std::uint64_t{c.right_classes})},
          {"same_histogram", c.same_histogram},
          {"holds", c.holds},
          {"detail", c.detail}};
}

Json catalog_entry(const CatalogEntry& e) {
  return {{"order", number(e.order)},
          {"name", e.name},
          {"construction", e.construction},
          {"abelian", e.is_abelian},
          {"class_sizes", numbers(e.class_sizes)},
          {"irrep_degrees", numbers(e.irrep_degrees)},
          {"aut_order", number(e.aut_order)},
          {"notes", e.notes}};
}

Json abelian_type(const AbelianType& t) {
  return {{"name", t.name()}, {"elementary_divisors", numbers(t.factors)}, {"invariant_factors", numbers(t.invariant_factors())}};
}

Json sporadic(const SporadicEntry& e) {
  return {{"symbol", e.symbol},
          {"name", e.name},
          {"generation", generation_name(e.generation)},
          {"order", number(e.order())},
          {"factorization", factorization(e.factorization)},
          {"discovered", e.discovered}};
}

Json series(const IntegerSeries& s) {
  return {{"leading_exponent", std::to_string(s.leading_exponent())},
          {"truncation_order", std::to_string(s.truncation_order())},
          {"coefficients", numbers(s.coeffs())}};
}

Json identity(const IdentityCheck& c) {
  return {{"name", c.name}, {"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}, {"rhs_text", c.rhs_text}, {"holds", c.holds}};
}

Json steiner(const SteinerReport& r) {
  return {{"octads", number(r.octads)},
          {"octads_through_point", number(r.through_point)},
          {"octads_through_pair", number(r.through_pair)},
          {"counting_identity", r.counting_identity},
          {"exhaustive", r.exhaustive},
          {"five_subsets_checked", number(r.five_subsets_checked)},
          {"every_five_subset_once", r.every_five_subset_once},
          {"holds", r.holds}};
}

Json mathieu(const MathieuChain& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(g.to_cycle_string());
  return {{"generators", gens},
          {"order", number(c.order)},
          {"factorization", factorization(c.factorization)},
          {"point_stabilizer_order", number(c.point_stabilizer_order)},
          {"two_point_stabilizer_order", number(c.two_point_stabilizer_order)},
          {"transitivity", {{"k", number(std::uint64_t{c.transitivity.k})}, {"sharp", c.transitivity.sharp}}}};
}

Json shape(const LatticeShapeCount& s) {
  return {{"shape", s.shape},
          {"closed_form", number(s.closed_form)},
          {"enumerated", number(s.enumerated)},
          {"norm", number(std::uint64_t{s.norm})}};
}

Json algebra_element(const AlgebraElement& a) {
  Json c = Json::array();
  for (const auto& x : a.coords) c.push_back(x.str());
  return {{"algebra", algebra_kind_name(a.kind)}, {"coords", c}};
}

Json associativity(const AssociativityReport& r) {
  Json j = {{"algebra", algebra_kind_name(r.kind)},
            {"samples", number(std::uint64_t{r.samples})},
            {"associative_failures", number(std::uint64_t{r.associative_failures})},
            {"left_alternative_failures", number(std::uint64_t{r.left_alternative_failures})},
            {"right_alternative_failures", number(std::uint64_t{r.right_alternative_failures})},
            {"composition_failures", number(std::uint64_t{r.composition_failures})},
            {"conjugation_failures", number(std::uint64_t{r.conjugation_failures})},
            {"nonassociative_basis_triples", number(std::uint64_t{r.nonassociative_basis_triples})},
            {"holds", r.holds}};
  if (r.witness) {
    j["witness"] = {{"triple", numbers(std::vector<std::uint64_t>(r.witness->begin(), r.witness->end()))},
                    {"text", r.witness_text}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

BigInt to_bigint(const Json& j) {
  if (!j.is_string()) throw ValidationError("expected a decimal string");
  return parse_bigint(j.get<std::string>());
}

}  // namespace fgt::json_io
