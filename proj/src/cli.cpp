#include "fgt/cli.hpp"

#include <algorithm>
#include <sstream>

#include "fgt/acceptance.hpp"
#include "fgt/errors.hpp"
#include "fgt/limits.hpp"

namespace fgt::cli {

using json_io::Json;

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs = {
      {"field",
       "finite field F_{p^f}: modulus, generator, Frobenius order",
       {{"p", false, "characteristic (prime)"},
        {"f", false, "degree (default 1)"},
        {"elements", true, "list every element with its multiplicative order"},
        {"axioms", true, "check the field axioms exhaustively"}}},
      {"group",
       "permutation group by family name or generators",
       {{"name", false, "family: cyclic, dihedral, dicyclic, clifford, clifford_even, symmetric (sym), alternating "
                        "(alt), vierergruppe, quaternion, frobenius21, elementary_abelian"},
        {"n", false, "first family parameter"},
        {"m", false, "second family parameter (elementary_abelian)"},
        {"gens", false, "generators in cycle notation separated by ';', e.g. \"(0 1 2);(0 1)\""},
        {"degree", false, "number of points for --gens"},
        {"report", true, "classes, center, derived subgroup, simplicity, transitivity"},
        {"histogram", true, "element-order histogram"},
        {"aut", true, "automorphism group orders (small groups)"}}},
      {"zoo",
       "small-group catalog, abelian groups, families",
       {{"catalog", true, "all groups of order < 16 with verified invariants"},
        {"abelian", false, "abelian groups of this order"},
        {"partitions", false, "partition count of this integer"},
        {"families", true, "list group family names"},
        {"pq", false, "nonabelian semidirect product: p,q"}}},
      {"chartab",
       "character table by Dixon-Schneider",
       {{"name", false, "group family (as for group)"},
        {"n", false, "first family parameter"},
        {"m", false, "second family parameter"},
        {"gens", false, "generators in cycle notation separated by ';'"},
        {"degree", false, "number of points for --gens"}}},
      {"orders",
       "order of a classical or exceptional group of Lie type",
       {{"family", false, "GL SL PSL PSp POmega_odd POmega_even_plus POmega_even_minus PSU G2 F4 E6 E7 E8 2An 2Dn 3D4 "
                          "2E6 2B2 2G2 2F4"},
        {"n", false, "rank parameter (ignored for exceptional types)"},
        {"q", false, "field size"}}},
      {"census",
       "simple groups up to an order bound",
       {{"bound", false, "order bound (<= 10^7)"},
        {"no-abelian", true, "omit the cyclic groups of prime order"},
        {"identifications", true, "also run the explicit isomorphism checks"}}},
      {"golay",
       "binary Golay code, octads and the Mathieu chain",
       {{"codewords", true, "list all 4096 codewords as 24-bit hex"},
        {"steiner", true, "S(5,8,24) check"},
        {"exhaustive", true, "walk all 5-subsets in the Steiner check"},
        {"m24", true, "construct M24 and its stabilizer chain"}}},
      {"leech",
       "Leech lattice minimal vectors and theta series",
       {{"theta", false, "number of theta terms"}, {"dodecads", true, "count norm-6 dodecad vectors"}}},
      {"moonshine",
       "q-expansions and moonshine identities",
       {{"j", true, "coefficients of j"},
        {"cube-root", true, "coefficients of (q j)^(1/3)"},
        {"delta", true, "coefficients of Delta"},
        {"e4", true, "coefficients of E4"},
        {"terms", false, "highest exponent (default 3)"},
        {"decompositions", true, "decomposition identities"},
        {"monster", true, "Monster order and constant checks"},
        {"squares", true, "sum-of-squares scan"},
        {"scan", false, "scan limit for --squares (default 1000000)"}}},
      {"algebra",
       "exact quaternion and octonion arithmetic",
       {{"kind", false, "H or O"},
        {"a", false, "comma-separated rational coordinates"},
        {"b", false, "second operand"},
        {"c", false, "third operand (associator)"},
        {"op", false, "mul, conj, norm, inverse, associator (default mul)"},
        {"probe", false, "associativity probe with this many samples"},
        {"seed", false, "probe seed (default 1)"}}},
      {"sporadic", "sporadic group orders", {{"symbol", false, "one group, e.g. M24 or Fi24'"}}},
      {"verify-all",
       "run acceptance criteria 1..11",
       {{"only", false, "comma-separated criterion ids"}}},
  };
  return specs;
}

namespace {

class Params {
 public:
  explicit Params(const CommandRequest& r) : r_(r) {}
  bool has(const std::string& k) const { return r_.params.count(k) != 0; }
  bool flag(const std::string& k) const { return has(k) && r_.params.at(k) != "false"; }
  std::string str(const std::string& k) const {
    if (!has(k)) throw UsageError(r_.subcommand + ": missing --" + k);
    return r_.params.at(k);
  }
  std::uint64_t u64(const std::string& k) const {
    const std::string s = str(k);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
      throw UsageError(r_.subcommand + ": --" + k + " expects a nonnegative integer, got '" + s + "'");
    }
    return std::stoull(s);
  }
  std::uint64_t u64_or(const std::string& k, std::uint64_t fallback) const { return has(k) ? u64(k) : fallback; }

 private:
  const CommandRequest& r_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

PermGroup group_from(const Params& p) {
  if (p.has("gens")) {
    const std::size_t degree = p.u64("degree");
    std::vector<Permutation> gens;
    for (const auto& g : split(p.str("gens"), ';')) gens.push_back(Permutation::parse(g, degree));
    return PermGroup(degree, std::move(gens));
  }
  std::string name = p.str("name");
  if (name == "sym") name = "symmetric";
  if (name == "alt") name = "alternating";
  std::vector<std::uint64_t> params;
  if (p.has("n")) params.push_back(p.u64("n"));
  if (p.has("m")) params.push_back(p.u64("m"));
  return construct_named(name, params);
}

Json cmd_field(const Params& p) {
  const FieldSpec f = FieldSpec::make(p.u64("p"), static_cast<unsigned>(p.u64_or("f", 1)));
  Json j = json_io::field(f, p.flag("elements"));
  if (p.flag("axioms")) {
    const std::string problem = check_field_axioms(f);
    j["axioms"] = problem.empty() ? Json("ok") : Json(problem);
  }
  return j;
}

Json cmd_group(const Params& p) {
  const PermGroup g = group_from(p);
  Json j = json_io::group(g, p.flag("report"), p.flag("histogram"));
  if (p.flag("aut")) {
    const AutomorphismGroup a = automorphism_group(g);
    j["automorphisms"] = {{"aut_order", json_io::number(a.aut_order)},
                          {"inn_order", json_io::number(a.inn_order)},
                          {"out_order", json_io::number(a.out_order)}};
  }
  return j;
}

Json cmd_zoo(const Params& p) {
  Json j = Json::object();
  if (p.flag("families")) j["families"] = named_families();
  if (p.flag("catalog")) {
    Json a = Json::array();
    for (const auto& e : small_group_catalog()) a.push_back(json_io::catalog_entry(e));
    j["catalog"] = a;
  }
  if (p.has("abelian")) {
    const std::uint64_t n = p.u64("abelian");
    Json a = Json::array();
    for (const auto& t : abelian_types(n)) a.push_back(json_io::abelian_type(t));
    j["abelian"] = {{"order", json_io::number(n)}, {"count", json_io::number(count_abelian_groups(n))}, {"types", a}};
  }
  if (p.has("partitions")) {
    const std::uint64_t n = p.u64("partitions");
    j["partitions"] = {{"n", json_io::number(n)}, {"count", json_io::number(partition_count(n))}};
  }
  if (p.has("pq")) {
    auto v = split(p.str("pq"), ',');
    if (v.size() != 2) throw UsageError("zoo: --pq expects p,q");
    auto parse = [](const std::string& s) {
      if (s.find_first_not_of("0123456789") != std::string::npos) throw UsageError("zoo: --pq expects integers");
      return std::stoull(s);
    };
    auto g = nonabelian_semidirect_pq(parse(v[0]), parse(v[1]));
    j["pq"] = g ? json_io::group(*g, false, false) : Json(nullptr);
  }
  if (j.empty()) throw UsageError("zoo: choose --catalog, --abelian N, --partitions N, --families or --pq p,q");
  return j;
}

Json cmd_orders(const Params& p) {
  const Family fam = parse_family(p.str("family"));
  const unsigned n = static_cast<unsigned>(family_has_rank(fam) ? p.u64("n") : p.u64_or("n", 0));
  const std::uint64_t q = p.u64("q");
  Json j = json_io::order_result(order_formula({fam, n, q}));
  j["family"] = family_tag(fam);
  j["params"] = {{"q", json_io::number(q)}};
  if (family_has_rank(fam)) j["params"]["n"] = json_io::number(std::uint64_t{n});
  return j;
}

Json cmd_census(const Params& p) {
  CensusOptions opts;
  if (p.flag("no-abelian")) opts.abelian_prime_cutoff = 0;
  const auto entries = simple_census(p.u64("bound"), opts);
  Json j = {{"bound", json_io::number(p.u64("bound"))},
            {"count", json_io::number(std::uint64_t{entries.size()})},
            {"entries", json_io::census(entries)}};
  if (p.flag("identifications")) {
    Json a = Json::array();
    for (const auto& c : verify_claimed_identifications()) a.push_back(json_io::identification(c));
    j["identifications"] = a;
  }
  return j;
}

Json cmd_golay(const Params& p) {
  const BinaryCode& code = golay_code();
  Json dist;
  for (const auto& [w, n] : code.weight_distribution()) dist[std::to_string(w)] = json_io::number(n);
  Json gens = Json::array();
  char buf[16];
  for (Codeword g : code.generators()) {
    std::snprintf(buf, sizeof buf, "%06x", g);
    gens.push_back(buf);
  }
  Json j = {{"length", "24"},
            {"dimension", json_io::number(std::uint64_t{code.dimension()})},
            {"minimum_weight", json_io::number(std::uint64_t{code.minimum_weight()})},
            {"self_dual", code.is_self_dual()},
            {"weight_distribution", dist},
            {"generators", gens}};
  if (p.flag("codewords")) {
    Json words = Json::array();
    for (Codeword w : code.codewords()) {
      std::snprintf(buf, sizeof buf, "%06x", w);
      words.push_back(buf);
    }
    j["codewords"] = words;
  }
  if (p.flag("steiner") || p.flag("exhaustive")) j["steiner"] = json_io::steiner(octad_steiner_check(code, p.flag("exhaustive")));
  if (p.flag("m24")) j["m24"] = json_io::mathieu(mathieu_m24(code));
  return j;
}

Json cmd_leech(const Params& p) {
  Json shapes = Json::array();
  std::uint64_t total = 0;
  for (const auto& s : leech_minimal_vectors(golay_code())) {
    shapes.push_back(json_io::shape(s));
    total += s.enumerated;
  }
  const int terms = static_cast<int>(std::max<std::uint64_t>(p.u64_or("theta", 3), 2));
  const IntegerSeries theta = leech_theta_prefix(terms);
  Json j = {{"shapes", shapes},
            {"kissing_number", json_io::number(total)},
            {"theta", json_io::series(theta)},
            {"theta_matches_census", theta.at(2) == total},
            {"normalization", "x.x / 8 with minimal vectors at x.x = 32"}};
  if (p.flag("dodecads")) j["norm6_dodecad_vectors"] = json_io::number(dodecad_vector_count(golay_code()));
  return j;
}

Json cmd_moonshine(const Params& p) {
  const int terms = static_cast<int>(p.u64_or("terms", 3));
  Json j = Json::object();
  if (p.flag("j")) j["j"] = json_io::series(j_expansion(terms));
  if (p.flag("cube-root")) j["cube_root"] = json_io::series(j_cube_root(terms));
  if (p.flag("delta")) j["delta"] = json_io::series(delta_expansion(terms));
  if (p.flag("e4")) j["e4"] = json_io::series(e4_expansion(terms));
  if (p.flag("decompositions")) {
    Json a = Json::array();
    for (const auto& c : moonshine_decompositions()) a.push_back(json_io::identity(c));
    j["decompositions"] = a;
  }
  if (p.flag("monster")) {
    const auto& m = monster_data();
    Json checks = Json::array();
    for (const auto& c : monster_constant_checks()) checks.push_back(json_io::identity(c));
    j["monster"] = {{"order", json_io::number(monster_order())},
                    {"factorization", json_io::factorization(m.order_factorization)},
                    {"irrep_dims", json_io::numbers(m.irrep_dims)},
                    {"missing_primes", json_io::numbers(m.missing_primes)},
                    {"checks", checks}};
  }
  if (p.flag("squares")) {
    const auto r = sum_of_squares_check(p.u64_or("scan", 1'000'000));
    j["squares"] = {{"direct_sum", json_io::number(r.direct_sum)},
                    {"closed_form", json_io::number(r.closed_form)},
                    {"root", json_io::number(r.root)},
                    {"scan_limit", json_io::number(r.scan_limit)},
                    {"square_totals", json_io::numbers(r.square_totals)},
                    {"holds", r.holds}};
  }
  if (j.empty()) {
    throw UsageError("moonshine: choose --j, --cube-root, --delta, --e4, --decompositions, --monster or --squares");
  }
  return j;
}

Json cmd_algebra(const Params& p) {
  const AlgebraKind kind = parse_algebra_kind(p.has("kind") ? p.str("kind") : "H");
  if (p.has("probe")) {
    return json_io::associativity(associativity_probe(kind, p.u64("probe"), p.u64_or("seed", 1)));
  }
  const std::string op = p.has("op") ? p.str("op") : "mul";
  const AlgebraElement a = AlgebraElement::parse(kind, p.str("a"));
  Json j = {{"op", op}, {"a", json_io::algebra_element(a)}};
  if (op == "mul") {
    j["result"] = json_io::algebra_element(multiply(a, AlgebraElement::parse(kind, p.str("b"))));
  } else if (op == "associator") {
    j["result"] = json_io::algebra_element(
        associator(a, AlgebraElement::parse(kind, p.str("b")), AlgebraElement::parse(kind, p.str("c"))));
  } else if (op == "conj" || op == "norm" || op == "inverse") {
    const ConjNormInverse r = conj_norm_inverse(a);
    j["conjugate"] = json_io::algebra_element(r.conjugate);
    j["norm"] = r.norm.str();
    j["inverse"] = r.inverse ? json_io::algebra_element(*r.inverse) : Json(nullptr);
  } else {
    throw UsageError("algebra: unknown --op '" + op + "' (mul, conj, norm, inverse, associator)");
  }
  return j;
}

Json cmd_sporadic(const Params& p) {
  if (p.has("symbol")) return json_io::sporadic(sporadic(p.str("symbol")));
  Json a = Json::array();
  for (const auto& e : sporadic_table()) a.push_back(json_io::sporadic(e));
  return {{"count", json_io::number(std::uint64_t{a.size()})}, {"groups", a}};
}

Json cmd_verify_all(const Params& p) {
  std::vector<int> only;
  if (p.has("only")) {
    for (const auto& s : split(p.str("only"), ',')) {
      if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3) {
        throw UsageError("verify-all: --only expects comma-separated criterion ids");
      }
      only.push_back(std::stoi(s));
    }
    for (int id : only) {
      if (id < 1 || id > static_cast<int>(acceptance::criteria().size())) {
        throw UsageError("verify-all: no criterion " + std::to_string(id));
      }
    }
  }
  Json rows = Json::array();
  bool all = true;
  for (const auto& r : acceptance::run_all(only)) {
    all = all && r.passed;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    rows.push_back({{"id", std::to_string(r.id)},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"correct", r.correct},
                    {"seconds", secs},
                    {"budget_seconds", std::to_string(static_cast<int>(r.budget_seconds))},
                    {"detail", r.detail},
                    {"line", acceptance::format_line(r)}});
  }
  return {{"criteria", rows}, {"all_passed", all}};
}

void check_params(const CommandRequest& r) {
  const auto& specs = command_specs();
  auto it = std::find_if(specs.begin(), specs.end(), [&](const CommandSpec& s) { return s.name == r.subcommand; });
  if (it == specs.end()) throw UsageError("unknown subcommand '" + r.subcommand + "'");
  for (const auto& [k, v] : r.params) {
    auto p = std::find_if(it->params.begin(), it->params.end(), [&](const ParamSpec& s) { return s.name == k; });
    if (p == it->params.end()) throw UsageError(r.subcommand + ": unknown parameter --" + k);
  }
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars) {
      std::string line;
      for (const auto& x : j) line += (line.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
      out += path + ": [" + line + "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out += path + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

Json execute(const CommandRequest& request) {
  check_params(request);
  const Params p(request);
  const std::string& c = request.subcommand;
  if (c == "field") return cmd_field(p);
  if (c == "group") return cmd_group(p);
  if (c == "zoo") return cmd_zoo(p);
  if (c == "chartab") return json_io::character_table(character_table(group_from(p)));
  if (c == "orders") return cmd_orders(p);
  if (c == "census") return cmd_census(p);
  if (c == "golay") return cmd_golay(p);
  if (c == "leech") return cmd_leech(p);
  if (c == "moonshine") return cmd_moonshine(p);
  if (c == "algebra") return cmd_algebra(p);
  if (c == "sporadic") return cmd_sporadic(p);
  if (c == "verify-all") return cmd_verify_all(p);
  throw DefectError("subcommand '" + c + "' is listed but not dispatched");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return kExitUsage;
  if (dynamic_cast<const ValidationError*>(&e)) return kExitValidation;
  if (dynamic_cast<const ResourceError*>(&e)) return kExitResource;
  return kExitDefect;
}

std::string render_text(const Json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

int dispatch(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  try {
    const Json result = execute(request);
    if (request.subcommand == "verify-all" && request.format == OutputFormat::Text) {
      for (const auto& row : result["criteria"]) out << row["line"].get<std::string>() << "\n";
      out << (result["all_passed"].get<bool>() ? "all criteria passed" : "some criteria FAILED") << "\n";
    } else {
      out << (request.format == OutputFormat::Json ? json_io::dump(result) : render_text(result));
    }
    if (request.subcommand == "verify-all" && !result["all_passed"].get<bool>()) return kExitVerifyFailed;
    return kExitOk;
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    const char* kind = code == kExitUsage        ? "usage"
                       : code == kExitValidation ? "validation"
                       : code == kExitResource   ? "resource"
                                                 : "defect";
    err << "error (" << kind << "): " << e.what() << "\n";
    return code;
  }
}

}  // namespace fgt::cli
