#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "fgt/character_table.hpp"
#include "fgt/codes_lattices.hpp"
#include "fgt/division_algebras.hpp"
#include "fgt/finite_field.hpp"
#include "fgt/group_zoo.hpp"
#include "fgt/matrix_group.hpp"
#include "fgt/moonshine.hpp"
#include "fgt/perm_group.hpp"
#include "fgt/sporadic_data.hpp"

namespace fgt::json_io {

/// Keys are kept in a std::map, so dumps are sorted and byte-stable.
using Json = nlohmann::json;

/// Every integer is emitted as a decimal string so large orders never pass
/// through a double or a 64-bit integer.
Json number(const BigInt& n);
Json number(std::uint64_t n);
Json numbers(const std::vector<std::uint64_t>& v);
Json numbers(const std::vector<BigInt>& v);
Json factorization(const Factorization& f);

Json field(const FieldSpec& f, bool with_elements);
Json group(const PermGroup& g, bool report, bool histogram);
Json character_table(const CharacterTable& t);
Json order_result(const OrderResult& r);
Json census(const std::vector<CensusEntry>& entries);
Json identification(const IdentificationCheck& c);
Json catalog_entry(const CatalogEntry& e);
Json abelian_type(const AbelianType& t);
Json sporadic(const SporadicEntry& e);
Json series(const IntegerSeries& s);
Json identity(const IdentityCheck& c);
Json steiner(const SteinerReport& r);
Json mathieu(const MathieuChain& c);
Json shape(const LatticeShapeCount& s);
Json algebra_element(const AlgebraElement& a);
Json associativity(const AssociativityReport& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// Inverse of `number`: parses a decimal string (ValidationError otherwise).
BigInt to_bigint(const Json& j);

}  // namespace fgt::json_io
