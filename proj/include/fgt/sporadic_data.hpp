#pragma once

#include <string>
#include <vector>

#include "fgt/numeric.hpp"

namespace fgt {

enum class Generation { Mathieu, Leech, Monster, Pariah };

std::string generation_name(Generation g);

struct SporadicEntry {
  std::string symbol;
  std::string name;
  Generation generation;
  Factorization factorization;
  std::string discovered;

  BigInt order() const { return multiply_out(factorization); }
};

/// The 26 sporadic simple groups, ascending by order (M11 first, the Monster
/// last). Orders are stored factored; decimals are derived.
const std::vector<SporadicEntry>& sporadic_table();

/// Throws ValidationError for an unknown symbol.
const SporadicEntry& sporadic(const std::string& symbol);

}  // namespace fgt
