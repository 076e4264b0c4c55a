#include "fgt/limits.hpp"

#include <cstdlib>
#include <string>

#include "fgt/errors.hpp"

namespace fgt {

namespace {

Limits& mutable_limits() {
  static Limits l;
  return l;
}

void read_env(const char* name, std::uint64_t& slot) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return;
  std::string text(raw);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw ValidationError(std::string(name) + ": expected a positive integer, got '" + text + "'");
  }
  if (used != text.size() || v == 0) {
    throw ValidationError(std::string(name) + ": expected a positive integer, got '" + text + "'");
  }
  slot = v;
}

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  read_env("FGT_MAX_FIELD_ORDER", l.max_field_order);
  read_env("FGT_EXHAUSTIVE_LISTING_BOUND", l.exhaustive_listing_bound);
  read_env("FGT_ENUMERATION_BOUND", l.enumeration_bound);
  read_env("FGT_AUTOMORPHISM_BOUND", l.automorphism_bound);
  read_env("FGT_CHARACTER_BOUND", l.character_bound);
  read_env("FGT_PROJECTIVE_POINT_BOUND", l.projective_point_bound);
  read_env("FGT_SERIES_BOUND", l.series_bound);
  read_env("FGT_J_SERIES_BOUND", l.j_series_bound);
  return l;
}

const Limits& limits() { return mutable_limits(); }

void set_limits(const Limits& l) { mutable_limits() = l; }

}  // namespace fgt
