#pragma once

#include <cstdint>

namespace fgt {

/// Size bounds guarding the exhaustive algorithms. Defaults are chosen so the
/// full verification suite stays at desk scale; the CLI can override them via
/// FGT_* environment variables (see `Limits::from_environment`).
struct Limits {
  std::uint64_t max_field_order = 1u << 20;
  /// Above this order conjugacy classes switch from exhaustive listing to
  /// randomized class discovery.
  std::uint64_t exhaustive_listing_bound = 100'000;
  std::uint64_t enumeration_bound = 1'000'000;
  std::uint64_t automorphism_bound = 64;
  std::uint64_t character_bound = 200;
  std::uint64_t projective_point_bound = 5000;
  std::uint64_t series_bound = 10'000;
  std::uint64_t j_series_bound = 1000;

  static Limits from_environment();
};

/// Process-wide limits. Set once at startup; read-only afterwards.
const Limits& limits();
void set_limits(const Limits& l);

}  // namespace fgt
