#include "fgt/codes_lattices.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "fgt/errors.hpp"

namespace fgt {

namespace {

unsigned weight(Codeword w) { return static_cast<unsigned>(std::popcount(w)); }

// Rows reduced to an independent set, keeping the first occurrence order.
std::vector<Codeword> independent_rows(const std::vector<Codeword>& rows) {
  std::vector<Codeword> kept, echelon;
  for (Codeword r : rows) {
    Codeword x = r;
    for (Codeword b : echelon) x = std::min(x, x ^ b);
    if (x == 0) continue;
    kept.push_back(r);
    echelon.push_back(x);
    std::sort(echelon.rbegin(), echelon.rend());
  }
  return kept;
}

}  // namespace

BinaryCode::BinaryCode(unsigned length, std::vector<Codeword> generators) : length_(length) {
  if (length == 0 || length > 24) throw ValidationError("code length must be in 1..24");
  for (Codeword g : generators) {
    if (length < 32 && (g >> length) != 0) throw ValidationError("generator row longer than the code length");
  }
  generators_ = independent_rows(generators);
  words_ = {0};
  for (Codeword g : generators_) {
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i < n; ++i) words_.push_back(words_[i] ^ g);
  }
  std::sort(words_.begin(), words_.end());
}

bool BinaryCode::contains(Codeword w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::map<unsigned, std::uint64_t> BinaryCode::weight_distribution() const {
  std::map<unsigned, std::uint64_t> d;
  for (Codeword w : words_) d[weight(w)]++;
  return d;
}

unsigned BinaryCode::minimum_weight() const {
  unsigned best = length_ + 1;
  for (Codeword w : words_) {
    if (w != 0) best = std::min(best, weight(w));
  }
  return best;
}

bool BinaryCode::is_self_dual() const {
  if (2 * dimension() != length_) return false;
  for (Codeword a : generators_) {
    for (Codeword b : generators_) {
      if (weight(a & b) % 2 != 0) return false;
    }
  }
  return true;
}

const BinaryCode& golay_code() {
  static const BinaryCode code = [] {
    std::vector<unsigned> qr;
    for (unsigned x = 1; x < 23; ++x) qr.push_back(x * x % 23);
    std::vector<Codeword> rows;
    for (unsigned a = 0; a < 23; ++a) {
      Codeword w = 1u << a;
      for (unsigned r : qr) w |= 1u << ((r + a) % 23);
      rows.push_back(w);
    }
    rows.push_back((1u << 24) - 1);
    BinaryCode c(24, rows);
    if (c.dimension() != 12 || c.minimum_weight() != 8 || !c.is_self_dual()) {
      throw DefectError("Golay construction is not a [24,12,8] self-dual code");
    }
    return c;
  }();
  return code;
}

std::vector<Codeword> octads(const BinaryCode& code) {
  std::vector<Codeword> out;
  for (Codeword w : code.codewords()) {
    if (weight(w) == 8) out.push_back(w);
  }
  return out;
}

SteinerReport octad_steiner_check(const BinaryCode& code, bool exhaustive) {
  SteinerReport r;
  const auto oct = octads(code);
  r.octads = oct.size();
  for (Codeword o : oct) {
    if (o & 1u) ++r.through_point;
    if ((o & 3u) == 3u) ++r.through_pair;
  }
  r.counting_identity = BigInt(r.octads) * 56 == BigInt(42504);
  r.exhaustive = exhaustive;
  if (exhaustive) {
    // Every 5-set in exactly one octad: count hits per 5-subset of each octad.
    std::unordered_map<Codeword, unsigned> hits;
    hits.reserve(2 * 42504);
    for (Codeword o : oct) {
      std::vector<unsigned> pts;
      for (unsigned i = 0; i < 24; ++i) {
        if (o >> i & 1u) pts.push_back(i);
      }
      for (unsigned mask = 0; mask < 256; ++mask) {
        if (std::popcount(mask) != 5) continue;
        Codeword five = 0;
        for (unsigned k = 0; k < 8; ++k) {
          if (mask >> k & 1u) five |= 1u << pts[k];
        }
        hits[five]++;
      }
    }
    bool once = true;
    // Walk all 5-subsets of 24 points in colex order (Gosper's hack).
    for (Codeword s = 0b11111; s < (1u << 24);) {
      ++r.five_subsets_checked;
      auto it = hits.find(s);
      if (it == hits.end() || it->second != 1) once = false;
      Codeword c = s & (~s + 1), rr = s + c;
      s = (((rr ^ s) >> 2) / c) | rr;
    }
    r.every_five_subset_once = once && r.five_subsets_checked == 42504 && hits.size() == 42504;
  }
  r.holds = r.octads == 759 && r.through_point == 253 && r.through_pair == 77 && r.counting_identity &&
            (!exhaustive || r.every_five_subset_once);
  return r;
}

bool is_code_automorphism(const BinaryCode& code, const Permutation& g) {
  if (g.degree() != code.length()) return false;
  for (Codeword row : code.generators()) {
    Codeword image = 0;
    for (unsigned i = 0; i < code.length(); ++i) {
      if (row >> i & 1u) image |= 1u << g[i];
    }
    if (!code.contains(image)) return false;
  }
  return true;
}

// ---- M24 ----------------------------------------------------------------------

namespace {

constexpr Point kInfinity = 23;

// Backtracking for an octad-preserving permutation with prescribed images of
// the first points of `order`. Partial maps are pruned whenever five assigned
// points of an octad determine its image octad.
class OctadSearch {
 public:
  explicit OctadSearch(const BinaryCode& code) : code_(code), octads_(octads(code)) {
    for (unsigned i = 0; i < 24; ++i) {
      for (std::size_t k = 0; k < octads_.size(); ++k) {
        if (octads_[k] >> i & 1u) through_[i].push_back(k);
      }
    }
    five_to_octad_.reserve(2 * 42504);
    for (Codeword o : octads_) {
      std::vector<unsigned> pts;
      for (unsigned i = 0; i < 24; ++i) {
        if (o >> i & 1u) pts.push_back(i);
      }
      for (unsigned mask = 0; mask < 256; ++mask) {
        if (std::popcount(mask) != 5) continue;
        Codeword five = 0;
        for (unsigned k = 0; k < 8; ++k) {
          if (mask >> k & 1u) five |= 1u << pts[k];
        }
        five_to_octad_[five] = o;
      }
    }
  }

  // Images fixed by `forced` (pairs point -> image), then the remaining points
  // in increasing order. `moved` must map somewhere other than itself.
  bool run(const std::vector<std::pair<Point, Point>>& forced, Point moved, Permutation* out) {
    img_.fill(-1);
    used_ = 0;
    domain_ = 0;
    for (auto [p, q] : forced) {
      if (!assign(p, q)) return false;
    }
    std::vector<Point> rest;
    rest.push_back(moved);
    for (Point p = 0; p < 24; ++p) {
      if (img_[p] < 0 && p != moved) rest.push_back(p);
    }
    moved_ = moved;
    deepest_.clear();
    return extend(rest, 0, out);
  }

  std::string deepest_stack() const {
    std::string s;
    for (auto [p, q] : deepest_) s += (s.empty() ? "" : " ") + std::to_string(p) + "->" + std::to_string(q);
    return s;
  }

 private:
  bool consistent(Point x) const {
    for (std::size_t k : through_[x]) {
      const Codeword assigned = octads_[k] & domain_;
      if (std::popcount(assigned) < 5) continue;
      Codeword five = 0, images = 0;
      unsigned taken = 0;
      for (unsigned i = 0; i < 24; ++i) {
        if (!(assigned >> i & 1u)) continue;
        if (taken++ < 5) five |= 1u << img_[i];
        images |= 1u << img_[i];
      }
      auto it = five_to_octad_.find(five);
      if (it == five_to_octad_.end() || (images & ~it->second) != 0) return false;
    }
    return true;
  }

  bool assign(Point p, Point q) {
    if (used_ >> q & 1u) return false;
    img_[p] = static_cast<int>(q);
    used_ |= 1u << q;
    domain_ |= 1u << p;
    if (consistent(p)) return true;
    unassign(p);
    return false;
  }

  void unassign(Point p) {
    used_ &= ~(1u << img_[p]);
    domain_ &= ~(1u << p);
    img_[p] = -1;
  }

  bool extend(const std::vector<Point>& rest, std::size_t depth, Permutation* out) {
    if (depth > deepest_.size()) {
      deepest_.clear();
      for (Point p = 0; p < 24; ++p) {
        if (img_[p] >= 0) deepest_.emplace_back(p, static_cast<Point>(img_[p]));
      }
    }
    if (depth == rest.size()) {
      std::vector<Point> images(24);
      for (Point p = 0; p < 24; ++p) images[p] = static_cast<Point>(img_[p]);
      Permutation g(std::move(images));
      if (!is_code_automorphism(code_, g)) return false;
      *out = g;
      return true;
    }
    const Point p = rest[depth];
    for (Point q = 0; q < 24; ++q) {
      if (p == moved_ && q == p) continue;
      if (!assign(p, q)) continue;
      if (extend(rest, depth + 1, out)) return true;
      unassign(p);
    }
    return false;
  }

  const BinaryCode& code_;
  std::vector<Codeword> octads_;
  std::array<std::vector<std::size_t>, 24> through_;
  std::unordered_map<Codeword, Codeword> five_to_octad_;
  std::array<int, 24> img_{};
  Codeword used_ = 0, domain_ = 0;
  Point moved_ = 0;
  std::vector<std::pair<Point, Point>> deepest_;
};

std::uint32_t inverse_mod23(std::uint32_t x) {
  for (std::uint32_t y = 1; y < 23; ++y) {
    if (x * y % 23 == 1) return y;
  }
  return 0;
}

}  // namespace

MathieuChain mathieu_m24(const BinaryCode& code) {
  if (code.length() != 24 || code.dimension() != 12 || code.minimum_weight() != 8) {
    throw ValidationError("mathieu_m24 needs the [24,12,8] Golay code");
  }
  std::vector<Point> shift(24), invert(24);
  for (Point x = 0; x < 23; ++x) {
    shift[x] = (x + 1) % 23;
    invert[x] = x == 0 ? kInfinity : (23 - inverse_mod23(x)) % 23;
  }
  shift[kInfinity] = kInfinity;
  invert[kInfinity] = 0;
  std::vector<Permutation> gens = {Permutation(shift), Permutation(invert)};
  for (const auto& g : gens) {
    if (!is_code_automorphism(code, g)) throw DefectError("PSL_2(23) seed does not preserve the code");
  }

  // Only the identity of PSL_2(23) fixes infinity, 0 and 1, so an
  // automorphism fixing them and moving 2 lies outside it.
  OctadSearch search(code);
  Permutation extra;
  if (!search.run({{kInfinity, kInfinity}, {0, 0}, {1, 1}}, 2, &extra)) {
    throw DefectError("no code automorphism fixing infinity, 0, 1 and moving 2; deepest partial map: " +
                      search.deepest_stack());
  }
  gens.push_back(extra);

  MathieuChain chain{PermGroup(24, gens, {kInfinity, 0, 1}), gens, 0, 0, 0, {}, {}};
  chain.order = chain.m24.order();
  PermGroup m23 = chain.m24.stabilizer(kInfinity);
  chain.point_stabilizer_order = m23.order();
  chain.two_point_stabilizer_order = m23.stabilizer(0).order();
  chain.transitivity = transitivity_degree(chain.m24);
  chain.factorization = factorize(chain.order);
  return chain;
}

// ---- Leech lattice ----------------------------------------------------------

bool is_leech_vector(const BinaryCode& code, const LeechVector& x) {
  const int m = ((x[0] % 2) + 2) % 2;
  int sum = 0;
  Codeword marked = 0;
  for (unsigned i = 0; i < 24; ++i) {
    if (((x[i] % 2) + 2) % 2 != m) return false;
    sum += x[i];
    const int r = ((x[i] % 4) + 4) % 4;
    if (r == (m == 0 ? 2 : 1)) marked |= 1u << i;
  }
  if ((((sum - 4 * m) % 8) + 8) % 8 != 0) return false;
  return code.contains(marked);
}

namespace {

int norm_raw(const LeechVector& x) {
  int s = 0;
  for (int v : x) s += v * v;
  return s;
}

}  // namespace

std::vector<LatticeShapeCount> leech_minimal_vectors(const BinaryCode& code) {
  std::vector<LatticeShapeCount> out;

  LatticeShapeCount four{"four_four", 24 * 23 / 2 * 4, 0, 4};
  for (unsigned i = 0; i < 24; ++i) {
    for (unsigned j = i + 1; j < 24; ++j) {
      for (int si : {4, -4}) {
        for (int sj : {4, -4}) {
          LeechVector x{};
          x[i] = si;
          x[j] = sj;
          if (norm_raw(x) == 32 && is_leech_vector(code, x)) ++four.enumerated;
        }
      }
    }
  }
  out.push_back(four);

  // Supports range over all 8-subsets; only code supports admit a sign pattern.
  LatticeShapeCount two{"two_octad", 759 * 128, 0, 4};
  for (Codeword s = 0xFF; s < (1u << 24);) {
    if (code.contains(s)) {
      std::array<unsigned, 8> pts{};
      unsigned n = 0;
      for (unsigned i = 0; i < 24; ++i) {
        if (s >> i & 1u) pts[n++] = i;
      }
      for (unsigned signs = 0; signs < 256; ++signs) {
        LeechVector x{};
        for (unsigned k = 0; k < 8; ++k) x[pts[k]] = (signs >> k & 1u) ? -2 : 2;
        if (is_leech_vector(code, x)) ++two.enumerated;
      }
    }
    Codeword c = s & (~s + 1), r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  out.push_back(two);

  // The +1 positions away from the 3 are a codeword minus possibly that spot.
  LatticeShapeCount three{"three_ones", 24 * 4096, 0, 4};
  for (Codeword w : code.codewords()) {
    for (unsigned j = 0; j < 24; ++j) {
      for (int big : {3, -3}) {
        LeechVector x{};
        for (unsigned i = 0; i < 24; ++i) x[i] = (w >> i & 1u) ? 1 : -1;
        x[j] = big;
        if (is_leech_vector(code, x)) ++three.enumerated;
      }
    }
  }
  out.push_back(three);
  return out;
}

std::uint64_t dodecad_vector_count(const BinaryCode& code) {
  std::uint64_t count = 0;
  for (Codeword w : code.codewords()) {
    if (std::popcount(w) != 12) continue;
    std::array<unsigned, 12> pts{};
    unsigned n = 0;
    for (unsigned i = 0; i < 24; ++i) {
      if (w >> i & 1u) pts[n++] = i;
    }
    for (unsigned signs = 0; signs < 4096; ++signs) {
      LeechVector x{};
      for (unsigned k = 0; k < 12; ++k) x[pts[k]] = (signs >> k & 1u) ? -2 : 2;
      if (is_leech_vector(code, x)) ++count;
    }
  }
  return count;
}

IntegerSeries leech_theta_prefix(int num_terms) { return theta_identity_series(num_terms); }

}  // namespace fgt
