#include "fgt/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fgt/errors.hpp"

namespace fgt {

Permutation::Permutation(std::size_t degree) : images_(degree) { std::iota(images_.begin(), images_.end(), Point{0}); }

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point y = images_[i];
    if (y >= images_.size()) {
      throw ValidationError("not a permutation: image " + std::to_string(y) + " of point " + std::to_string(i) +
                            " is out of range for degree " + std::to_string(images_.size()));
    }
    if (seen[y]) {
      throw ValidationError("not a permutation: image " + std::to_string(y) + " is repeated (at point " +
                            std::to_string(i) + ")");
    }
    seen[y] = 1;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree) {
        throw ValidationError("cycle point " + std::to_string(x) + " out of range for degree " +
                              std::to_string(degree));
      }
      if (used[x]) throw ValidationError("not a permutation: point " + std::to_string(x) + " repeated in cycles");
      used[x] = 1;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

namespace {

std::vector<Point> parse_numbers(std::string_view body, std::string_view whole) {
  std::vector<Point> out;
  std::size_t i = 0;
  while (i < body.size()) {
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("malformed permutation '" + std::string(whole) + "'");
    }
    unsigned long long v = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      v = v * 10 + static_cast<unsigned>(body[i] - '0');
      if (v > 0xFFFFFFFFull) throw ValidationError("point index too large in '" + std::string(whole) + "'");
      ++i;
    }
    out.push_back(static_cast<Point>(v));
  }
  return out;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::size_t first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) throw ValidationError("empty permutation");
  text = text.substr(first, text.find_last_not_of(" \t\n") - first + 1);
  if (text.front() == '[') {
    if (text.back() != ']') throw ValidationError("malformed image array '" + std::string(text) + "'");
    auto images = parse_numbers(text.substr(1, text.size() - 2), text);
    if (images.size() != degree) {
      throw DomainError("image array has " + std::to_string(images.size()) + " entries, expected degree " +
                        std::to_string(degree));
    }
    return Permutation(std::move(images));
  }
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ValidationError("malformed cycle notation '" + std::string(text) + "'");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw ValidationError("unbalanced cycle in '" + std::string(text) + "'");
    auto cycle = parse_numbers(text.substr(i + 1, close - i - 1), text);
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw DomainError("cannot multiply permutations of degree " + std::to_string(degree()) + " and " +
                      std::to_string(rhs.degree()));
  }
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  Permutation result(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      cycle.push_back(static_cast<Point>(x));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::optional<Point> Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return std::nullopt;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << ')';
  }
  return out.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fgt
