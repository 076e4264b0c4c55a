#include "fgt/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "fgt/cayley_table.hpp"
#include "fgt/errors.hpp"
#include "fgt/limits.hpp"
#include "fgt/numeric.hpp"

namespace fgt {

// ---- Cyclotomics ------------------------------------------------------------

namespace {

using Poly = std::vector<std::int64_t>;

Poly exact_divide(Poly num, const Poly& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw DefectError("inexact cyclotomic division");
  }
  return quot;
}

Poly cyclotomic_poly(std::uint64_t n) {
  static std::map<std::uint64_t, Poly> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_divide(p, cyclotomic_poly(d));
  }
  memo[n] = p;
  return p;
}

}  // namespace

Cyclotomics::Cyclotomics(std::uint64_t m) : m_(m) {
  if (m == 0) throw ValidationError("root of unity order must be positive");
  if (m > 100000) throw ResourceError("cyclotomic field of order above 100000");
  phi_ = cyclotomic_poly(m);
  powers_.reserve(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    Poly x(k + 1, 0);
    x[k] = 1;
    powers_.push_back(reduce(std::move(x)));
  }
}

Cyclotomics::Value Cyclotomics::reduce(std::vector<std::int64_t> poly) const {
  const std::size_t deg = dimension();
  for (std::size_t i = poly.size(); i-- > deg;) {
    std::int64_t c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi_[j];
  }
  poly.resize(deg, 0);
  return poly;
}

Cyclotomics::Value Cyclotomics::from_int(std::int64_t n) const {
  Value v(dimension(), 0);
  v[0] = n;
  return v;
}

Cyclotomics::Value Cyclotomics::from_root_sum(const std::vector<std::int64_t>& coeffs) const {
  Poly folded(m_, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) folded[k % m_] += coeffs[k];
  return reduce(std::move(folded));
}

Cyclotomics::Value Cyclotomics::root_power(std::int64_t k) const {
  auto m = static_cast<std::int64_t>(m_);
  return powers_[static_cast<std::size_t>(((k % m) + m) % m)];
}

Cyclotomics::Value Cyclotomics::add(const Value& a, const Value& b) const {
  Value r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Cyclotomics::Value Cyclotomics::sub(const Value& a, const Value& b) const {
  Value r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Cyclotomics::Value Cyclotomics::mul(const Value& a, const Value& b) const {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  return reduce(std::move(prod));
}

Cyclotomics::Value Cyclotomics::scale(const Value& a, std::int64_t c) const {
  Value r(a);
  for (auto& x : r) x *= c;
  return r;
}

Cyclotomics::Value Cyclotomics::conj(const Value& a) const {
  Poly p(m_, 0);
  for (std::size_t i = 0; i < a.size(); ++i) p[(m_ - i) % m_] += a[i];
  return reduce(std::move(p));
}

bool Cyclotomics::is_integer(const Value& a, std::int64_t* out) const {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] != 0) return false;
  }
  if (out) *out = a[0];
  return true;
}

std::complex<double> Cyclotomics::to_complex(const Value& a) const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m_);
    z += static_cast<double>(a[k]) * std::polar(1.0, angle);
  }
  return z;
}

std::string Cyclotomics::to_string(const Value& a) const {
  std::string s;
  for (std::size_t k = a.size(); k-- > 0;) {
    std::int64_t c = a[k];
    if (c == 0) continue;
    if (c < 0) {
      s += "-";
    } else if (!s.empty()) {
      s += "+";
    }
    std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
    if (k == 0 || mag != 1) s += std::to_string(mag);
    if (k >= 1) s += "z";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

// ---- Linear algebra mod p ---------------------------------------------------

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

struct ModP {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t inv(std::uint64_t a) const { return pow_mod(a, p - 2, p); }
};

// Reduced row echelon form of the given row vectors; returns the nonzero
// rows and their pivot columns.
struct Space {
  Mat basis;
  std::vector<std::size_t> pivots;
};

Space echelon(Mat rows, const ModP& f) {
  Space s;
  if (rows.empty()) return s;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint64_t iv = f.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = f.mul(x, iv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::uint64_t factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
    }
    s.pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  s.basis = std::move(rows);
  return s;
}

// Null space of a square matrix.
Mat null_space(Mat m, const ModP& f) {
  const std::size_t n = m.size();
  Space s = echelon(std::move(m), f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : s.pivots) is_pivot[c] = true;
  Mat result;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < s.pivots.size(); ++r) v[s.pivots[r]] = f.sub(0, s.basis[r][free]);
    result.push_back(std::move(v));
  }
  return result;
}

// Characteristic polynomial det(xI - m), low degree first, via reduction to
// upper Hessenberg form.
Vec char_poly(Mat h, const ModP& f) {
  const std::size_t n = h.size();
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h[piv][col] == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      std::swap(h[piv], h[col + 1]);
      for (auto& row : h) std::swap(row[piv], row[col + 1]);
    }
    std::uint64_t iv = f.inv(h[col + 1][col]);
    for (std::size_t i = col + 2; i < n; ++i) {
      std::uint64_t u = f.mul(h[i][col], iv);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) h[i][k] = f.sub(h[i][k], f.mul(u, h[col + 1][k]));
      for (std::size_t k = 0; k < n; ++k) h[k][col + 1] = f.add(h[k][col + 1], f.mul(u, h[k][i]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      next[k + 1] = f.add(next[k + 1], p[m - 1][k]);
      next[k] = f.sub(next[k], f.mul(h[m - 1][m - 1], p[m - 1][k]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      std::uint64_t c = f.mul(t, h[m - i - 1][m - 1]);
      if (c == 0) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) next[k] = f.sub(next[k], f.mul(c, p[m - i - 1][k]));
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::uint64_t primitive_root(std::uint64_t p) {
  auto factors = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](const auto& pe) { return pow_mod(g, (p - 1) / pe.first, p) != 1; });
    if (ok) return g;
  }
  return 1;  // p == 2
}

}  // namespace

std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t group_order) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(group_order));
  for (std::uint64_t p = exponent + 1; p < 10'000'000; p += exponent) {
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
  }
  throw ConfigurationError("no prime p = 1 mod " + std::to_string(exponent) + " with p > 2 sqrt(" +
                           std::to_string(group_order) + ") below 10^7");
}

// ---- Dixon-Schneider --------------------------------------------------------

CharacterTable character_table(const PermGroup& g) {
  const std::uint64_t bound = limits().character_bound;
  if (g.order() > bound) {
    throw ResourceError("character tables are limited to groups of order <= " + std::to_string(bound) + ", got " +
                        to_decimal(g.order()));
  }
  CayleyTable t(g, bound);
  const std::size_t n = t.size();
  ClassData cd = conjugacy_classes(g);
  const std::size_t r = cd.num_classes;

  std::vector<std::size_t> class_of(n, r);
  std::vector<ElementIndex> rep_index(r);
  for (std::size_t k = 0; k < r; ++k) {
    rep_index[k] = t.index_of(cd.representatives[k]);
    for (ElementIndex x = 0; x < n; ++x) class_of[t.index_of(cd.representatives[k].conjugate_by(t.element(x)))] = k;
  }

  std::uint64_t e = 1;
  for (auto o : cd.class_rep_orders) e = lcm_u64(e, o);
  const std::uint64_t p = dixon_prime(e, n);
  const ModP f{p};

  // a[j][i][k] = #{x in C_j : x^-1 g_k in C_i}, the coefficient of C_k in C_j C_i.
  std::vector<Mat> a(r, Mat(r, Vec(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    for (ElementIndex x = 0; x < n; ++x) {
      ElementIndex y = t.mul(t.inv(x), rep_index[k]);
      ++a[class_of[x]][class_of[y]][k];
    }
  }

  // Split F_p^r into common eigenspaces of the a[j]; the central characters
  // w_k = h_k chi(g_k) / chi(1) satisfy a[j] w = w_j w.
  Mat identity(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<Space> spaces{echelon(identity, f)};
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; })) break;
    std::vector<Space> next;
    for (auto& s : spaces) {
      const std::size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      Mat restricted(d, Vec(d, 0));
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t c2 = 0; c2 < d; ++c2) {
          std::size_t row = s.pivots[c2];
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) acc = f.add(acc, f.mul(a[j][row][k], s.basis[c][k]));
          restricted[c2][c] = acc;
        }
      }
      Vec cp = char_poly(restricted, f);
      std::vector<std::uint64_t> roots;
      for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
        std::uint64_t v = 0;
        for (std::size_t k = cp.size(); k-- > 0;) v = f.add(f.mul(v, lambda), cp[k]);
        if (v == 0) roots.push_back(lambda);
      }
      if (roots.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      std::size_t total = 0;
      for (auto lambda : roots) {
        Mat shifted = restricted;
        for (std::size_t c = 0; c < d; ++c) shifted[c][c] = f.sub(shifted[c][c], lambda);
        Mat rows;
        for (const auto& u : null_space(shifted, f)) {
          Vec v(r, 0);
          for (std::size_t c = 0; c < d; ++c) {
            if (u[c] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(u[c], s.basis[c][k]));
          }
          rows.push_back(std::move(v));
        }
        total += rows.size();
        next.push_back(echelon(std::move(rows), f));
      }
      if (total != d) throw DefectError("class algebra is not diagonalizable modulo " + std::to_string(p));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw DefectError("common eigenspaces did not separate the characters");

  std::vector<std::uint64_t> h_inv(r);
  for (std::size_t k = 0; k < r; ++k) h_inv[k] = f.inv(cd.class_sizes[k] % p);
  std::vector<std::size_t> inverse_class(r);
  for (std::size_t k = 0; k < r; ++k) inverse_class[k] = class_of[t.inv(rep_index[k])];

  std::vector<std::uint64_t> zpow(e);
  const std::uint64_t z = pow_mod(primitive_root(p), (p - 1) / e, p);
  zpow[0] = 1;
  for (std::uint64_t i = 1; i < e; ++i) zpow[i] = f.mul(zpow[i - 1], z);
  const std::uint64_t e_inv = f.inv(e % p);

  // power_class[k][s] = class of g_k^s, 0 <= s < order(g_k).
  std::vector<std::vector<std::size_t>> power_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto o = cd.class_rep_orders[k];
    for (std::uint64_t s = 0; s < o; ++s) {
      power_class[k].push_back(class_of[t.index_of(cd.representatives[k].pow(static_cast<std::int64_t>(s)))]);
    }
  }

  Cyclotomics field(e);
  struct Row {
    std::uint64_t degree;
    std::vector<Cyclotomics::Value> values;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> sums;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    Vec w = s.basis[0];
    if (w[0] == 0) throw DefectError("central character vanishes on the identity class");
    std::uint64_t scale = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, scale);

    std::uint64_t norm = 0;
    for (std::size_t k = 0; k < r; ++k) norm = f.add(norm, f.mul(f.mul(w[k], w[inverse_class[k]]), h_inv[k]));
    const std::uint64_t d2 = f.mul(n % p, f.inv(norm));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (d * d % p == d2) degree = d;
    }
    if (degree == 0) throw DefectError("character degree is not recoverable modulo " + std::to_string(p));

    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = f.mul(f.mul(degree % p, w[k]), h_inv[k]);

    Row row{degree, {}, {}};
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint64_t o = cd.class_rep_orders[k];
      std::vector<std::int64_t> coeffs(e, 0);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> sum;
      std::uint64_t total = 0;
      for (std::uint64_t l = 0; l < e; ++l) {
        std::uint64_t acc = 0;
        for (std::uint64_t s2 = 0; s2 < e; ++s2) {
          acc = f.add(acc, f.mul(chi[power_class[k][s2 % o]], zpow[(e - (l * s2) % e) % e]));
        }
        std::uint64_t mult = f.mul(acc, e_inv);
        if (mult > degree) throw DefectError("eigenvalue multiplicity exceeds the degree");
        if (mult == 0) continue;
        coeffs[l] = static_cast<std::int64_t>(mult);
        sum.emplace_back(static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(mult));
        total += mult;
      }
      if (total != degree) throw DefectError("eigenvalue multiplicities do not sum to the degree");
      row.values.push_back(field.from_root_sum(coeffs));
      row.sums.push_back(std::move(sum));
    }
    rows.push_back(std::move(row));
  }

  const auto one = field.from_int(1);
  auto trivial = std::find_if(rows.begin(), rows.end(), [&](const Row& row) {
    return std::all_of(row.values.begin(), row.values.end(), [&](const auto& v) { return v == one; });
  });
  if (trivial == rows.end()) throw DefectError("trivial character missing");
  std::iter_swap(rows.begin(), trivial);
  std::sort(rows.begin() + 1, rows.end(), [](const Row& x, const Row& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.values > y.values;
  });

  CharacterTable table;
  table.group_order = n;
  table.root_order = e;
  table.lifting_prime = p;
  table.class_sizes = cd.class_sizes;
  table.class_rep_orders = cd.class_rep_orders;
  table.representatives = cd.representatives;
  table.inverse_class = inverse_class;
  for (auto& row : rows) {
    table.degrees.push_back(row.degree);
    table.values.push_back(std::move(row.values));
    table.root_sums.push_back(std::move(row.sums));
  }
  if (auto failure = verify_character_table(table); !failure.empty()) throw DefectError(failure);
  return table;
}

std::string verify_character_table(const CharacterTable& t) {
  const std::size_t r = t.degrees.size();
  const auto m = t.root_order;
  Cyclotomics field(m);
  if (t.values.size() != r || t.class_sizes.size() != r) return "table is not square";

  std::uint64_t sum_sq = 0;
  for (auto d : t.degrees) sum_sq += d * d;
  if (sum_sq != t.group_order) return "sum of squared degrees is " + std::to_string(sum_sq);
  for (std::size_t i = 0; i < r; ++i) {
    if (t.values[i][0] != field.from_int(static_cast<std::int64_t>(t.degrees[i]))) {
      return "first column differs from the degrees in row " + std::to_string(i);
    }
    if (t.values[0][i] != field.from_int(1)) return "row 0 is not the trivial character";
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<std::int64_t> coeffs(m, 0);
      for (auto [l, mult] : t.root_sums[i][k]) coeffs[l] += mult;
      if (field.from_root_sum(coeffs) != t.values[i][k]) return "root sum and reduced value disagree";
    }
  }

  // Products of root sums accumulate as exponent counts mod m; conj(ζ^l) = ζ^-l.
  auto accumulate = [&](std::vector<std::int64_t>& acc, const auto& x, const auto& y, std::int64_t weight) {
    for (auto [lx, mx] : x) {
      for (auto [ly, my] : y) acc[(lx + m - ly) % m] += weight * mx * my;
    }
  };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      std::vector<std::int64_t> acc(m, 0);
      for (std::size_t k = 0; k < r; ++k) {
        accumulate(acc, t.root_sums[i][k], t.root_sums[j][k], static_cast<std::int64_t>(t.class_sizes[k]));
      }
      auto expected = static_cast<std::int64_t>(i == j ? t.group_order : 0);
      if (field.from_root_sum(acc) != field.from_int(expected)) {
        return "row orthogonality fails for characters " + std::to_string(i) + ", " + std::to_string(j);
      }
    }
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k; l < r; ++l) {
      std::vector<std::int64_t> acc(m, 0);
      for (std::size_t i = 0; i < r; ++i) accumulate(acc, t.root_sums[i][k], t.root_sums[i][l], 1);
      auto expected = static_cast<std::int64_t>(k == l ? t.group_order / t.class_sizes[k] : 0);
      if (field.from_root_sum(acc) != field.from_int(expected)) {
        return "column orthogonality fails for classes " + std::to_string(k) + ", " + std::to_string(l);
      }
    }
  }
  return {};
}

}  // namespace fgt
