#ifndef BOLNET_LOOP_HPP
#define BOLNET_LOOP_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace bolnet {

/// Loop elements are indices in [0, n); index 0 is always the unit.
using Element = Point;

/// A finite loop stored as a normalized Latin square.
///
/// Invariants: every row and column is a permutation of 0..n-1, and
/// row 0 / column 0 are the identity. Division tables are precomputed.
class LoopTable {
 public:
  /// Validates `rows`. With `normalize`, a two-sided unit other than 0 is
  /// swapped with 0; without it such a table is rejected with NoUnit.
  static LoopTable from_rows(const std::vector<std::vector<int>>& rows, bool normalize = false,
                             std::vector<std::string> names = {}) {
    const std::size_t n = rows.size();
    if (n == 0) throw Error(ErrorCode::BadEntry, "empty table");
    std::vector<Element> flat(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n)
        throw Error(ErrorCode::BadEntry, "row " + std::to_string(r) + " has " +
                                             std::to_string(rows[r].size()) + " entries, expected " +
                                             std::to_string(n));
      for (std::size_t c = 0; c < n; ++c) {
        int v = rows[r][c];
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw Error(ErrorCode::BadEntry, "entry " + std::to_string(v) + " at (" +
                                               std::to_string(r) + "," + std::to_string(c) +
                                               ") is out of range");
        flat[r * n + c] = static_cast<Element>(v);
      }
    }
    check_latin(n, flat);

    std::optional<std::size_t> unit;
    for (std::size_t u = 0; u < n && !unit; ++u) {
      bool ok = true;
      for (std::size_t y = 0; y < n && ok; ++y)
        ok = flat[u * n + y] == y && flat[y * n + u] == y;
      if (ok) unit = u;
    }
    if (!unit) throw Error(ErrorCode::NoUnit, "no two-sided identity element");
    if (*unit != 0) {
      if (!normalize)
        throw Error(ErrorCode::NoUnit, "the unit is element " + std::to_string(*unit) +
                                           ", not 0 (normalize to relabel)");
      std::vector<Element> swap(n);
      for (std::size_t i = 0; i < n; ++i) swap[i] = static_cast<Element>(i);
      std::swap(swap[0], swap[*unit]);
      flat = relabeled(n, flat, swap);
      if (!names.empty()) std::swap(names[0], names[*unit]);
    }
    return LoopTable(n, std::move(flat), std::move(names));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_; }

  Element mul(Element x, Element y) const { return table_[x * n_ + y]; }
  /// Unique z with x*z = y.
  Element ldiv(Element x, Element y) const { return ldiv_[x * n_ + y]; }
  /// Unique z with z*y = x.
  Element rdiv(Element x, Element y) const { return rdiv_[x * n_ + y]; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) out[x][y] = table_[x * n_ + y];
    return out;
  }

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name(Element x) const {
    return x < names_.size() ? names_[x] : std::to_string(x);
  }

  /// Table of the loop transported along `images`: new x*y = p(old p^-1(x) * p^-1(y)).
  /// `images[0]` must be 0.
  LoopTable relabel(const Permutation& images) const {
    if (images.degree() != n_ || images(0) != 0)
      throw Error(ErrorCode::BadEntry, "relabeling must fix the unit");
    std::vector<Element> p(images.images().begin(), images.images().end());
    std::vector<std::string> names;
    if (!names_.empty()) {
      names.resize(n_);
      for (std::size_t i = 0; i < n_; ++i) names[p[i]] = names_[i];
    }
    return LoopTable(n_, relabeled(n_, table_, p), std::move(names));
  }

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }
  friend auto operator<=>(const LoopTable& a, const LoopTable& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.table_ <=> b.table_;
  }

  std::span<const Element> flat() const noexcept { return table_; }

 private:
  LoopTable(std::size_t n, std::vector<Element> table, std::vector<std::string> names)
      : n_(n), table_(std::move(table)), ldiv_(n * n), rdiv_(n * n), names_(std::move(names)) {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        Element p = table_[x * n_ + y];
        ldiv_[x * n_ + p] = static_cast<Element>(y);
        rdiv_[p * n_ + y] = static_cast<Element>(x);
      }
  }

  static void check_latin(std::size_t n, const std::vector<Element>& t) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<bool> row(n, false), col(n, false);
      for (std::size_t c = 0; c < n; ++c) {
        if (row[t[r * n + c]])
          throw Error(ErrorCode::NotLatin, "row " + std::to_string(r) + " repeats value " +
                                               std::to_string(t[r * n + c]));
        if (col[t[c * n + r]])
          throw Error(ErrorCode::NotLatin, "column " + std::to_string(r) + " repeats value " +
                                               std::to_string(t[c * n + r]));
        row[t[r * n + c]] = true;
        col[t[c * n + r]] = true;
      }
    }
  }

  static std::vector<Element> relabeled(std::size_t n, const std::vector<Element>& t,
                                        const std::vector<Element>& p) {
    std::vector<Element> out(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) out[p[x] * n + p[y]] = p[t[x * n + y]];
    return out;
  }

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
  std::vector<std::string> names_;
};

inline LoopTable from_rows(const std::vector<std::vector<int>>& rows, bool normalize = false) {
  return LoopTable::from_rows(rows, normalize);
}

inline Element mul(const LoopTable& l, Element x, Element y) { return l.mul(x, y); }
inline Element ldiv(const LoopTable& l, Element x, Element y) { return l.ldiv(x, y); }
inline Element rdiv(const LoopTable& l, Element x, Element y) { return l.rdiv(x, y); }

// Builtins ---------------------------------------------------------------

namespace detail {

/// Element f^i g^j is encoded as i + 4j, i in Z4, j in {0, 1}.
constexpr Element fg_code(int i, int j) { return static_cast<Element>(((i % 4) + 4) % 4 + 4 * j); }

inline std::vector<std::string> fg_names() {
  return {"e", "f", "f^2", "f^3", "g", "fg", "f^2g", "f^3g"};
}

using FgRule = std::function<Element(int i, int j)>;

/// Order-8 table from the four product rules f^i f^j, f^i (f^j g),
/// (f^i g) f^j and (f^i g)(f^j g).
inline LoopTable fg_table(const FgRule& ff, const FgRule& f_fg, const FgRule& fg_f,
                          const FgRule& fg_fg) {
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int i = x % 4, a = x / 4, j = y % 4, b = y / 4;
      const FgRule& rule = a == 0 ? (b == 0 ? ff : f_fg) : (b == 0 ? fg_f : fg_fg);
      rows[x][y] = rule(i, j);
    }
  return LoopTable::from_rows(rows, false, fg_names());
}

}  // namespace detail

/// Names accepted by `builtin`.
inline std::vector<std::string> builtin_names() { return {"B1", "B2", "B2-printed"}; }

/// The two smallest proper Bol loops in the f^i g^j encoding.
///
/// B1: f^i (f^j g) = f^(i+j) g, (f^i g) f^j = f^(i+j) g, (f^i g)(f^j g) = f^(2-i+j).
/// B2: f^i (f^j g) = f^(i+j) g, (f^i g) f^j = f^(i-j+2ij) g, (f^i g)(f^j g) = f^(i-j+2ij).
/// "B2-printed" uses i+j in place of i-j in the last two rules; that loop is
/// isotopic to B2 but has only four automorphisms, so it is kept for
/// comparison only. In every table f^i f^j = f^(i+j).
inline LoopTable builtin(std::string_view name) {
  using detail::fg_code;
  auto ff = [](int i, int j) { return fg_code(i + j, 0); };
  auto f_fg = [](int i, int j) { return fg_code(i + j, 1); };
  if (name == "B1")
    return detail::fg_table(ff, f_fg, [](int i, int j) { return fg_code(i + j, 1); },
                            [](int i, int j) { return fg_code(2 - i + j, 0); });
  if (name == "B2")
    return detail::fg_table(ff, f_fg, [](int i, int j) { return fg_code(i - j + 2 * i * j, 1); },
                            [](int i, int j) { return fg_code(i - j + 2 * i * j, 0); });
  if (name == "B2-printed")
    return detail::fg_table(ff, f_fg, [](int i, int j) { return fg_code(i + j + 2 * i * j, 1); },
                            [](int i, int j) { return fg_code(i + j + 2 * i * j, 0); });
  throw Error(ErrorCode::UnknownName, "no builtin loop named '" + std::string(name) + "'");
}

/// Cayley table of Z_n as a loop.
inline LoopTable cyclic_loop(std::size_t n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = static_cast<int>((x + y) % n);
  return LoopTable::from_rows(rows);
}

// Translations -----------------------------------------------------------

/// lambda_x : y -> x*y
inline Permutation left_translation(const LoopTable& l, Element x) {
  return Permutation::from_function(l.order(), [&](Point y) { return l.mul(x, y); });
}

/// rho_x : y -> y*x
inline Permutation right_translation(const LoopTable& l, Element x) {
  return Permutation::from_function(l.order(), [&](Point y) { return l.mul(y, x); });
}

/// [lambda_0, ..., lambda_{n-1}]
inline std::vector<Permutation> section(const LoopTable& l) {
  std::vector<Permutation> out;
  for (std::size_t x = 0; x < l.order(); ++x) out.push_back(left_translation(l, static_cast<Element>(x)));
  return out;
}

// Nuclei -----------------------------------------------------------------

enum class NucleusSide { Left, Middle, Right };

inline std::vector<Element> nucleus(const LoopTable& l, NucleusSide side) {
  const std::size_t n = l.order();
  std::vector<Element> out;
  for (Element a = 0; a < n; ++a) {
    bool in = true;
    for (Element x = 0; x < n && in; ++x)
      for (Element y = 0; y < n && in; ++y) {
        switch (side) {
          case NucleusSide::Left: in = l.mul(l.mul(a, x), y) == l.mul(a, l.mul(x, y)); break;
          case NucleusSide::Middle: in = l.mul(l.mul(x, a), y) == l.mul(x, l.mul(a, y)); break;
          case NucleusSide::Right: in = l.mul(l.mul(x, y), a) == l.mul(x, l.mul(y, a)); break;
        }
      }
    if (in) out.push_back(a);
  }
  return out;
}

/// Multiplication table of a subset closed under the loop product, in
/// subset-position labels. The subset must contain 0 first.
inline LoopTable induced_subloop(const LoopTable& l, const std::vector<Element>& subset) {
  std::vector<std::vector<int>> rows(subset.size(), std::vector<int>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j) {
      Element p = l.mul(subset[i], subset[j]);
      auto it = std::find(subset.begin(), subset.end(), p);
      if (it == subset.end()) throw Error(ErrorCode::NotSubset, "subset is not closed");
      rows[i][j] = static_cast<int>(it - subset.begin());
    }
  return LoopTable::from_rows(rows);
}

// Inverse property -------------------------------------------------------

/// J : x -> x^-1 with lambda_x^-1 = lambda_{J(x)}, when the loop has the
/// left inverse property.
inline std::optional<Permutation> lip_inverse_map(const LoopTable& l) {
  const std::size_t n = l.order();
  std::vector<Point> images(n);
  for (Element x = 0; x < n; ++x) {
    Element inv = l.ldiv(x, 0);  // x * inv = 1
    for (Element y = 0; y < n; ++y)
      if (l.mul(inv, l.mul(x, y)) != y) return std::nullopt;
    images[x] = inv;
  }
  return Permutation(std::move(images));
}

// Identities -------------------------------------------------------------

enum class LoopProperty { LeftBol, Lcc, Associative, Lip };

struct PropertyCheck {
  bool holds = true;
  /// Counterexample elements; empty when the property holds.
  std::vector<Element> witness;
  explicit operator bool() const { return holds; }
};

inline PropertyCheck check_property(const LoopTable& l, LoopProperty prop) {
  const std::size_t n = l.order();
  auto fail = [](std::vector<Element> w) { return PropertyCheck{false, std::move(w)}; };
  switch (prop) {
    case LoopProperty::LeftBol:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          Element xyx = l.mul(x, l.mul(y, x));
          for (Element z = 0; z < n; ++z)
            if (l.mul(x, l.mul(y, l.mul(x, z))) != l.mul(xyx, z)) return fail({x, y, z});
        }
      return {};
    case LoopProperty::Associative:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z)
            if (l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z))) return fail({x, y, z});
      return {};
    case LoopProperty::Lcc: {
      // lambda_x^-1 lambda_y lambda_x must be lambda_u with u its image of 1
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          Element u = l.mul(x, l.mul(y, l.ldiv(x, 0)));
          for (Element z = 0; z < n; ++z)
            if (l.mul(x, l.mul(y, l.ldiv(x, z))) != l.mul(u, z)) return fail({x, y});
        }
      return {};
    }
    case LoopProperty::Lip:
      for (Element x = 0; x < n; ++x) {
        Element inv = l.ldiv(x, 0);
        for (Element y = 0; y < n; ++y)
          if (l.mul(inv, l.mul(x, y)) != y) return fail({x});
      }
      return {};
  }
  return {};
}

// Isotopes and isomorphism -----------------------------------------------

/// x o y = (x/b)(a\y), unit a*b, relabeled by swapping the unit with 0.
inline LoopTable principal_isotope(const LoopTable& l, Element a, Element b) {
  const std::size_t n = l.order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) rows[x][y] = l.mul(l.rdiv(x, b), l.ldiv(a, y));
  return LoopTable::from_rows(rows, true);
}

namespace detail {

/// Smallest-first generating sequence of a loop: each element enlarges the
/// subloop generated so far.
inline std::vector<Element> loop_generators(const LoopTable& l) {
  const std::size_t n = l.order();
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<Element> span{0}, gens;
  for (Element x = 1; x < n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    in[x] = true;
    span.push_back(x);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = 0; j < span.size(); ++j) {
          Element p = l.mul(span[i], span[j]);
          if (!in[p]) {
            in[p] = true;
            span.push_back(p);
            grew = true;
          }
        }
    }
  }
  return gens;
}

/// Isomorphism-invariant tag per element: order of lambda_x and nucleus
/// membership bits.
inline std::vector<std::size_t> element_profile(const LoopTable& l) {
  const std::size_t n = l.order();
  std::vector<bool> ln(n), mn(n), rn(n);
  for (Element a : nucleus(l, NucleusSide::Left)) ln[a] = true;
  for (Element a : nucleus(l, NucleusSide::Middle)) mn[a] = true;
  for (Element a : nucleus(l, NucleusSide::Right)) rn[a] = true;
  std::vector<std::size_t> out(n);
  for (Element x = 0; x < n; ++x)
    out[x] = left_translation(l, x).order() * 8 + (ln[x] ? 4 : 0) + (mn[x] ? 2 : 0) +
             (rn[x] ? 1 : 0);
  return out;
}

}  // namespace detail

namespace detail {

/// Backtracks over images of `loop_generators(l)` and enumerates every
/// bijection p of [0, n) with p(0) = 0 and p(x*y) = rule(p(x), p(y)) for all
/// x, y. Images must agree in `src_profile` / `dst_profile` tags. `visit(p)`
/// returns false to stop the enumeration.
template <typename Rule, typename Visit>
void enumerate_twisted_morphisms(const LoopTable& l, Rule&& rule,
                                 const std::vector<std::size_t>& src_profile,
                                 const std::vector<std::size_t>& dst_profile, Visit&& visit) {
  const std::size_t n = l.order();
  const auto gens = loop_generators(l);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  map[0] = 0;
  used[0] = true;
  bool stop = false;
  std::function<void(std::size_t)> search = [&](std::size_t level) {
    if (level == gens.size()) {
      std::vector<Point> images(map.begin(), map.end());
      if (!visit(Permutation(std::move(images)))) stop = true;
      return;
    }
    for (Element t = 1; t < n && !stop; ++t) {
      if (used[t] || dst_profile[t] != src_profile[gens[level]]) continue;
      const std::vector<int> saved_map = map;
      const std::vector<bool> saved_used = used;
      map[gens[level]] = t;
      used[t] = true;
      bool ok = true;
      for (bool grew = true; grew && ok;) {
        grew = false;
        for (Element x = 0; x < n && ok; ++x) {
          if (map[x] < 0) continue;
          for (Element y = 0; y < n && ok; ++y) {
            if (map[y] < 0) continue;
            Element p = l.mul(x, y);
            Element q = rule(static_cast<Element>(map[x]), static_cast<Element>(map[y]));
            if (map[p] < 0) {
              if (used[q] || dst_profile[q] != src_profile[p]) {
                ok = false;
              } else {
                map[p] = q;
                used[q] = true;
                grew = true;
              }
            } else if (map[p] != q) {
              ok = false;
            }
          }
        }
      }
      if (ok) search(level + 1);
      map = saved_map;
      used = saved_used;
    }
  };
  search(0);
}

}  // namespace detail

/// A relabeling p with M = relabel(L, p), i.e. p(x*y) = p(x) * p(y), if any.
/// Candidate images are pruned by the order of lambda_x and nucleus membership.
inline std::optional<Permutation> is_isomorphic(const LoopTable& l, const LoopTable& m) {
  if (m.order() != l.order()) return std::nullopt;
  auto pl = detail::element_profile(l), pm = detail::element_profile(m);
  {
    auto sl = pl, sm = pm;
    std::sort(sl.begin(), sl.end());
    std::sort(sm.begin(), sm.end());
    if (sl != sm) return std::nullopt;
  }
  std::optional<Permutation> found;
  detail::enumerate_twisted_morphisms(
      l, [&](Element u, Element v) { return m.mul(u, v); }, pl, pm,
      [&](Permutation p) {
        found = std::move(p);
        return false;
      });
  return found;
}

/// Any isotope of L is isomorphic to a principal isotope, so it suffices to
/// test M against all n^2 principal isotopes.
inline bool is_isotopic(const LoopTable& l, const LoopTable& m) {
  if (l.order() != m.order()) return false;
  for (Element a = 0; a < l.order(); ++a)
    for (Element b = 0; b < l.order(); ++b)
      if (is_isomorphic(principal_isotope(l, a, b), m)) return true;
  return false;
}

}  // namespace bolnet

#endif  // BOLNET_LOOP_HPP
