#ifndef BOLNET_GROUP_ALGORITHMS_HPP
#define BOLNET_GROUP_ALGORITHMS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace bolnet {

/// Largest group order accepted by the tabulated algorithms (isomorphism,
/// subgroup enumeration).
inline constexpr std::size_t kMaxTabulatedOrder = 256;

struct SubgroupTest {
  bool is_subgroup = false;
  bool is_normal = false;
};

struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::map<std::size_t, std::size_t> element_order_histogram;
  std::size_t center_order = 0;
  /// Number of derived-series steps to the trivial group; -1 if not solvable.
  int derived_length = 0;
  std::vector<std::size_t> abelian_invariants_of_abelianization;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

namespace detail {

inline void require_same_degree(const GeneratedGroup& a, const GeneratedGroup& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DegreeMismatch, "groups act on different numbers of points");
}

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// The prime p if n = p^k with k >= 1.
inline std::optional<std::size_t> prime_of_power(std::size_t n) {
  auto primes = prime_factors(n);
  if (primes.size() != 1) return std::nullopt;
  return primes.front();
}

/// Bitset over element indices of one tabulated group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Multiplication table of a materialized group, indices as in `elements()`.
class CayleyTable {
 public:
  explicit CayleyTable(const GeneratedGroup& g) : n_(g.order()) {
    if (n_ > kMaxTabulatedOrder)
      throw Error(ErrorCode::OrderTooLarge, "group order " + std::to_string(n_) +
                                                " exceeds the tabulation limit");
    mul_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        mul_[i * n_ + j] = static_cast<std::uint16_t>(*g.index_of(g.element(i) * g.element(j)));
    identity_ = *g.index_of(g.identity());
    inverse_.resize(n_);
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      inverse_[i] = *g.index_of(g.element(i).inverse());
      order_[i] = g.element(i).order();
    }
  }

  std::size_t size() const { return n_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t order(std::size_t a) const { return order_[a]; }

  std::size_t centralizer_size(std::size_t a) const {
    std::size_t c = 0;
    for (std::size_t b = 0; b < n_; ++b)
      if (mul(a, b) == mul(b, a)) ++c;
    return c;
  }

  /// Subgroup generated by `gens` as an element set.
  ElementSet closure(const std::vector<std::size_t>& gens) const {
    ElementSet in(n_);
    std::vector<std::size_t> stack{identity_};
    in.set(identity_);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t g : gens) {
        std::size_t y = mul(x, g);
        if (!in.test(y)) {
          in.set(y);
          stack.push_back(y);
        }
      }
    }
    return in;
  }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> mul_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> order_;
};

inline std::vector<Permutation> members(const GeneratedGroup& g, const ElementSet& s) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (s.test(i)) out.push_back(g.element(i));
  return out;
}

}  // namespace detail

inline bool is_subset(const GeneratedGroup& s, const GeneratedGroup& g) {
  return s.is_subgroup_of(g);
}

/// Subgroup and normality predicates for `s` inside `g`.
inline SubgroupTest subgroup_tests(const GeneratedGroup& g, const GeneratedGroup& s) {
  detail::require_same_degree(g, s);
  if (!s.is_subgroup_of(g)) throw Error(ErrorCode::NotSubset, "S is not contained in G");
  SubgroupTest out{true, true};
  auto s_gens = s.generators();
  std::vector<Permutation> fallback;
  if (s_gens.empty() && !s.is_trivial()) {
    fallback.assign(s.elements().begin(), s.elements().end());
    s_gens = fallback;
  }
  for (const auto& x : g.generators())
    for (const auto& h : s_gens)
      if (!s.contains(conjugate(h, x))) return {true, false};
  return out;
}

/// Same predicates for an arbitrary element list (closure is checked).
inline SubgroupTest subgroup_tests(const GeneratedGroup& g, std::span<const Permutation> s) {
  for (const auto& x : s)
    if (!g.contains(x)) throw Error(ErrorCode::NotSubset, "S is not contained in G");
  std::set<Permutation> set(s.begin(), s.end());
  if (!set.count(g.identity())) return {};
  for (const auto& a : s)
    for (const auto& b : s)
      if (!set.count(a * b)) return {};
  auto as_group = GeneratedGroup::from_elements(g.degree(), s);
  return subgroup_tests(g, as_group);
}

inline bool is_normal(const GeneratedGroup& g, const GeneratedGroup& s) {
  return subgroup_tests(g, s).is_normal;
}

inline GeneratedGroup join(const GeneratedGroup& a, const GeneratedGroup& b) {
  detail::require_same_degree(a, b);
  std::vector<Permutation> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return GeneratedGroup::generate(a.degree(), gens);
}

inline GeneratedGroup intersection(const GeneratedGroup& a, const GeneratedGroup& b) {
  detail::require_same_degree(a, b);
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return GeneratedGroup::from_elements(a.degree(), common);
}

/// Smallest subgroup of `ambient` containing `seeds` and normalized by it.
inline GeneratedGroup normal_closure(const GeneratedGroup& ambient,
                                     std::vector<Permutation> seeds) {
  GeneratedGroup k = GeneratedGroup::generate(ambient.degree(), seeds);
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& x : ambient.generators()) {
      for (const auto& c : std::vector<Permutation>(seeds)) {
        Permutation y = conjugate(c, x);
        if (!k.contains(y)) {
          seeds.push_back(y);
          grew = true;
        }
      }
    }
    if (grew) k = GeneratedGroup::generate(ambient.degree(), seeds);
  }
  return k;
}

/// [G, H]: generated by `g^-1 h^-1 g h` over generator pairs, then made normal
/// in <G, H>. Pass H = G for the derived subgroup.
inline GeneratedGroup commutator_subgroup(const GeneratedGroup& g, const GeneratedGroup& h) {
  detail::require_same_degree(g, h);
  std::vector<Permutation> seeds;
  for (const auto& a : g.generators())
    for (const auto& b : h.generators()) {
      Permutation c = commutator(a, b);
      if (!c.is_identity()) seeds.push_back(c);
    }
  return normal_closure(join(g, h), std::move(seeds));
}

inline GeneratedGroup derived_subgroup(const GeneratedGroup& g) { return commutator_subgroup(g, g); }

inline GeneratedGroup center(const GeneratedGroup& g) {
  std::vector<Permutation> z;
  for (const auto& x : g.elements()) {
    bool central = true;
    for (const auto& s : g.generators())
      if (x * s != s * x) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return GeneratedGroup::from_elements(g.degree(), z);
}

/// Frattini subgroup of a p-group: generated by the derived subgroup and all
/// p-th powers.
inline GeneratedGroup frattini(const GeneratedGroup& g) {
  if (g.is_trivial()) return g;
  auto p = detail::prime_of_power(g.order());
  if (!p) throw Error(ErrorCode::NotPGroup, "order " + std::to_string(g.order()) +
                                                " is not a prime power");
  GeneratedGroup d = derived_subgroup(g);
  std::vector<Permutation> gens(d.generators().begin(), d.generators().end());
  for (const auto& x : g.elements()) {
    Permutation y = x.pow(static_cast<long long>(*p));
    if (!y.is_identity()) gens.push_back(y);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return normal_closure(g, gens);
}

/// Right cosets N g, acted on by right multiplication: a faithful model of
/// G/N as a permutation group of degree [G:N]. N must be normal in G.
inline GeneratedGroup quotient(const GeneratedGroup& g, const GeneratedGroup& n) {
  if (!subgroup_tests(g, n).is_normal)
    throw Error(ErrorCode::NotSubset, "quotient requires a normal subgroup");
  std::vector<std::size_t> coset_of(g.order(), SIZE_MAX);
  std::size_t cosets = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of[i] != SIZE_MAX) continue;
    for (const auto& m : n.elements()) coset_of[*g.index_of(m * g.element(i))] = cosets;
    ++cosets;
  }
  std::vector<std::size_t> rep(cosets);
  for (std::size_t i = g.order(); i-- > 0;) rep[coset_of[i]] = i;
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    gens.push_back(Permutation::from_function(cosets, [&](Point c) {
      return coset_of[*g.index_of(g.element(rep[c]) * s)];
    }));
  }
  return GeneratedGroup::generate(cosets, gens);
}

/// Invariant factors d1 | d2 | ... with product |G|; empty for the trivial group.
inline std::vector<std::size_t> abelian_invariants(const GeneratedGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::NotAbelian, "abelian_invariants needs an abelian group");
  std::vector<std::vector<std::size_t>> primary;  // per prime, exponents descending
  for (std::size_t p : detail::prime_factors(g.order())) {
    // s_k = log_p #{x : x^(p^k) = 1} = sum_i min(k, e_i)
    std::vector<std::size_t> s{0};
    for (std::size_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (const auto& x : g.elements())
        if (x.pow(static_cast<long long>(pk)).is_identity()) ++count;
      std::size_t logc = 0;
      for (std::size_t c = count; c > 1; c /= p) ++logc;
      s.push_back(logc);
      if (s.back() == s[s.size() - 2]) break;
    }
    // number of factors with e_i >= k is s_k - s_{k-1}
    std::vector<std::size_t> exps;
    for (std::size_t k = s.size() - 1; k >= 1; --k) {
      std::size_t at_least_k = s[k] - s[k - 1];
      std::size_t at_least_k1 = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      for (std::size_t i = 0; i < at_least_k - at_least_k1; ++i) {
        std::size_t v = 1;
        for (std::size_t j = 0; j < k; ++j) v *= p;
        exps.push_back(v);
      }
    }
    std::sort(exps.rbegin(), exps.rend());
    primary.push_back(exps);
  }
  std::size_t len = 0;
  for (const auto& e : primary) len = std::max(len, e.size());
  std::vector<std::size_t> out(len, 1);
  for (const auto& e : primary)
    for (std::size_t i = 0; i < e.size(); ++i) out[len - 1 - i] *= e[i];
  return out;
}

inline GroupFingerprint fingerprint(const GeneratedGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  for (const auto& x : g.elements()) ++f.element_order_histogram[x.order()];
  f.center_order = center(g).order();
  GeneratedGroup cur = g;
  f.derived_length = 0;
  while (!cur.is_trivial()) {
    GeneratedGroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) {
      f.derived_length = -1;
      break;
    }
    cur = std::move(next);
    ++f.derived_length;
  }
  GeneratedGroup d = derived_subgroup(g);
  f.abelian_invariants_of_abelianization = abelian_invariants(quotient(g, d));
  return f;
}

/// log_p |G / Frattini(G)|, the minimal number of generators of a p-group.
inline std::size_t minimal_generator_count(const GeneratedGroup& g) {
  if (g.is_trivial()) return 0;
  auto p = detail::prime_of_power(g.order());
  if (!p) throw Error(ErrorCode::NotPGroup, "minimal generator count needs a p-group");
  std::size_t index = g.order() / frattini(g).order();
  std::size_t d = 0;
  for (; index > 1; index /= *p) ++d;
  return d;
}

/// An isomorphism G -> H as the image index (in H.elements()) of every
/// element of G, or nothing. Complete for orders up to kMaxTabulatedOrder.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const GeneratedGroup& g,
                                                                const GeneratedGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;
  detail::CayleyTable tg(g), th(h);
  const std::size_t n = g.order();

  // generating sequence of G, with prefix subgroups growing strictly
  std::vector<std::size_t> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::size_t a, std::size_t b) { return tg.order(a) > tg.order(b); });
  std::vector<std::size_t> gens;
  detail::ElementSet span = tg.closure({});
  for (std::size_t x : by_order) {
    if (span.test(x)) continue;
    gens.push_back(x);
    span = tg.closure(gens);
    if (span.count() == n) break;
  }

  std::vector<std::size_t> h_cent(n);
  for (std::size_t i = 0; i < n; ++i) h_cent[i] = th.centralizer_size(i);
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::size_t ord = tg.order(gens[k]), cent = tg.centralizer_size(gens[k]);
    for (std::size_t y = 0; y < n; ++y)
      if (th.order(y) == ord && h_cent[y] == cent) candidates[k].push_back(y);
  }

  std::vector<std::size_t> images(gens.size());
  std::vector<std::size_t> map(n);
  // Extends the map over <gens[0..level]> by breadth-first words; false on a
  // clash or a non-injective assignment.
  auto extend = [&](std::size_t level) {
    std::vector<std::size_t> img(n, SIZE_MAX);
    std::vector<bool> used(n, false);
    img[tg.identity()] = th.identity();
    used[th.identity()] = true;
    std::vector<std::size_t> queue{tg.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t x = queue[q];
      for (std::size_t k = 0; k <= level; ++k) {
        std::size_t y = tg.mul(x, gens[k]);
        std::size_t iy = th.mul(img[x], images[k]);
        if (img[y] == SIZE_MAX) {
          if (used[iy]) return false;
          img[y] = iy;
          used[iy] = true;
          queue.push_back(y);
        } else if (img[y] != iy) {
          return false;
        }
      }
    }
    map = std::move(img);
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t level) {
    if (level == gens.size()) return true;
    for (std::size_t y : candidates[level]) {
      images[level] = y;
      if (extend(level) && search(level + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) return std::vector<std::size_t>{th.identity()};
  if (!search(0)) return std::nullopt;
  return map;
}

inline bool are_isomorphic(const GeneratedGroup& g, const GeneratedGroup& h) {
  return find_isomorphism(g, h).has_value();
}

/// True iff N is normal in G, N and C meet trivially, and |N||C| = |G|.
inline bool split_extension_check(const GeneratedGroup& g, const GeneratedGroup& n,
                                  const GeneratedGroup& c) {
  detail::require_same_degree(g, n);
  detail::require_same_degree(g, c);
  if (!n.is_subgroup_of(g) || !c.is_subgroup_of(g))
    throw Error(ErrorCode::NotSubset, "N and C must be subgroups of G");
  if (!subgroup_tests(g, n).is_normal) return false;
  if (!intersection(n, c).is_trivial()) return false;
  return n.order() * c.order() == g.order();
}

/// Every subgroup whose order divides `order_divisor` (0 = all subgroups),
/// sorted by (order, element set).
///
/// Subgroups are grown from the trivial group by joining cyclic subgroups of
/// prime-power order. Each subgroup is the join of its own such cyclic
/// subgroups, and every intermediate join is one of its subgroups, so
/// restricting to orders dividing the target loses nothing.
inline std::vector<GeneratedGroup> all_subgroups(const GeneratedGroup& g,
                                                 std::size_t order_divisor = 0) {
  detail::CayleyTable t(g);
  const std::size_t n = g.order();
  auto admissible = [&](std::size_t k) { return order_divisor == 0 || order_divisor % k == 0; };

  std::vector<std::size_t> cyclic_gens;
  std::set<detail::ElementSet> cyclic_seen;
  for (std::size_t x = 0; x < n; ++x) {
    if (x == t.identity() || !detail::prime_of_power(t.order(x))) continue;
    if (!admissible(t.order(x))) continue;
    if (cyclic_seen.insert(t.closure({x})).second) cyclic_gens.push_back(x);
  }

  struct Node {
    detail::ElementSet set;
    std::vector<std::size_t> gens;
  };
  std::vector<Node> found{{t.closure({}), {}}};
  std::set<detail::ElementSet> seen{found.front().set};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t z : cyclic_gens) {
      if (found[i].set.test(z)) continue;
      std::vector<std::size_t> gens = found[i].gens;
      gens.push_back(z);
      detail::ElementSet s = t.closure(gens);
      if (!admissible(s.count())) continue;
      if (seen.insert(s).second) found.push_back({std::move(s), std::move(gens)});
    }
  }
  std::sort(found.begin(), found.end(), [](const Node& a, const Node& b) {
    std::size_t ca = a.set.count(), cb = b.set.count();
    return ca != cb ? ca < cb : a.set < b.set;
  });
  std::vector<GeneratedGroup> out;
  for (const auto& node : found) {
    std::vector<Permutation> gens;
    for (std::size_t x : node.gens) gens.push_back(g.element(x));
    out.push_back(GeneratedGroup::generate(g.degree(), gens));
  }
  return out;
}

inline std::vector<GeneratedGroup> subgroups_of_order(const GeneratedGroup& g, std::size_t k) {
  if (k == 0 || g.order() % k != 0)
    throw Error(ErrorCode::BadOrder, std::to_string(k) + " does not divide " +
                                         std::to_string(g.order()));
  std::vector<GeneratedGroup> out;
  for (auto& s : all_subgroups(g, k))
    if (s.order() == k) out.push_back(std::move(s));
  return out;
}

/// Orbit of `point` under the group.
inline std::vector<Point> orbit(const GeneratedGroup& g, Point point) {
  std::vector<bool> in(g.degree(), false);
  std::vector<Point> out{point};
  in[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : g.generators()) {
      Point q = s(out[i]);
      if (!in[q]) {
        in[q] = true;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline GeneratedGroup point_stabilizer(const GeneratedGroup& g, Point point) {
  std::vector<Permutation> fix;
  for (const auto& x : g.elements())
    if (x(point) == point) fix.push_back(x);
  return GeneratedGroup::from_elements(g.degree(), fix);
}

/// Regular on the first `domain_size` points: transitive there with trivial
/// point stabilizers. Points beyond the domain must be fixed.
inline bool acts_regularly(const GeneratedGroup& s, std::size_t domain_size) {
  if (s.order() != domain_size || domain_size > s.degree()) return false;
  for (const auto& x : s.elements())
    for (std::size_t p = domain_size; p < s.degree(); ++p)
      if (x(static_cast<Point>(p)) != p) return false;
  return orbit(s, 0).size() == domain_size;
}

inline std::vector<GeneratedGroup> sharply_transitive_subgroups(const GeneratedGroup& g,
                                                                std::size_t domain_size) {
  if (domain_size == 0 || g.order() % domain_size != 0)
    throw Error(ErrorCode::BadOrder, "domain size must divide the group order");
  std::vector<GeneratedGroup> out;
  for (auto& s : subgroups_of_order(g, domain_size))
    if (acts_regularly(s, domain_size)) out.push_back(std::move(s));
  return out;
}

// Reference models ---------------------------------------------------------

inline GeneratedGroup cyclic_group(std::size_t n) {
  if (n <= 1) return GeneratedGroup(1);
  return GeneratedGroup::generate(
      n, {Permutation::from_function(n, [n](Point x) { return (x + 1) % n; })});
}

/// Dihedral group of order 2n acting on the n-gon.
inline GeneratedGroup dihedral_group(std::size_t n) {
  auto r = Permutation::from_function(n, [n](Point x) { return (x + 1) % n; });
  auto s = Permutation::from_function(n, [n](Point x) { return (n - x) % n; });
  return GeneratedGroup::generate(n, {r, s});
}

/// Quaternion group Q8 in its right regular representation. Elements are
/// encoded as sign * unit with units 1, i, j, k in that order; index = 4*neg + unit.
inline GeneratedGroup quaternion_group() {
  // unit products: table[a][b] = (sign, unit) of e_a * e_b
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto mul = [](Point x, Point y) {
    int s = (x / 4 + y / 4 + neg[x % 4][y % 4]) % 2;
    return static_cast<Point>(4 * s + unit[x % 4][y % 4]);
  };
  auto right_by = [&](Point g) {
    return Permutation::from_function(8, [&](Point x) { return mul(x, g); });
  };
  return GeneratedGroup::generate(8, {right_by(1), right_by(2)});
}

/// A x B acting on the disjoint union of their point sets.
inline GeneratedGroup direct_product(const GeneratedGroup& a, const GeneratedGroup& b) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& x : a.generators())
    gens.push_back(Permutation::from_function(da + db, [&](Point p) {
      return p < da ? x(p) : p;
    }));
  for (const auto& y : b.generators())
    gens.push_back(Permutation::from_function(da + db, [&](Point p) {
      return p < da ? p : static_cast<Point>(da + y(static_cast<Point>(p - da)));
    }));
  return GeneratedGroup::generate(da + db, gens);
}

inline GeneratedGroup elementary_abelian_2group(std::size_t rank) {
  GeneratedGroup g = cyclic_group(2);
  for (std::size_t i = 1; i < rank; ++i) g = direct_product(g, cyclic_group(2));
  return g;
}

/// External semidirect product K x_phi N in its right regular representation
/// on the |K||N| pairs. `act(k, m)` must return m^phi(k), an element of N,
/// and phi must be a right action by automorphisms. The product is
/// (k1, m1)(k2, m2) = (k1 k2, m1^phi(k2) m2).
inline GeneratedGroup semidirect_product(
    const GeneratedGroup& k, const GeneratedGroup& n,
    const std::function<Permutation(const Permutation&, const Permutation&)>& act) {
  const std::size_t nk = k.order(), nn = n.order();
  std::vector<std::vector<std::size_t>> phi(nk, std::vector<std::size_t>(nn));
  for (std::size_t i = 0; i < nk; ++i)
    for (std::size_t j = 0; j < nn; ++j) {
      auto idx = n.index_of(act(k.element(i), n.element(j)));
      if (!idx) throw Error(ErrorCode::NotSubset, "action leaves the normal factor");
      phi[i][j] = *idx;
    }
  auto right_by = [&](std::size_t k2, std::size_t m2) {
    return Permutation::from_function(nk * nn, [&](Point p) {
      std::size_t k1 = p / nn, m1 = p % nn;
      std::size_t kk = *k.index_of(k.element(k1) * k.element(k2));
      std::size_t mm = *n.index_of(n.element(phi[k2][m1]) * n.element(m2));
      return kk * nn + mm;
    });
  };
  const std::size_t k_id = *k.index_of(k.identity()), n_id = *n.index_of(n.identity());
  std::vector<Permutation> gens;
  for (const auto& x : k.generators()) gens.push_back(right_by(*k.index_of(x), n_id));
  for (const auto& y : n.generators()) gens.push_back(right_by(k_id, *n.index_of(y)));
  return GeneratedGroup::generate(nk * nn, gens);
}

}  // namespace bolnet

#endif  // BOLNET_GROUP_ALGORITHMS_HPP
