#ifndef BOLNET_LOOP_MAPS_HPP
#define BOLNET_LOOP_MAPS_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "group.hpp"
#include "group_algorithms.hpp"
#include "loop.hpp"

namespace bolnet {

enum class PseudoSide { Left, Right };

/// A pseudo-automorphism together with every companion it admits.
///
/// Right, companion c: x^g (y^g c) = (xy)^g c.
/// Left, companion c:  (c x^g) y^g = c (xy)^g.
struct PseudoAutomorphism {
  Permutation gamma;
  PseudoSide side = PseudoSide::Right;
  std::vector<Element> companions;
};

inline bool is_pseudo_automorphism(const LoopTable& l, const Permutation& g, PseudoSide side,
                                   Element c) {
  const std::size_t n = l.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element gx = g(x), gy = g(y), gxy = g(l.mul(x, y));
      if (side == PseudoSide::Right) {
        if (l.mul(gx, l.mul(gy, c)) != l.mul(gxy, c)) return false;
      } else {
        if (l.mul(l.mul(c, gx), gy) != l.mul(c, gxy)) return false;
      }
    }
  return true;
}

inline bool is_automorphism(const LoopTable& l, const Permutation& g) {
  if (g.degree() != l.order()) return false;
  for (Element x = 0; x < l.order(); ++x)
    for (Element y = 0; y < l.order(); ++y)
      if (g(l.mul(x, y)) != l.mul(g(x), g(y))) return false;
  return true;
}

/// The automorphism with the given images of some elements, if one exists.
/// Images are propagated through products; any clash, or a map that does not
/// reach every element, gives nothing.
inline std::optional<Permutation> extend_to_automorphism(
    const LoopTable& l, const std::vector<std::pair<Element, Element>>& images) {
  const std::size_t n = l.order();
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> map(n, kUnset);
  std::vector<Element> known;
  auto assign = [&](Element x, Element y) {
    if (map[x] == kUnset) {
      map[x] = y;
      known.push_back(x);
      return true;
    }
    return map[x] == y;
  };
  if (!assign(0, 0)) return std::nullopt;
  for (auto [x, y] : images)
    if (x >= n || y >= n || !assign(x, y)) return std::nullopt;
  for (std::size_t done = 0; done < known.size(); ++done) {
    for (std::size_t k = 0; k <= done; ++k) {
      Element a = known[done], b = known[k];
      if (!assign(l.mul(a, b), l.mul(map[a], map[b]))) return std::nullopt;
      if (!assign(l.mul(b, a), l.mul(map[b], map[a]))) return std::nullopt;
    }
  }
  if (known.size() != n) return std::nullopt;
  std::vector<bool> hit(n, false);
  for (Element y : map) {
    if (hit[y]) return std::nullopt;
    hit[y] = true;
  }
  Permutation p(std::move(map));
  if (!is_automorphism(l, p)) return std::nullopt;
  return p;
}

/// Shortest word in `gens` (indices, applied left to right) equal to `target`.
inline std::optional<std::vector<std::size_t>> shortest_word(const std::vector<Permutation>& gens,
                                                             const Permutation& target) {
  if (gens.empty()) return std::nullopt;
  std::map<Permutation, std::vector<std::size_t>> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(target.degree());
  seen[id] = {};
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    if (cur == target) return seen[cur];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Permutation next = cur * gens[i];
      if (seen.count(next)) continue;
      auto word = seen[cur];
      word.push_back(i);
      seen.emplace(next, std::move(word));
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

/// Every automorphism, found by backtracking over images of a generating set.
inline GeneratedGroup automorphism_group(const LoopTable& l) {
  auto profile = detail::element_profile(l);
  std::vector<Permutation> all;
  detail::enumerate_twisted_morphisms(
      l, [&](Element u, Element v) { return l.mul(u, v); }, profile, profile,
      [&](Permutation p) {
        all.push_back(std::move(p));
        return true;
      });
  return GeneratedGroup::from_elements(l.order(), all);
}

/// All pseudo-automorphisms of one side with complete companion sets,
/// sorted by permutation. A pseudo-automorphism with companion c is fixed by
/// its images on a generating set: (xy)^g = (x^g (y^g c)) / c on the right
/// and c \ ((c x^g) y^g) on the left.
inline std::vector<PseudoAutomorphism> pseudo_automorphisms(const LoopTable& l, PseudoSide side) {
  const std::size_t n = l.order();
  const std::vector<std::size_t> flat(n, 0);
  std::map<Permutation, std::vector<Element>> found;
  for (Element c = 0; c < n; ++c) {
    auto visit = [&](Permutation p) {
      found[std::move(p)].push_back(c);
      return true;
    };
    if (side == PseudoSide::Right)
      detail::enumerate_twisted_morphisms(
          l, [&](Element u, Element v) { return l.rdiv(l.mul(u, l.mul(v, c)), c); }, flat, flat,
          visit);
    else
      detail::enumerate_twisted_morphisms(
          l, [&](Element u, Element v) { return l.ldiv(c, l.mul(l.mul(c, u), v)); }, flat, flat,
          visit);
  }
  std::vector<PseudoAutomorphism> out;
  for (auto& [gamma, cs] : found) out.push_back({gamma, side, cs});
  return out;
}

/// Union of all companions occurring on the given side.
inline std::vector<Element> companion_set(const LoopTable& l, PseudoSide side) {
  std::set<Element> all;
  for (const auto& pa : pseudo_automorphisms(l, side))
    all.insert(pa.companions.begin(), pa.companions.end());
  return {all.begin(), all.end()};
}

/// True iff for every x, lambda_x rho_x^-1 is a right pseudo-automorphism
/// with companion x.
inline bool lcc_pseudo_check(const LoopTable& l) {
  for (Element x = 0; x < l.order(); ++x) {
    Permutation g = left_translation(l, x) * right_translation(l, x).inverse();
    if (!is_pseudo_automorphism(l, g, PseudoSide::Right, x)) return false;
  }
  return true;
}

/// G(L), generated by the left translations.
inline GeneratedGroup translation_group(const LoopTable& l) {
  return GeneratedGroup::generate(l.order(), section(l));
}

/// Elements of G(L) fixing the unit.
inline GeneratedGroup unit_stabilizer_G1(const LoopTable& l) {
  return point_stabilizer(translation_group(l), 0);
}

struct TripleTest {
  bool fixes_unit = false;
  bool is_identity = false;
};

/// Evaluates lambda_a lambda_b lambda_c (lambda_a applied first); the unit
/// goes to c(ba).
inline TripleTest triple_translation_test(const LoopTable& l, Element a, Element b, Element c) {
  Permutation t = left_translation(l, a) * left_translation(l, b) * left_translation(l, c);
  return {t(0) == 0, t.is_identity()};
}

/// [Aut(L), G(L)]
inline GeneratedGroup aut_g_commutator(const LoopTable& l) {
  return commutator_subgroup(automorphism_group(l), translation_group(l));
}

/// Left regular permutation group of a subloop that is a group (for example
/// a nucleus), used as an isomorphism target.
inline GeneratedGroup subgroup_as_permutation_group(const LoopTable& l,
                                                    const std::vector<Element>& subset) {
  return translation_group(induced_subloop(l, subset));
}

}  // namespace bolnet

#endif  // BOLNET_LOOP_MAPS_HPP
