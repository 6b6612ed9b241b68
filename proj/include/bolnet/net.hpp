#ifndef BOLNET_NET_HPP
#define BOLNET_NET_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "group_algorithms.hpp"
#include "loop.hpp"
#include "loop_maps.hpp"

namespace bolnet {

/// Point (x, y) of the 3-net over L x L; the origin is (0, 0).
struct NetPoint {
  Element x = 0;
  Element y = 0;
  friend bool operator==(const NetPoint&, const NetPoint&) = default;
  friend auto operator<=>(const NetPoint&, const NetPoint&) = default;
};

/// Points are numbered p = x*n + y in every point permutation.
inline Point point_index(std::size_t n, NetPoint p) { return static_cast<Point>(p.x * n + p.y); }
inline NetPoint point_at(std::size_t n, Point p) {
  return {static_cast<Element>(p / n), static_cast<Element>(p % n)};
}

enum class LineClass { Vertical = 0, Horizontal = 1, Transversal = 2 };

inline const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::Vertical: return "vertical";
    case LineClass::Horizontal: return "horizontal";
    case LineClass::Transversal: return "transversal";
  }
  return "?";
}

/// vertical c = {(c, y)}, horizontal c = {(x, c)}, transversal c = {(x, y) : xy = c}.
struct LineRef {
  LineClass cls = LineClass::Vertical;
  Element c = 0;
  friend bool operator==(const LineRef&, const LineRef&) = default;
};

inline std::vector<Point> line_points(const LoopTable& l, LineRef line) {
  const std::size_t n = l.order();
  std::vector<Point> out;
  for (Element t = 0; t < n; ++t) {
    switch (line.cls) {
      case LineClass::Vertical: out.push_back(point_index(n, {line.c, t})); break;
      case LineClass::Horizontal: out.push_back(point_index(n, {t, line.c})); break;
      case LineClass::Transversal: out.push_back(point_index(n, {t, l.ldiv(t, line.c)})); break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The line of class `cls` through point p.
inline LineRef line_through(const LoopTable& l, LineClass cls, NetPoint p) {
  switch (cls) {
    case LineClass::Vertical: return {cls, p.x};
    case LineClass::Horizontal: return {cls, p.y};
    case LineClass::Transversal: return {cls, l.mul(p.x, p.y)};
  }
  return {};
}

/// Direction preserving collineation (x, y) -> (x^alpha, y^beta).
struct DirCollineation {
  Permutation alpha;
  Permutation beta;

  Permutation point_map() const {
    const std::size_t n = alpha.degree();
    return Permutation::from_function(n * n, [&](Point p) {
      return point_index(n, {alpha(static_cast<Point>(p / n)), beta(static_cast<Point>(p % n))});
    });
  }

  friend bool operator==(const DirCollineation&, const DirCollineation&) = default;
  friend auto operator<=>(const DirCollineation&, const DirCollineation&) = default;
};

/// Reads (alpha, beta) back from a direction preserving point permutation.
inline DirCollineation as_dir_collineation(std::size_t n, const Permutation& point_map) {
  auto alpha = Permutation::from_function(
      n, [&](Point x) { return point_map(point_index(n, {x, 0})) / n; });
  auto beta = Permutation::from_function(
      n, [&](Point y) { return point_map(point_index(n, {0, y})) % n; });
  return {std::move(alpha), std::move(beta)};
}

/// x^alpha y^beta = 1^alpha (xy)^beta for all x, y.
inline bool is_dir_collineation(const LoopTable& l, const Permutation& alpha,
                                const Permutation& beta) {
  const std::size_t n = l.order();
  const Element a = alpha(0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (l.mul(alpha(x), beta(y)) != l.mul(a, beta(l.mul(x, y)))) return false;
  return true;
}

/// Setting y = 1 forces x^alpha = (a x^beta) / 1^beta; the pair is returned
/// only if that alpha satisfies the collineation identity everywhere.
inline std::optional<DirCollineation> make_dir_collineation(const LoopTable& l,
                                                            const Permutation& beta, Element a) {
  const std::size_t n = l.order();
  if (beta.degree() != n) throw Error(ErrorCode::DegreeMismatch, "beta must act on the loop");
  std::vector<Point> alpha(n);
  std::vector<bool> used(n, false);
  const Element b1 = beta(0);
  for (Element x = 0; x < n; ++x) {
    alpha[x] = l.rdiv(l.mul(a, beta(x)), b1);
    if (used[alpha[x]]) return std::nullopt;
    used[alpha[x]] = true;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (l.mul(alpha[x], beta(y)) != l.mul(a, beta(l.mul(x, y)))) return std::nullopt;
  return DirCollineation{Permutation(std::move(alpha)), beta};
}

/// Largest loop order accepted by the brute-force collineation scan.
inline constexpr std::size_t kMaxEnumerationOrder = 12;

struct GammaEnumeration {
  GeneratedGroup group;                 // on the n^2 points
  std::vector<DirCollineation> pairs;   // sorted by point map
};

/// Scans every (beta, a) in Sym(L) x L. The beta space is split by the value
/// beta(0) across `jobs` workers; results are merged in sorted order, so the
/// output does not depend on the worker count.
inline GammaEnumeration enumerate_gamma(const LoopTable& l, unsigned jobs = 1) {
  const std::size_t n = l.order();
  if (n > kMaxEnumerationOrder)
    throw Error(ErrorCode::OrderTooLarge, "collineation scan supports loops up to order " +
                                              std::to_string(kMaxEnumerationOrder));
  std::vector<std::vector<DirCollineation>> per_first(n);
  auto scan_first = [&](std::size_t first) {
    std::vector<Point> rest;
    for (std::size_t v = 0; v < n; ++v)
      if (v != first) rest.push_back(static_cast<Point>(v));
    do {
      std::vector<Point> images{static_cast<Point>(first)};
      images.insert(images.end(), rest.begin(), rest.end());
      Permutation beta(std::move(images));
      for (Element a = 0; a < n; ++a)
        if (auto dc = make_dir_collineation(l, beta, a)) per_first[first].push_back(std::move(*dc));
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (std::size_t f = 0; f < n; ++f) scan_first(f);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t f = w; f < n; f += workers) scan_first(f);
      });
    for (auto& t : pool) t.join();
  }
  GammaEnumeration out;
  std::vector<Permutation> points;
  for (auto& chunk : per_first)
    for (auto& dc : chunk) out.pairs.push_back(std::move(dc));
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const DirCollineation& a, const DirCollineation& b) {
              return a.point_map() < b.point_map();
            });
  for (const auto& dc : out.pairs) points.push_back(dc.point_map());
  out.group = GeneratedGroup::from_elements(n * n, points);
  return out;
}

/// Generators (rho_a lambda_a, lambda_a^-1) of N, as collineations.
inline std::vector<DirCollineation> N_generators(const LoopTable& l) {
  std::vector<DirCollineation> out;
  for (Element a = 0; a < l.order(); ++a) {
    Permutation lam = left_translation(l, a);
    DirCollineation dc{right_translation(l, a) * lam, lam.inverse()};
    if (!is_dir_collineation(l, dc.alpha, dc.beta))
      throw Error(ErrorCode::NotBol, "(rho_a lambda_a, lambda_a^-1) is not a collineation for a = " +
                                         std::to_string(a));
    out.push_back(std::move(dc));
  }
  return out;
}

/// N, the group generated by the even products of Bol reflections.
inline GeneratedGroup N_group(const LoopTable& l) {
  std::vector<Permutation> gens;
  for (const auto& dc : N_generators(l)) gens.push_back(dc.point_map());
  return GeneratedGroup::generate(l.order() * l.order(), gens);
}

/// Projection onto the second permutation.
inline Permutation phi(const DirCollineation& dc) { return dc.beta; }

/// Image of a group of direction preserving collineations under phi.
inline GeneratedGroup phi_image(const LoopTable& l, const GeneratedGroup& g) {
  std::vector<Permutation> betas;
  for (const auto& x : g.generators()) betas.push_back(as_dir_collineation(l.order(), x).beta);
  return GeneratedGroup::generate(l.order(), betas);
}

inline GeneratedGroup phi_kernel(const LoopTable& l) {
  GeneratedGroup n = N_group(l);
  std::vector<Permutation> kernel;
  for (const auto& x : n.elements())
    if (as_dir_collineation(l.order(), x).beta.is_identity()) kernel.push_back(x);
  return GeneratedGroup::from_elements(n.degree(), kernel);
}

/// A point bijection with the induced permutation of the three parallel classes.
struct FullCollineation {
  Permutation point_map;
  std::array<LineClass, 3> direction_action{LineClass::Vertical, LineClass::Horizontal,
                                            LineClass::Transversal};
};

/// Class of the image of every line, or nothing if some line is not mapped
/// onto a line or a class is split.
inline std::optional<FullCollineation> as_full_collineation(const LoopTable& l,
                                                            const Permutation& point_map) {
  const std::size_t n = l.order();
  if (point_map.degree() != n * n) return std::nullopt;
  FullCollineation out{point_map, {}};
  // With one point every line coincides; report the identity action.
  if (n == 1) return FullCollineation{point_map};
  for (int cls = 0; cls < 3; ++cls) {
    std::optional<LineClass> target;
    for (Element c = 0; c < n; ++c) {
      auto pts = line_points(l, {static_cast<LineClass>(cls), c});
      for (auto& p : pts) p = point_map(p);
      std::sort(pts.begin(), pts.end());
      NetPoint q0 = point_at(n, pts[0]), q1 = point_at(n, pts[1]);
      std::optional<LineClass> image_cls;
      for (int k = 0; k < 3 && !image_cls; ++k) {
        auto kc = static_cast<LineClass>(k);
        LineRef cand = line_through(l, kc, q0);
        if (line_through(l, kc, q1) == cand && line_points(l, cand) == pts) image_cls = kc;
      }
      if (!image_cls || (target && *target != *image_cls)) return std::nullopt;
      target = image_cls;
    }
    out.direction_action[cls] = *target;
  }
  return out;
}

/// sigma_m(x, y) = ((m y) / (m \ xy), m \ xy): the reflection in the vertical
/// line x = m that swaps the horizontal and transversal classes. Raises NotBol
/// when the map is not an involutory collineation.
inline FullCollineation bol_reflection(const LoopTable& l, Element m) {
  const std::size_t n = l.order();
  auto sigma = Permutation::from_function(n * n, [&](Point p) {
    NetPoint q = point_at(n, p);
    Element y2 = l.ldiv(m, l.mul(q.x, q.y));
    return point_index(n, {l.rdiv(l.mul(m, q.y), y2), y2});
  });
  if (!(sigma * sigma).is_identity())
    throw Error(ErrorCode::NotBol, "reflection at axis " + std::to_string(m) + " is not an involution");
  auto full = as_full_collineation(l, sigma);
  if (!full)
    throw Error(ErrorCode::NotBol, "reflection at axis " + std::to_string(m) + " does not map lines to lines");
  return *full;
}

inline std::vector<Point> orbit_of_origin(const GeneratedGroup& gamma) { return orbit(gamma, 0); }

inline std::vector<Point> orbit_of_origin(const LoopTable& l) {
  return orbit_of_origin(enumerate_gamma(l).group);
}

enum class StabilizerTarget { Origin, HorizontalLine, VerticalLine };

inline GeneratedGroup setwise_stabilizer(const GeneratedGroup& g, std::vector<Point> set) {
  std::sort(set.begin(), set.end());
  std::vector<Permutation> keep;
  for (const auto& x : g.elements()) {
    std::vector<Point> image;
    for (Point p : set) image.push_back(x(p));
    std::sort(image.begin(), image.end());
    if (image == set) keep.push_back(x);
  }
  return GeneratedGroup::from_elements(g.degree(), keep);
}

/// Gamma_0, Gamma_H or Gamma_V inside a group of collineations of L's net.
inline GeneratedGroup stabilizer(const LoopTable& l, const GeneratedGroup& gamma,
                                 StabilizerTarget what) {
  switch (what) {
    case StabilizerTarget::Origin: return point_stabilizer(gamma, 0);
    case StabilizerTarget::HorizontalLine:
      return setwise_stabilizer(gamma, line_points(l, {LineClass::Horizontal, 0}));
    case StabilizerTarget::VerticalLine:
      return setwise_stabilizer(gamma, line_points(l, {LineClass::Vertical, 0}));
  }
  return gamma;
}

inline GeneratedGroup stabilizer(const LoopTable& l, StabilizerTarget what) {
  return stabilizer(l, enumerate_gamma(l).group, what);
}

/// Coordinate loop of the net with origin p = (a, b).
inline LoopTable recoordinatize(const LoopTable& l, NetPoint p) {
  return principal_isotope(l, p.x, p.y);
}

/// <Gamma, sigma_0>; Raises NotBol if the loop is not left Bol.
inline GeneratedGroup full_group(const LoopTable& l, const GeneratedGroup& gamma) {
  std::vector<Permutation> gens(gamma.generators().begin(), gamma.generators().end());
  gens.push_back(bol_reflection(l, 0).point_map);
  return GeneratedGroup::generate(gamma.degree(), gens);
}

inline GeneratedGroup full_group(const LoopTable& l) {
  return full_group(l, enumerate_gamma(l).group);
}

/// Subgroup of direction preserving collineations {(alpha, alpha) : alpha in Aut(L)}.
inline GeneratedGroup diagonal_automorphisms(const LoopTable& l) {
  const GeneratedGroup aut = automorphism_group(l);
  std::vector<Permutation> gens;
  for (const auto& a : aut.generators())
    gens.push_back(DirCollineation{a, a}.point_map());
  return GeneratedGroup::generate(l.order() * l.order(), gens);
}

}  // namespace bolnet

#endif  // BOLNET_NET_HPP
