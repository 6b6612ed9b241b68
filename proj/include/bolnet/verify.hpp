#ifndef BOLNET_VERIFY_HPP
#define BOLNET_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "group_algorithms.hpp"
#include "loop.hpp"
#include "loop_maps.hpp"
#include "net.hpp"
#include "net_report.hpp"
#include "search.hpp"

namespace bolnet {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "bolnet-report/1";

enum class ClaimStatus { Pass, Fail, Computed };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Computed: return "computed";
  }
  return "?";
}

struct Claim {
  std::string id;
  std::string statement;
  std::string anchor;
  ClaimStatus status = ClaimStatus::Computed;
  std::string value;
};

struct Report {
  std::string tool_version = kToolVersion;
  std::string input;
  std::vector<Claim> claims;

  /// Appends a claim; ids must be unique within a report.
  void add(Claim c) {
    if (find(c.id)) throw std::logic_error("duplicate claim id " + c.id);
    claims.push_back(std::move(c));
  }

  void check(std::string id, std::string anchor, std::string statement, bool ok,
             std::string value = {}) {
    add({std::move(id), std::move(statement), std::move(anchor),
         ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(value)});
  }

  void computed(std::string id, std::string anchor, std::string statement, std::string value) {
    add({std::move(id), std::move(statement), std::move(anchor), ClaimStatus::Computed,
         std::move(value)});
  }

  const Claim* find(const std::string& id) const {
    for (const auto& c : claims)
      if (c.id == id) return &c;
    return nullptr;
  }

  bool passed() const {
    return std::none_of(claims.begin(), claims.end(),
                        [](const Claim& c) { return c.status == ClaimStatus::Fail; });
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : claims)
      if (c.status == ClaimStatus::Fail) out.push_back(c.id);
    return out;
  }
};

/// Replaces the builtin tables the suite runs on; used to check that a wrong
/// table is caught.
struct VerifyHooks {
  std::optional<LoopTable> b1;
  std::optional<LoopTable> b2;
};

namespace detail {

inline std::string element_set(const LoopTable& l, const std::vector<Element>& xs) {
  std::vector<std::string> names;
  for (Element x : xs) names.push_back(l.name(x));
  return "{" + join_values(names) + "}";
}

inline std::string word_string(const std::vector<std::size_t>& word, const std::vector<std::string>& names) {
  if (word.empty()) return "id";
  std::vector<std::string> parts;
  for (std::size_t i : word) parts.push_back(names[i]);
  return join_values(parts, " ");
}

/// f^i g^j code as in the builtin tables.
constexpr Element fg(int i, int j) { return fg_code(i, j); }

}  // namespace detail

/// Claims about the loop itself (tables, nuclei, maps, G(L), H-bar).
inline void verify_loop_claims(Report& r, const std::string& p, const LoopTable& l, NamedLoop which) {
  using detail::fg;
  const bool is_b1 = which == NamedLoop::B1;
  const std::size_t n = l.order();

  r.check(p + ".loop.valid", "tables", "order 8 Latin square with unit 0", n == 8, std::to_string(n));
  r.check(p + ".loop.left-bol", "tables", "x(y(xz)) = (x(yx))z", check_property(l, LoopProperty::LeftBol).holds);
  r.check(p + ".loop.nonassociative", "tables", "the loop is not a group",
          !check_property(l, LoopProperty::Associative).holds);
  r.check(p + ".loop.lip", "tables", "left inverse property", check_property(l, LoopProperty::Lip).holds);

  const auto nl = nucleus(l, NucleusSide::Left);
  const auto nm = nucleus(l, NucleusSide::Middle);
  const auto nr = nucleus(l, NucleusSide::Right);
  r.check(p + ".nuclei.left", "nuclei", "N_lambda = {e, f^2}",
          nl == std::vector<Element>{fg(0, 0), fg(2, 0)}, detail::element_set(l, nl));
  r.check(p + ".nuclei.middle", "nuclei", "N_mu = N_lambda", nm == nl, detail::element_set(l, nm));
  if (is_b1) {
    r.check(p + ".nuclei.right", "nuclei", "N_rho is cyclic of order 4",
            nr.size() == 4 && are_isomorphic(subgroup_as_permutation_group(l, nr), cyclic_group(4)),
            detail::element_set(l, nr));
  } else {
    std::vector<Element> expect{fg(0, 0), fg(2, 0), fg(0, 1), fg(2, 1)};
    std::sort(expect.begin(), expect.end());
    r.check(p + ".nuclei.right", "nuclei", "N_rho = {e, g, f^2, f^2 g}, a Klein four-group",
            nr == expect && are_isomorphic(subgroup_as_permutation_group(l, nr),
                                           elementary_abelian_2group(2)),
            detail::element_set(l, nr));
  }
  r.check(p + ".nuclei.indices", "nuclei", "[L : N_rho] = 2 and [N_rho : N_lambda] = 2",
          nr.size() * 2 == n && nl.size() * 2 == nr.size());

  GeneratedGroup aut = automorphism_group(l);
  const Element f = fg(1, 0), g = fg(0, 1);
  std::vector<Permutation> named_maps;
  std::vector<std::string> map_names;
  if (is_b1) {
    auto phi1 = extend_to_automorphism(l, {{f, fg(1, 0)}, {g, fg(1, 1)}});
    auto phi2 = extend_to_automorphism(l, {{f, fg(3, 0)}, {g, fg(0, 1)}});
    bool ok = phi1 && phi2 && phi1->order() == 4 && phi2->order() == 2 && (*phi1 * *phi2).order() == 2;
    r.check(p + ".maps.generators", "automorphisms",
            "phi_1: f -> f, g -> fg and phi_2: f -> f^-1, g -> g extend to automorphisms of orders 4 and 2; "
            "phi_1 phi_2 has order 2",
            ok, ok ? phi1->cycle_string() + ", " + phi2->cycle_string() : "no extension");
    if (ok) named_maps = {*phi1, *phi2}, map_names = {"phi1", "phi2"};
  } else {
    auto psi1 = extend_to_automorphism(l, {{f, fg(1, 1)}, {g, fg(0, 1)}});
    auto psi2 = extend_to_automorphism(l, {{f, fg(1, 0)}, {g, fg(2, 1)}});
    bool ok = psi1 && psi2 && psi1->order() == 2 && psi2->order() == 2 &&
              (*psi1 * *psi2).order() == 4 && *psi1 * *psi2 != *psi2 * *psi1;
    r.check(p + ".maps.generators", "automorphisms",
            "psi_1: f -> fg, g -> g and psi_2: f -> f, g -> f^2 g extend to automorphisms of order 2; "
            "psi_1 psi_2 has order 4 and differs from psi_2 psi_1",
            ok, ok ? psi1->cycle_string() + ", " + psi2->cycle_string() : "no extension");
    if (ok) named_maps = {*psi1, *psi2}, map_names = {"psi1", "psi2"};
  }

  r.check(p + ".aut.dihedral", "automorphisms", "Aut(L) has order 8 and is dihedral",
          aut.order() == 8 && are_isomorphic(aut, dihedral_group(4)), std::to_string(aut.order()));
  if (!named_maps.empty())
    r.check(p + ".aut.generated", "automorphisms", "the two named maps generate Aut(L)",
            GeneratedGroup::generate(n, named_maps) == aut);
  {
    auto left = pseudo_automorphisms(l, PseudoSide::Left);
    std::vector<Permutation> perms;
    for (const auto& pa : left) perms.push_back(pa.gamma);
    bool same = perms == std::vector<Permutation>(aut.elements().begin(), aut.elements().end());
    r.check(p + ".aut.left-pseudo", "pseudo-automorphisms",
            "every left pseudo-automorphism is an automorphism", same, std::to_string(perms.size()));
    auto cl = companion_set(l, PseudoSide::Left);
    r.check(p + ".aut.left-companions", "pseudo-automorphisms", "C_lambda = N_lambda", cl == nl,
            detail::element_set(l, cl));
    r.computed(p + ".aut.right-companions", "pseudo-automorphisms", "right companions C_rho",
               detail::element_set(l, companion_set(l, PseudoSide::Right)));
  }

  {
    auto j = lip_inverse_map(l);
    bool right_pseudo = false;
    for (Element c = 0; j && c < n && !right_pseudo; ++c)
      right_pseudo = is_pseudo_automorphism(l, *j, PseudoSide::Right, c);
    if (is_b1) {
      r.check(p + ".J", "inverse map", "J is a right pseudo-automorphism and not an automorphism",
              j && right_pseudo && !is_automorphism(l, *j), j ? j->cycle_string() : "no LIP");
    } else {
      r.check(p + ".J", "inverse map", "J is an automorphism", j && is_automorphism(l, *j),
              j ? j->cycle_string() : "no LIP");
      if (j && !named_maps.empty()) {
        auto word = shortest_word(named_maps, *j);
        r.computed(p + ".J-word", "inverse map", "J as a shortest word in psi_1, psi_2 (applied left to right)",
                   word ? detail::word_string(*word, map_names) : "not in <psi1, psi2>");
      }
    }
  }

  GeneratedGroup G = translation_group(l);
  {
    GeneratedGroup d = derived_subgroup(G);
    bool squares = true;
    for (const auto& x : G.elements()) squares = squares && d.contains(x * x);
    r.check(p + ".G.order", "translation group", "G(L) is non-abelian of order 16",
            G.order() == 16 && !G.is_abelian(), std::to_string(G.order()));
    r.check(p + ".G.derived", "translation group",
            "G(L)' has order 2, is generated by lambda_{f^2} and contains every square",
            d.order() == 2 && d.contains(left_translation(l, fg(2, 0))) && squares,
            std::to_string(d.order()));
  }

  {
    std::set<Element> nls(nl.begin(), nl.end());
    bool equiv = true, fixes = true;
    std::size_t triples = 0;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        Element c = l.rdiv(0, l.mul(b, a));
        ++triples;
        auto t = triple_translation_test(l, a, b, c);
        bool meets = nls.count(a) || nls.count(b) || nls.count(c);
        equiv = equiv && t.fixes_unit && (t.is_identity == meets);
        Permutation m = left_translation(l, a) * left_translation(l, b) * left_translation(l, c);
        for (Element u : nr) fixes = fixes && m(u) == u;
      }
    r.check(p + ".triples", "translation group",
            "for c(ba) = 1: lambda_a lambda_b lambda_c = id iff one of a, b, c is in N_lambda", equiv,
            std::to_string(triples) + " triples");
    r.check(p + ".triples.right-nucleus", "translation group",
            "each such lambda_a lambda_b lambda_c fixes N_rho pointwise", fixes);
  }

  r.check(p + ".aut-G-commutator", "translation group", "[Aut(L), G(L)] is isomorphic to N_rho",
          are_isomorphic(aut_g_commutator(l), subgroup_as_permutation_group(l, nr)),
          std::to_string(aut_g_commutator(l).order()));

  {
    GeneratedGroup hbar = join(G, aut);
    GeneratedGroup hp = derived_subgroup(hbar);
    auto inv = hp.is_abelian() ? abelian_invariants(hp) : std::vector<std::size_t>{};
    auto expect = is_b1 ? std::vector<std::size_t>{2, 4} : std::vector<std::size_t>{2, 2, 2};
    r.computed(p + ".Hbar.order", "H-bar", "|Aut(L) G(L)|", std::to_string(hbar.order()));
    r.check(p + ".Hbar.derived", "H-bar",
            is_b1 ? "H-bar' = C2 x C4" : "H-bar' = C2 x C2 x C2", inv == expect, detail::bracketed(inv));
    r.check(p + ".Hbar.frattini", "H-bar", "Frattini(H-bar) = H-bar'", frattini(hbar) == hp);
  }
}

/// Bol reflections and recoordinatization over every axis and origin.
inline void verify_reflection_claims(Report& r, const std::string& p, const LoopTable& l,
                                     const GeneratedGroup& gamma) {
  const std::size_t n = l.order();
  std::vector<Permutation> sigmas;
  bool each = true;
  for (Element m = 0; m < n; ++m) {
    FullCollineation s;
    try {
      s = bol_reflection(l, m);
    } catch (const Error&) {
      each = false;
      continue;
    }
    for (Element y = 0; y < n; ++y)
      each = each && s.point_map(point_index(n, {m, y})) == point_index(n, {m, y});
    each = each && (s.point_map * s.point_map).is_identity() &&
           s.direction_action == std::array<LineClass, 3>{LineClass::Vertical, LineClass::Transversal,
                                                          LineClass::Horizontal};
    sigmas.push_back(s.point_map);
  }
  r.check(p + ".reflections.axes", "Bol reflections",
          "each sigma_m is an involutory collineation fixing x = m pointwise and swapping the horizontal "
          "and transversal classes",
          each && sigmas.size() == n, std::to_string(sigmas.size()) + " axes");

  bool conj = sigmas.size() == n;
  if (conj) {
    GeneratedGroup full = full_group(l, gamma);
    for (const auto& x : full.elements())
      for (Element m = 0; m < n; ++m) {
        Element image = static_cast<Element>(x(point_index(n, {m, 0})) / n);
        conj = conj && conjugate(sigmas[m], x) == sigmas[image];
      }
  }
  r.check(p + ".reflections.conjugation", "Bol reflections",
          "conjugating sigma_m by any collineation gives the reflection at the image axis", conj);

  auto P = orbit_of_origin(gamma);
  std::set<Point> in_p(P.begin(), P.end());
  bool iff = true;
  std::size_t iso = 0;
  for (Point q = 0; q < n * n; ++q) {
    LoopTable c = recoordinatize(l, point_at(n, q));
    bool same = is_isomorphic(c, l).has_value();
    iso += same;
    iff = iff && same == (in_p.count(q) > 0) && check_property(c, LoopProperty::LeftBol).holds;
  }
  r.check(p + ".recoordinatize", "coordinate loops",
          "the coordinate loop at origin q is isomorphic to L iff q lies in the orbit P", iff,
          std::to_string(iso) + " of " + std::to_string(n * n) + " origins");
}

/// Net claims for a builtin: the structure report plus the fixed orders.
inline void verify_net_claims(Report& r, const std::string& p, const LoopTable& l, bool is_b1) {
  NetGroupReport nr = structure_report(l);
  for (const auto& c : nr.checks) r.check(p + "." + c.id, "collineations", c.statement, c.passed, c.value);
  r.check(p + ".net.N-order", "collineations", "|N| = 16", nr.N_order == 16, std::to_string(nr.N_order));
  r.check(p + ".net.orders", "collineations", "|Gamma| = 128 and the full collineation group has order 256",
          nr.gamma_order == 128 && nr.full_order == 256,
          std::to_string(nr.gamma_order) + ", " + std::to_string(nr.full_order));
  r.check(p + ".net.identified", "collineations", std::string("structure report recognises the loop as ") +
                                                      (is_b1 ? "B1" : "B2"),
          nr.identified == (is_b1 ? NamedLoop::B1 : NamedLoop::B2), to_string(nr.identified));
  verify_reflection_claims(r, p, l, enumerate_gamma(l).group);
}

/// Exhaustive search claims: orders up to 7 and the order-8 classification.
inline void verify_search_claims(Report& r, unsigned jobs = 1) {
  std::string counts;
  bool none = true;
  for (std::size_t k = 1; k <= 7; ++k) {
    std::size_t found = enumerate_bol(k, true, jobs).size();
    none = none && found == 0;
    counts += (k > 1 ? "," : "") + std::to_string(found);
  }
  r.check("search.below-8", "smallest Bol loops", "no non-associative left Bol loop has order below 8",
          none, "orders 1..7: " + counts);
  auto eight = enumerate_bol(8, true, jobs);
  auto cls = classify(eight, Relation::Isotopy);
  auto b1 = canonical_form(builtin("B1")), b2 = canonical_form(builtin("B2"));
  const auto& reps = cls.isomorphism_representatives;
  bool has_b1 = std::find(reps.begin(), reps.end(), b1) != reps.end();
  bool has_b2 = std::find(reps.begin(), reps.end(), b2) != reps.end();
  r.check("search.order-8-contains", "smallest Bol loops", "the order-8 search finds B1 and B2",
          has_b1 && has_b2, std::to_string(eight.size()) + " tables");
  r.check("search.order-8-isotopy", "smallest Bol loops",
          "the non-associative left Bol loops of order 8 form two isotopy classes",
          cls.isotopy_class_count() == 2, std::to_string(cls.isotopy_class_count()));
  bool split = false;
  for (const auto& c : cls.isotopy_classes) {
    bool c1 = false, c2 = false;
    for (std::size_t i : c) c1 = c1 || reps[i] == b1, c2 = c2 || reps[i] == b2;
    split = split || (c1 != c2);
  }
  r.check("search.order-8-separates", "smallest Bol loops", "B1 and B2 lie in different isotopy classes",
          split && has_b1 && has_b2);
  r.computed("search.order-8-isomorphism-classes", "smallest Bol loops",
             "isomorphism classes of non-associative left Bol loops of order 8",
             std::to_string(cls.isomorphism_class_count()));
}

/// Target "b1", "b2", "search" or "all".
inline Report verify(const std::string& target, const VerifyHooks& hooks = {}, unsigned jobs = 1) {
  if (target != "b1" && target != "b2" && target != "search" && target != "all")
    throw Error(ErrorCode::UnknownName, "unknown verify target '" + target + "'");
  Report r;
  r.input = "verify " + target;
  auto run = [&](const std::string& p, const LoopTable& l, NamedLoop which) {
    verify_loop_claims(r, p, l, which);
    verify_net_claims(r, p, l, which == NamedLoop::B1);
  };
  if (target == "b1" || target == "all") run("b1", hooks.b1.value_or(builtin("B1")), NamedLoop::B1);
  if (target == "b2" || target == "all") run("b2", hooks.b2.value_or(builtin("B2")), NamedLoop::B2);
  if (target == "search" || target == "all") verify_search_claims(r, jobs);
  return r;
}

/// A table that is still a left Bol loop isomorphic to the builtin but with
/// f and g relabeled, so element-level claims must fail.
inline LoopTable corrupted_builtin(const std::string& name) {
  LoopTable l = builtin(name);
  return l.relabel(Permutation::from_cycles(l.order(), {{1, 4}}));
}

}  // namespace bolnet

#endif  // BOLNET_VERIFY_HPP
