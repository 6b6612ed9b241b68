#ifndef BOLNET_NET_REPORT_HPP
#define BOLNET_NET_REPORT_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "group_algorithms.hpp"
#include "loop.hpp"
#include "loop_maps.hpp"
#include "net.hpp"

namespace bolnet {

struct ReportCheck {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string value;
};

/// Which builtin the loop is isomorphic to, if any.
enum class NamedLoop { None, B1, B2 };

inline const char* to_string(NamedLoop n) {
  switch (n) {
    case NamedLoop::B1: return "B1";
    case NamedLoop::B2: return "B2";
    case NamedLoop::None: return "none";
  }
  return "?";
}

struct NetGroupReport {
  std::size_t loop_order = 0;
  bool left_bol = false;
  NamedLoop identified = NamedLoop::None;

  std::size_t gamma_order = 0;
  std::size_t N_order = 0;
  std::size_t kernel_order = 0;
  std::size_t H_order = 0;
  std::size_t full_order = 0;
  std::vector<Point> orbit_P;
  std::size_t gamma0_order = 0;
  std::size_t gammaH_order = 0;
  std::size_t gammaV_order = 0;

  GroupFingerprint gamma_fingerprint;
  GroupFingerprint commutator_fingerprint;
  std::optional<GroupFingerprint> frattini_fingerprint;

  std::vector<ReportCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
  }
};

namespace detail {

template <typename Seq>
std::string join_values(const Seq& xs, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << sep;
    os << x;
    first = false;
  }
  return os.str();
}

inline std::string bracketed(const std::vector<std::size_t>& xs) { return "[" + join_values(xs) + "]"; }

inline NamedLoop identify_builtin(const LoopTable& l) {
  if (l.order() != 8) return NamedLoop::None;
  if (is_isomorphic(l, builtin("B1"))) return NamedLoop::B1;
  if (is_isomorphic(l, builtin("B2"))) return NamedLoop::B2;
  return NamedLoop::None;
}

/// m -> k^-1 m k, the conjugation action used by the external models.
inline Permutation conjugation_action(const Permutation& k, const Permutation& m) {
  return conjugate(m, k);
}

}  // namespace detail

/// Orders, stabilizers and structural checks for the net of L. Non-Bol loops
/// get the direction preserving group and its stabilizers only. Bol loops
/// get the N and H analysis; loops isomorphic to B1 or B2 additionally get
/// the identifications specific to those loops.
inline NetGroupReport structure_report(const LoopTable& l, unsigned jobs = 1) {
  const std::size_t n = l.order();
  NetGroupReport r;
  r.loop_order = n;
  auto add = [&](std::string id, std::string statement, bool ok, std::string value = {}) {
    r.checks.push_back({std::move(id), std::move(statement), ok, std::move(value)});
  };

  GammaEnumeration ge = enumerate_gamma(l, jobs);
  const GeneratedGroup& gamma = ge.group;
  r.gamma_order = gamma.order();
  r.orbit_P = orbit_of_origin(gamma);
  GeneratedGroup gamma0 = stabilizer(l, gamma, StabilizerTarget::Origin);
  GeneratedGroup gammaH = stabilizer(l, gamma, StabilizerTarget::HorizontalLine);
  GeneratedGroup gammaV = stabilizer(l, gamma, StabilizerTarget::VerticalLine);
  r.gamma0_order = gamma0.order();
  r.gammaH_order = gammaH.order();
  r.gammaV_order = gammaV.order();
  r.gamma_fingerprint = fingerprint(gamma);
  GeneratedGroup gamma_prime = derived_subgroup(gamma);
  r.commutator_fingerprint = fingerprint(gamma_prime);
  if (detail::prime_of_power(gamma.order())) r.frattini_fingerprint = fingerprint(frattini(gamma));

  add("net.orbit-stabilizer", "|Gamma| = |P| * |Gamma_0|",
      r.gamma_order == r.orbit_P.size() * r.gamma0_order,
      std::to_string(r.gamma_order) + " = " + std::to_string(r.orbit_P.size()) + " * " +
          std::to_string(r.gamma0_order));

  {
    GeneratedGroup aut = automorphism_group(l);
    bool diag = true;
    for (const auto& x : gamma0.elements()) {
      auto dc = as_dir_collineation(n, x);
      diag = diag && dc.alpha == dc.beta && aut.contains(dc.alpha);
    }
    add("net.origin-stabilizer-automorphisms",
        "collineations fixing the origin are pairs (alpha, alpha) with alpha an automorphism",
        diag && gamma0.order() == aut.order(), std::to_string(gamma0.order()));
  }

  const PropertyCheck bol = check_property(l, LoopProperty::LeftBol);
  r.left_bol = bol.holds;
  if (!r.left_bol) return r;

  r.identified = detail::identify_builtin(l);

  GeneratedGroup N = N_group(l);
  GeneratedGroup kernel = phi_kernel(l);
  GeneratedGroup G = translation_group(l);
  r.N_order = N.order();
  r.kernel_order = kernel.order();
  add("net.N-in-gamma", "N is a subgroup of Gamma", N.is_subgroup_of(gamma));
  add("net.phi-image", "phi maps N onto G(L)", phi_image(l, N) == G,
      std::to_string(phi_image(l, N).order()));
  add("net.phi-kernel-trivial", "phi has trivial kernel on N", kernel.is_trivial(),
      std::to_string(kernel.order()));

  {
    std::set<Element> reached;
    for (const auto& x : N.elements()) reached.insert(as_dir_collineation(n, x).beta(0));
    add("net.N-transitive-horizontal", "N is transitive on the horizontal lines",
        reached.size() == n, std::to_string(reached.size()));
  }

  GeneratedGroup H = join(gamma0, N);
  r.H_order = H.order();
  GeneratedGroup H_prime = derived_subgroup(H);
  {
    bool ok = H_prime.is_abelian();
    std::string value = "|H'| = " + std::to_string(H_prime.order());
    if (detail::prime_of_power(H.order())) {
      ok = ok && frattini(H) == H_prime;
    } else {
      ok = false;
      value += ", |H| is not a prime power";
    }
    value += ", |phi(H')| = " + std::to_string(phi_image(l, H_prime).order());
    add("net.H-derived-frattini", "H' is abelian and equals Frattini(H)", ok, value);
  }

  {
    GeneratedGroup full = full_group(l, gamma);
    r.full_order = full.order();
    bool sigma_outside = !gamma.contains(bol_reflection(l, 0).point_map);
    add("net.full-group-index-2", "Gamma is normal of index 2 in the full collineation group",
        sigma_outside && full.order() == 2 * gamma.order() && is_normal(full, gamma),
        std::to_string(full.order()));
  }

  {
    std::size_t on_h = 0, on_v = 0;
    for (Point p : r.orbit_P) {
      if (point_at(n, p).y == 0) ++on_h;
      if (point_at(n, p).x == 0) ++on_v;
    }
    std::size_t cl = companion_set(l, PseudoSide::Left).size();
    std::size_t cr = companion_set(l, PseudoSide::Right).size();
    add("net.companion-bijections", "|l_h meet P| = |C_lambda| and |l_v meet P| = |C_rho|",
        on_h == cl && on_v == cr,
        std::to_string(on_h) + "/" + std::to_string(cl) + ", " + std::to_string(on_v) + "/" +
            std::to_string(cr));
  }

  {
    std::set<Element> xs;
    for (Point p : r.orbit_P) xs.insert(point_at(n, p).x);
    add("net.P-vertical-union", "P is a union of vertical lines", r.orbit_P.size() == xs.size() * n,
        std::to_string(xs.size()) + " lines");
  }

  if (r.identified == NamedLoop::None) return r;

  GeneratedGroup aut = automorphism_group(l);

  if (r.identified == NamedLoop::B1) {
    add("structure.gamma-order", "|Gamma| = 128", gamma.order() == 128, std::to_string(gamma.order()));
    add("structure.gamma-equals-H", "Gamma = Gamma_0 N", H == gamma, std::to_string(H.order()));
    add("structure.split", "Gamma splits over N with complement Gamma_0",
        split_extension_check(gamma, N, gamma0));

    bool action = true;
    for (const auto& a : aut.elements())
      for (Element x = 0; x < n; ++x)
        action = action && conjugate(left_translation(l, x), a) == left_translation(l, a(x));
    for (const auto& c : gamma0.generators()) {
      Permutation alpha = as_dir_collineation(n, c).alpha;
      for (const auto& v : N.generators()) {
        Permutation w = conjugate(v, c);
        action = action && N.contains(w) &&
                 as_dir_collineation(n, w).beta == conjugate(as_dir_collineation(n, v).beta, alpha);
      }
    }
    add("structure.conjugation-action", "conjugation by (alpha, alpha) acts on N as lambda_x -> lambda_{x^alpha}",
        action);

    GeneratedGroup model = semidirect_product(aut, G, detail::conjugation_action);
    add("structure.external-model", "Gamma is isomorphic to Aut(B1) x| G(B1)", are_isomorphic(gamma, model),
        std::to_string(model.order()));

    auto inv = abelian_invariants(gamma_prime);
    add("structure.commutator", "Gamma' = Frattini(Gamma), abelian with invariants [2,4]",
        frattini(gamma) == gamma_prime && inv == std::vector<std::size_t>{2, 4},
        detail::bracketed(inv));

    bool regular = orbit(N, 0) == r.orbit_P && N.order() == r.orbit_P.size();
    std::set<Element> xs;
    for (Point p : r.orbit_P) xs.insert(point_at(n, p).x);
    add("structure.N-regular-on-P", "N is regular on P, |P| = 16, P is two vertical lines",
        regular && r.orbit_P.size() == 16 && xs.size() == 2,
        "|P| = " + std::to_string(r.orbit_P.size()));
    return r;
  }

  // B2
  add("structure.gamma-order", "|Gamma| = 128 and |H| = 64", gamma.order() == 128 && H.order() == 64,
      std::to_string(gamma.order()) + ", " + std::to_string(H.order()));

  {
    GeneratedGroup N0 = intersection(N, gamma0);
    GeneratedGroup G1 = unit_stabilizer_G1(l);
    std::vector<Permutation> betas;
    for (const auto& x : N0.elements()) betas.push_back(as_dir_collineation(n, x).beta);
    std::sort(betas.begin(), betas.end());
    bool same = betas == std::vector<Permutation>(G1.elements().begin(), G1.elements().end());
    add("structure.N0", "N_0 = N meet Gamma_0 has order 2 and matches G_1 inside Aut(L)",
        N0.order() == 2 && G1.order() == 2 && same && G1.is_subgroup_of(aut),
        std::to_string(N0.order()));
  }

  add("structure.gamma-H", "Gamma_H is isomorphic to D8 x C2",
      are_isomorphic(gammaH, direct_product(dihedral_group(4), cyclic_group(2))),
      std::to_string(gammaH.order()));

  {
    auto inv = abelian_invariants(quotient(gamma, N));
    add("structure.gamma-mod-N", "Gamma/N is elementary abelian of order 8",
        inv == std::vector<std::size_t>{2, 2, 2}, detail::bracketed(inv));
  }

  {
    auto nl = nucleus(l, NucleusSide::Left);
    bool ok = nl.size() == 2;
    std::string value;
    if (ok) {
      auto s = make_dir_collineation(l, Permutation::identity(n), nl[1]);
      ok = s.has_value();
      if (ok) {
        Permutation sigma = s->point_map();
        value = "sigma = (lambda_" + l.name(nl[1]) + ", id)";
        ok = sigma == DirCollineation{left_translation(l, nl[1]), Permutation::identity(n)}.point_map();
        ok = ok && !H.contains(sigma) && gamma.contains(sigma);
        for (const auto& g : gamma.generators()) ok = ok && g * sigma == sigma * g;
        ok = ok && join(H, GeneratedGroup::generate(n * n, {sigma})) == gamma &&
             gamma.order() == 2 * H.order() && is_normal(gamma, H);
      }
    }
    add("structure.direct-factor", "Gamma = H x <sigma> with sigma = (lambda_n, id), n the left nuclear involution",
        ok, value);
  }

  {
    auto inv = abelian_invariants(gamma_prime);
    GeneratedGroup phi_g = frattini(gamma);
    std::size_t top = gamma.order() / phi_g.order();
    std::size_t d = minimal_generator_count(gamma);
    add("structure.commutator", "Gamma' is elementary abelian of order 8 and equals Frattini(Gamma)",
        phi_g == gamma_prime && inv == std::vector<std::size_t>{2, 2, 2}, detail::bracketed(inv));
    add("structure.generator-count", "Gamma needs exactly 4 generators (|Gamma/Frattini| = 16)",
        top == 16 && d == 4, std::to_string(d));
  }

  {
    std::vector<GeneratedGroup> lambdas;
    for (auto& s : sharply_transitive_subgroups(G, n))
      if (s.is_abelian() && is_normal(G, s)) lambdas.push_back(std::move(s));
    std::vector<std::string> kinds;
    bool every = !lambdas.empty();
    for (const auto& lam : lambdas) {
      kinds.push_back(detail::bracketed(abelian_invariants(lam)));
      std::vector<Permutation> lift;
      for (const auto& x : N.elements())
        if (lam.contains(as_dir_collineation(n, x).beta)) lift.push_back(x);
      GeneratedGroup NL = GeneratedGroup::from_elements(n * n, lift);
      every = every && NL.order() == lam.order() && is_normal(H, NL) &&
              are_isomorphic(quotient(H, NL), gamma0) &&
              are_isomorphic(H, semidirect_product(aut, lam, detail::conjugation_action));
    }
    const std::string value = std::to_string(lambdas.size()) + " found: " + detail::join_values(kinds, " ");
    add("structure.lambda-semidirect",
        "G(B2) has an abelian normal regular subgroup Lambda; for each such Lambda its lift N_Lambda is "
        "normal in H, H/N_Lambda = Gamma_0 and H = Aut(B2) x| Lambda",
        every, value);
    add("structure.lambda-unique", "the abelian normal regular subgroup Lambda of G(B2) is unique",
        lambdas.size() == 1, value);
  }
  return r;
}

}  // namespace bolnet

#endif  // BOLNET_NET_REPORT_HPP
