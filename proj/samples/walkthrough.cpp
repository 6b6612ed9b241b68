// Small tour of the library: build a loop, inspect it, look at its net, search.
#include <iostream>

#include "bolnet/io.hpp"
#include "bolnet/loop_maps.hpp"
#include "bolnet/net.hpp"
#include "bolnet/search.hpp"

using namespace bolnet;

namespace {

void print_set(const LoopTable& l, const std::vector<Element>& xs) {
  std::cout << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) std::cout << (i ? ", " : "") << l.name(xs[i]);
  std::cout << "}";
}

}  // namespace

int main() {
  std::cout << std::boolalpha;
  const LoopTable b1 = builtin("B1");
  std::cout << format_loop(b1) << "\n";

  std::cout << "left Bol: " << bool(check_property(b1, LoopProperty::LeftBol))
            << "  associative: " << bool(check_property(b1, LoopProperty::Associative)) << "\n";
  std::cout << "left nucleus ";
  print_set(b1, nucleus(b1, NucleusSide::Left));
  std::cout << "\nright nucleus ";
  print_set(b1, nucleus(b1, NucleusSide::Right));
  std::cout << "\n";

  const GeneratedGroup aut = automorphism_group(b1);
  std::cout << "|Aut| = " << aut.order() << ", generated by";
  for (const auto& g : aut.generators()) std::cout << " " << g.cycle_string();
  std::cout << "\n";

  // Direction preserving collineations of the 3-net on 64 points.
  const auto gamma = enumerate_gamma(b1);
  std::cout << "|Gamma| = " << gamma.group.order() << ", |N| = " << N_group(b1).order()
            << ", origin orbit " << orbit_of_origin(gamma.group).size() << "\n";

  // A Bol reflection fixes a vertical line pointwise and is an involution.
  auto s = bol_reflection(b1, 1);
  std::cout << "reflection in x = 1 is an involution: " << (s.point_map * s.point_map).is_identity() << "\n";

  // Exhaustive search at order 8 with isotopy classification.
  auto proper = enumerate_bol(8, true);
  auto r = classify(proper, Relation::Isotopy);
  std::cout << proper.size() << " proper left Bol tables of order 8, " << r.isomorphism_class_count()
            << " up to isomorphism, " << r.isotopy_class_count() << " up to isotopy\n";
}
