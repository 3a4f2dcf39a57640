// The 9-cell weakly closed path: I_P against the hole-marked toric kernel and
// against the plain edge ring.

#include <iostream>

#include "polyideal/polyideal.hpp"

int main() {
  using namespace polyideal;
  const auto p = parse_ascii("####\n#..#\n.###");
  std::cout << render_ascii(p, {Overlay::holes}) << "\n\n";

  const auto path = recognize_weakly_closed_path(p);
  std::cout << "hooking corner " << to_string(path->hooking_corner) << '\n';
  const auto w = find_any_prime_configuration(p);
  const auto marked = marked_set_for_configuration(p, *w);
  std::cout << kind_name(*w) << ", marked:";
  for (Point q : marked) std::cout << ' ' << to_string(q);
  std::cout << "\n\nhole-marked map\n" << to_string(toric_equality_report(p, hole_toric_map(p, marked), 4));
  std::cout << "\n\nedge ring\n" << to_string(toric_equality_report(p, edge_ring_map(p), 4)) << '\n';
}
