// Classifies the bundled fixtures and prints one line each.

#include <iostream>

#include "polyideal/polyideal.hpp"

int main() {
  using namespace polyideal;
  for (int k = 1; k <= 7; ++k) {
    const std::string file = std::string(POLYIDEAL_FIXTURES) + "/F" + std::to_string(k) + ".txt";
    const auto p = parse_ascii(read_file(file));
    const auto v = classify(p);
    std::cout << "F" << k << "  " << p.size() << " cells  " << to_string(v.status) << "  (" << to_string(v.rule)
              << ")";
    if (const auto* w = std::get_if<ConfigurationWitness>(&v.evidence)) std::cout << "  " << kind_name(*w);
    if (const auto* w = std::get_if<ZigZagWalk>(&v.evidence)) std::cout << "  walk of length " << w->length();
    std::cout << '\n';
  }
}
