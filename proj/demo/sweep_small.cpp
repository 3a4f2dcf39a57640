// Sweep of all fixed polyominoes up to 7 cells (or argv[1]).

#include <cstdlib>
#include <iostream>

#include "polyideal/polyideal.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 7;
  const auto report = polyideal::conjecture_sweep(n, 3);
  std::cout << polyideal::sweep_table(report);
  return report.violation_count() == 0 ? 0 : 1;
}
