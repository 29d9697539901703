// Builds the 3x3 grid as a product of two paths, lifts the optimal path
// distributions into it and compares with the exhaustive optimum.

#include <iostream>

#include "pebbling/pebbling.hpp"

int main() {
  using namespace pebbling;

  const Graph p3 = make_path(3);
  const Graph grid = cartesian_product(p3, p3);
  const Distribution lifted = product_distribution(construct_optimal_path_distribution(3),
                                                   construct_optimal_path_distribution(3));

  std::cout << grid.label() << ": " << grid.size() << " vertices, " << grid.edge_count()
            << " edges\n";
  std::cout << "lifted distribution " << format_distribution(lifted) << " is "
            << (is_solvable(grid, lifted) ? "solvable" : "unsolvable") << "\n";

  const NumberReport best = optimal_pebbling_number(grid);
  std::cout << "f_opt = " << best.value << ", first witness " << format_distribution(*best.witness)
            << "\n";

  const GrahamRow row = graham_optimal_check(make_path(2), make_path(2));
  std::cout << "P2 x P2: " << row.fopt_product << " <= " << row.fopt_g << " * " << row.fopt_h
            << (row.tight ? " (tight)" : " (strict)") << "\n";
}
