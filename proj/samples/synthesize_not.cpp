// Approximating the NOT gate by double braids at k=3.

#include <iostream>

#include "su2k/synth/search.hpp"

int main() {
  su2k::SearchConfig config;
  config.k = 3;
  config.max_depth = 10;
  su2k::CMatrixD x(2);
  x(0, 1) = x(1, 0) = su2k::ComplexD(1.0);
  const auto result = su2k::synthesize(config, x);
  for (const auto& row : result.rows)
    std::cout << row.depth << "\t" << row.distinct << "\t" << row.best_error << "\t" << row.best_word.to_string() << "\n";
}
