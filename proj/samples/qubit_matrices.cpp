// Exact and numeric braid generators on the dense qubit V_{1/2}^{1/2 1/2 1/2}.

#include <iostream>

#include "su2k/braid/qubit.hpp"

int main(int argc, char** argv) {
  const int k = argc > 1 ? std::atoi(argv[1]) : 3;
  const su2k::Level level(k);
  const auto data = su2k::qubit_data(level);
  const auto rho = su2k::dense_qubit_rep(level);
  std::cout << "k=" << k << "\nF entries:\n";
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) std::cout << "  F[" << r << "][" << c << "] = " << data.f(r, c).to_string() << "\n";
  const auto s2 = su2k::approx_matrix<double>(rho.sigma2);
  std::cout << "rho(sigma_2) ~\n  " << s2(0, 0) << "  " << s2(0, 1) << "\n  " << s2(1, 0) << "  " << s2(1, 1) << "\n";
  const auto a = su2k::evaluate_word(su2k::dense_qubit_basis(level), su2k::BraidWord::parse("s1^2 s2^4"));
  std::cout << "rho(s1^2 s2^4) ~\n  " << a(0, 0) << "  " << a(0, 1) << "\n  " << a(1, 0) << "  " << a(1, 1) << "\n";
}
