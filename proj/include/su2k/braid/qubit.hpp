#pragma once

// One-qubit encodings with tau = 1/2: dense V_tau^{tau tau tau} and sparse V_0^{tau tau tau tau}.

#include "su2k/braid/representation.hpp"

namespace su2k {

inline constexpr AnyonLabel kTau{1};

inline void require_qubit_level(const Level& level) {
  if (level.k() < 2) throw DomainError("the 1/2-anyon qubit needs k >= 2, got k=" + std::to_string(level.k()));
}

inline SplittingBasis dense_qubit_basis(const Level& level) {
  require_qubit_level(level);
  return SplittingBasis(level, kTau, 3, kTau);
}

inline SplittingBasis sparse_qubit_basis(const Level& level) {
  require_qubit_level(level);
  return SplittingBasis(level, kTau, 4, AnyonLabel{0});
}

/// F = F^{tau tau tau}_tau and R = diag(R^{tau tau}_0, R^{tau tau}_1), exact.
struct QubitData {
  SurdMatrix f;
  SurdMatrix r;
};

inline QubitData qubit_data(const Level& level) {
  require_qubit_level(level);
  const auto table = quantum_table(level);
  QubitData out;
  out.f = SurdMatrix(2);
  for (int y = 0; y < 2; ++y)
    for (int m = 0; m < 2; ++m) out.f(static_cast<std::size_t>(y), static_cast<std::size_t>(m)) = f_symbol(*table, 1, 1, 1, 1, 2 * m, 2 * y);
  out.r = SurdMatrix::diagonal({Surd(r_symbol(level, kTau, kTau, {0})), Surd(r_symbol(level, kTau, kTau, {2}))});
  return out;
}

/// rho(sigma_1), rho(sigma_2) on the dense qubit, exact.
struct QubitGenerators {
  SurdMatrix sigma1;
  SurdMatrix sigma2;
};

inline QubitGenerators dense_qubit_rep(const Level& level) {
  const auto basis = dense_qubit_basis(level);
  return {exact_generator(basis, 1), exact_generator(basis, 2)};
}

/// R~ = -i q^{1/4} R = diag(i q^{-1/2}, -i q^{1/2}) and sigma~_2 = F^{-1} R~ F, both of determinant 1.
inline QubitGenerators normalized_qubit_rep(const Level& level) {
  require_qubit_level(level);
  const int n = level.root_order();
  const int shift = level.shift();
  // i = zeta_N^{k+2}, q^{1/2} = zeta_N^2
  const SurdMatrix rt = SurdMatrix::diagonal({Surd(CycNumber::root_of_unity(n, shift - 2)), Surd(CycNumber::root_of_unity(n, 3 * shift + 2))});
  const QubitData d = qubit_data(level);
  const SurdMatrix f_squared = d.f * d.f;
  if (!(f_squared == SurdMatrix::identity(2))) throw IntegrityError("F^{tau tau tau}_tau is not involutory");
  return {rt, d.f * rt * d.f};
}

/// Sparse encoding generators sigma'_1, sigma'_2, sigma'_3 on V_0^{tau tau tau tau}, exact, with the
/// basis ordered so that |b_1, tau> corresponds to |b_1> of the dense encoding.
struct SparseGenerators {
  SurdMatrix sigma1;
  SurdMatrix sigma2;
  SurdMatrix sigma3;
};

inline SparseGenerators sparse_encoding_rep(const Level& level) {
  const auto sparse = sparse_qubit_basis(level);
  const auto dense = dense_qubit_basis(level);
  if (sparse.dim() != 2 || dense.dim() != 2) throw IntegrityError("qubit spaces are not two-dimensional");
  // permutation: sparse state (b1, tau) -> dense state (b1)
  std::vector<std::size_t> to_dense(2);
  for (std::size_t s = 0; s < 2; ++s) {
    const auto& st = sparse.states()[s];
    if (st.size() != 2 || st[1] != kTau.twice_j) throw IntegrityError("unexpected sparse qubit state");
    const auto d = dense.find({st[0]});
    if (!d) throw IntegrityError("sparse qubit state has no dense counterpart");
    to_dense[s] = *d;
  }
  auto relabel = [&](const SurdMatrix& m) {
    SurdMatrix out(2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) out(to_dense[r], to_dense[c]) = m(r, c);
    return out;
  };
  SparseGenerators out{relabel(exact_generator(sparse, 1)), relabel(exact_generator(sparse, 2)), relabel(exact_generator(sparse, 3))};
  const auto rho = dense_qubit_rep(level);
  if (!(out.sigma1 == rho.sigma1)) throw IntegrityError("sparse sigma'_1 differs from dense sigma_1");
  if (!(out.sigma2 == rho.sigma2)) throw IntegrityError("sparse sigma'_2 differs from dense sigma_2");
  if (!(out.sigma3 == rho.sigma1)) throw IntegrityError("sparse sigma'_3 differs from dense sigma_1");
  return out;
}

}  // namespace su2k
