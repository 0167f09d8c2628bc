#ifndef ACCINFO_TEST_SUPPORT_HPP
#define ACCINFO_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "accinfo/ensemble.hpp"

namespace accinfo::testing {

inline CMatrix random_complex(Eigen::Index rows, Eigen::Index cols,
                              std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

inline HermMatrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
  return HermMatrix(hermitian_part(random_complex(dim, dim, rng)), 1e-9);
}

/// Random PSD matrix with spectrum rescaled into [lo, hi].
inline HermMatrix random_psd_in(Eigen::Index dim, double lo, double hi,
                                std::mt19937_64& rng) {
  CMatrix a = random_complex(dim, dim, rng);
  CMatrix g = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g);
  const double gmin = es.eigenvalues().minCoeff();
  const double gmax = es.eigenvalues().maxCoeff();
  Eigen::VectorXd mapped =
      (es.eigenvalues().array() - gmin) / (gmax - gmin) * (hi - lo) + lo;
  CMatrix out = es.eigenvectors() * mapped.asDiagonal().toDenseMatrix().cast<Complex>() *
                es.eigenvectors().adjoint();
  return HermMatrix(hermitian_part(out), 1e-9);
}

/// Random ensemble of Gram states normalized to unit total trace.
inline Ensemble random_ensemble(Eigen::Index dim, std::size_t j,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CMatrix> grams;
  double total = 0.0;
  for (std::size_t i = 0; i < j; ++i) {
    CMatrix a = random_complex(dim, dim, rng);
    grams.push_back(a.adjoint() * a);
    total += grams.back().trace().real();
  }
  std::vector<HermMatrix> states;
  for (CMatrix& g : grams) states.emplace_back(g / total, 1e-9);
  return Ensemble(std::move(states));
}

}  // namespace accinfo::testing

#endif
