#ifndef ACCINFO_LINALG_HPP
#define ACCINFO_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "accinfo/errors.hpp"

namespace accinfo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Largest entry magnitude; zero for empty matrices.
double max_abs(const CMatrix& m);

/// (M + M^dag)/2.
CMatrix hermitian_part(const CMatrix& m);

/// Square complex matrix kept Hermitian by construction.
///
/// The constructor symmetrizes to (M + M^dag)/2 and rejects inputs whose
/// anti-Hermitian part exceeds the drift tolerance, so downstream code can
/// rely on exact Hermiticity of the stored entries.
class HermMatrix {
 public:
  HermMatrix() = default;
  explicit HermMatrix(const CMatrix& m, double tol = 1e-12);

  const CMatrix& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  double trace_real() const { return m_.trace().real(); }

 private:
  CMatrix m_;
};

/// Real trace of a product of Hermitian matrices, tr(A B), in O(d^2).
double trace_product_real(const CMatrix& a, const CMatrix& b);

bool is_psd(const HermMatrix& m, double tol = 1e-10);

/// Kronecker product A (x) B.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Reduced operator on the subsystems listed in `keep` (indices into `dims`).
/// `keep` entries must be strictly increasing; the kept subsystems stay in
/// their original order.
CMatrix partial_trace(const CMatrix& m, const std::vector<Eigen::Index>& dims,
                      const std::vector<std::size_t>& keep);

enum class PauliAxis { X, Y, Z };

/// Pauli operator on one qubit of an n-qubit register (identity elsewhere).
HermMatrix pauli(PauliAxis axis, std::size_t qubit, std::size_t n_qubits);

/// The 2x2 Pauli matrix itself.
CMatrix pauli_2x2(PauliAxis axis);

/// S^{-1/2} via the cubically convergent fixpoint iteration
///   X_{n+1} = (3/2) X_n - (1/4) X_n (S X_n + X_n S) X_n,  X_0 = 1,
/// valid while every eigenvalue of S lies in (0, 3).
///
/// Throws SpectrumOutOfRange if the precheck or divergence shows the
/// spectrum outside (0, 3), NotConverged if max_iter is hit.
HermMatrix inv_sqrt_fixpoint(const HermMatrix& s, double tol = 1e-14,
                             int max_iter = 100);

/// S^{-1/2} from the eigendecomposition; requires eigenvalues > 1e-14.
HermMatrix inv_sqrt_eigen(const HermMatrix& s);

/// Fixpoint iteration with eigendecomposition fallback.
HermMatrix inv_sqrt(const HermMatrix& s);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd eigenvalues(const HermMatrix& m);

/// Count of eigenvalues above the threshold.
int matrix_rank(const HermMatrix& m, double threshold = 1e-10);

}  // namespace accinfo

#endif
