#ifndef ACCINFO_KERNELS_HPP
#define ACCINFO_KERNELS_HPP

#include <vector>

#include "accinfo/linalg.hpp"

namespace accinfo::kernels {

/// Enables the OpenMP code paths (on by default). The serial variants stay
/// callable either way; tests and the benchmark compare the two directly.
void set_parallel(bool enabled);
bool parallel_enabled();

/// p_jk = Re tr(rho_j Pi_k).
Eigen::MatrixXd joint_table_serial(const std::vector<HermMatrix>& rhos,
                                   const std::vector<HermMatrix>& pis);
Eigen::MatrixXd joint_table_omp(const std::vector<HermMatrix>& rhos,
                                const std::vector<HermMatrix>& pis);
Eigen::MatrixXd joint_table(const std::vector<HermMatrix>& rhos,
                            const std::vector<HermMatrix>& pis);

/// R_k = sum_j coeff(j,k) rho_j for a J x K coefficient table.
std::vector<CMatrix> weighted_state_sums_serial(
    const std::vector<HermMatrix>& rhos, const Eigen::MatrixXd& coeff);
std::vector<CMatrix> weighted_state_sums_omp(
    const std::vector<HermMatrix>& rhos, const Eigen::MatrixXd& coeff);
std::vector<CMatrix> weighted_state_sums(const std::vector<HermMatrix>& rhos,
                                         const Eigen::MatrixXd& coeff);

/// Pi~_k = G_k^dag Pi_k G_k with G_k = 1 + alpha (R_k - drift); also returns
/// S = sum_k Pi~_k. The accumulation of S is serial in both variants so the
/// result is bit-identical regardless of thread count.
std::vector<CMatrix> gradient_push_serial(const std::vector<HermMatrix>& pis,
                                          const std::vector<CMatrix>& rs,
                                          const CMatrix& drift, double alpha,
                                          CMatrix* s_out);
std::vector<CMatrix> gradient_push_omp(const std::vector<HermMatrix>& pis,
                                       const std::vector<CMatrix>& rs,
                                       const CMatrix& drift, double alpha,
                                       CMatrix* s_out);
std::vector<CMatrix> gradient_push(const std::vector<HermMatrix>& pis,
                                   const std::vector<CMatrix>& rs,
                                   const CMatrix& drift, double alpha,
                                   CMatrix* s_out);

/// X M_k X for every member.
std::vector<CMatrix> conjugate_members_serial(const std::vector<CMatrix>& ms,
                                              const CMatrix& x);
std::vector<CMatrix> conjugate_members_omp(const std::vector<CMatrix>& ms,
                                           const CMatrix& x);
std::vector<CMatrix> conjugate_members(const std::vector<CMatrix>& ms,
                                       const CMatrix& x);

}  // namespace accinfo::kernels

#endif
