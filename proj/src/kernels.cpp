#include "accinfo/kernels.hpp"

#include <atomic>
#include <cstddef>

namespace accinfo::kernels {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool enabled) { g_parallel.store(enabled); }
bool parallel_enabled() { return g_parallel.load(); }

Eigen::MatrixXd joint_table_serial(const std::vector<HermMatrix>& rhos,
                                   const std::vector<HermMatrix>& pis) {
  const std::ptrdiff_t nj = static_cast<std::ptrdiff_t>(rhos.size());
  const std::ptrdiff_t nk = static_cast<std::ptrdiff_t>(pis.size());
  Eigen::MatrixXd p(nj, nk);
  for (std::ptrdiff_t j = 0; j < nj; ++j)
    for (std::ptrdiff_t k = 0; k < nk; ++k)
      p(j, k) = trace_product_real(rhos[j].mat(), pis[k].mat());
  return p;
}

Eigen::MatrixXd joint_table_omp(const std::vector<HermMatrix>& rhos,
                                const std::vector<HermMatrix>& pis) {
  const std::ptrdiff_t nj = static_cast<std::ptrdiff_t>(rhos.size());
  const std::ptrdiff_t nk = static_cast<std::ptrdiff_t>(pis.size());
  Eigen::MatrixXd p(nj, nk);
#pragma omp parallel for collapse(2) schedule(static)
  for (std::ptrdiff_t j = 0; j < nj; ++j)
    for (std::ptrdiff_t k = 0; k < nk; ++k)
      p(j, k) = trace_product_real(rhos[j].mat(), pis[k].mat());
  return p;
}

Eigen::MatrixXd joint_table(const std::vector<HermMatrix>& rhos,
                            const std::vector<HermMatrix>& pis) {
  return parallel_enabled() ? joint_table_omp(rhos, pis)
                            : joint_table_serial(rhos, pis);
}

namespace {

CMatrix weighted_sum(const std::vector<HermMatrix>& rhos,
                     const Eigen::MatrixXd& coeff, std::ptrdiff_t k) {
  const Eigen::Index d = rhos.front().dim();
  CMatrix r = CMatrix::Zero(d, d);
  for (std::size_t j = 0; j < rhos.size(); ++j)
    r += coeff(static_cast<Eigen::Index>(j), k) * rhos[j].mat();
  return r;
}

CMatrix push_member(const HermMatrix& pi, const CMatrix& r,
                    const CMatrix& drift, double alpha) {
  const Eigen::Index d = pi.dim();
  CMatrix g = CMatrix::Identity(d, d) + alpha * (r - drift);
  return g.adjoint() * pi.mat() * g;
}

}  // namespace

std::vector<CMatrix> weighted_state_sums_serial(
    const std::vector<HermMatrix>& rhos, const Eigen::MatrixXd& coeff) {
  const std::ptrdiff_t nk = coeff.cols();
  std::vector<CMatrix> out(nk);
  for (std::ptrdiff_t k = 0; k < nk; ++k) out[k] = weighted_sum(rhos, coeff, k);
  return out;
}

std::vector<CMatrix> weighted_state_sums_omp(
    const std::vector<HermMatrix>& rhos, const Eigen::MatrixXd& coeff) {
  const std::ptrdiff_t nk = coeff.cols();
  std::vector<CMatrix> out(nk);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < nk; ++k) out[k] = weighted_sum(rhos, coeff, k);
  return out;
}

std::vector<CMatrix> weighted_state_sums(const std::vector<HermMatrix>& rhos,
                                         const Eigen::MatrixXd& coeff) {
  return parallel_enabled() ? weighted_state_sums_omp(rhos, coeff)
                            : weighted_state_sums_serial(rhos, coeff);
}

std::vector<CMatrix> gradient_push_serial(const std::vector<HermMatrix>& pis,
                                          const std::vector<CMatrix>& rs,
                                          const CMatrix& drift, double alpha,
                                          CMatrix* s_out) {
  const std::ptrdiff_t nk = static_cast<std::ptrdiff_t>(pis.size());
  std::vector<CMatrix> out(nk);
  for (std::ptrdiff_t k = 0; k < nk; ++k)
    out[k] = push_member(pis[k], rs[k], drift, alpha);
  if (s_out) {
    *s_out = CMatrix::Zero(pis.front().dim(), pis.front().dim());
    for (const CMatrix& t : out) *s_out += t;
  }
  return out;
}

std::vector<CMatrix> gradient_push_omp(const std::vector<HermMatrix>& pis,
                                       const std::vector<CMatrix>& rs,
                                       const CMatrix& drift, double alpha,
                                       CMatrix* s_out) {
  const std::ptrdiff_t nk = static_cast<std::ptrdiff_t>(pis.size());
  std::vector<CMatrix> out(nk);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < nk; ++k)
    out[k] = push_member(pis[k], rs[k], drift, alpha);
  if (s_out) {
    // ordered serial sum, independent of the thread count
    *s_out = CMatrix::Zero(pis.front().dim(), pis.front().dim());
    for (const CMatrix& t : out) *s_out += t;
  }
  return out;
}

std::vector<CMatrix> gradient_push(const std::vector<HermMatrix>& pis,
                                   const std::vector<CMatrix>& rs,
                                   const CMatrix& drift, double alpha,
                                   CMatrix* s_out) {
  return parallel_enabled() ? gradient_push_omp(pis, rs, drift, alpha, s_out)
                            : gradient_push_serial(pis, rs, drift, alpha,
                                                   s_out);
}

std::vector<CMatrix> conjugate_members_serial(const std::vector<CMatrix>& ms,
                                              const CMatrix& x) {
  std::vector<CMatrix> out(ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k) out[k] = x * ms[k] * x;
  return out;
}

std::vector<CMatrix> conjugate_members_omp(const std::vector<CMatrix>& ms,
                                           const CMatrix& x) {
  const std::ptrdiff_t nk = static_cast<std::ptrdiff_t>(ms.size());
  std::vector<CMatrix> out(nk);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < nk; ++k) out[k] = x * ms[k] * x;
  return out;
}

std::vector<CMatrix> conjugate_members(const std::vector<CMatrix>& ms,
                                       const CMatrix& x) {
  return parallel_enabled() ? conjugate_members_omp(ms, x)
                            : conjugate_members_serial(ms, x);
}

}  // namespace accinfo::kernels
