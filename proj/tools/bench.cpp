// Compares the serial reference kernels against the OpenMP variants on a
// random ensemble/POVM pair: correctness (max deviation) and wall time.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "accinfo/ensemble.hpp"
#include "accinfo/kernels.hpp"

#include <omp.h>

namespace {

using namespace accinfo;
using Clock = std::chrono::steady_clock;

std::vector<HermMatrix> random_states(Eigen::Index dim, std::size_t j,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<CMatrix> grams;
  double total = 0.0;
  for (std::size_t i = 0; i < j; ++i) {
    CMatrix a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c)
        a(r, c) = Complex(gauss(rng), gauss(rng));
    grams.push_back(a.adjoint() * a);
    total += grams.back().trace().real();
  }
  std::vector<HermMatrix> states;
  for (CMatrix& g : grams) states.emplace_back(g / total, 1e-9);
  return states;
}

template <typename F>
double time_ms(int reps, F&& fn) {
  auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

double max_diff(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, max_abs(a[i] - b[i]));
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  Eigen::Index dim = 64;
  std::size_t nj = 16, nk = 64;
  int reps = 20;
  std::uint64_t seed = 42;
  app.add_option("--dim", dim);
  app.add_option("--j", nj);
  app.add_option("--k", nk);
  app.add_option("--reps", reps);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  std::vector<HermMatrix> rhos = random_states(dim, nj, seed);
  Povm povm = random_povm(dim, nk, seed + 1);
  const std::vector<HermMatrix>& pis = povm.members();

  std::printf("dim=%td J=%zu K=%zu reps=%d threads=%d\n", dim, nj, nk, reps,
              omp_get_max_threads());

  // joint table
  Eigen::MatrixXd p_s = kernels::joint_table_serial(rhos, pis);
  Eigen::MatrixXd p_p = kernels::joint_table_omp(rhos, pis);
  double t_s = time_ms(reps, [&] { kernels::joint_table_serial(rhos, pis); });
  double t_p = time_ms(reps, [&] { kernels::joint_table_omp(rhos, pis); });
  std::printf("joint_table         serial %8.3f ms  omp %8.3f ms  x%.2f  dev %.3e\n",
              t_s, t_p, t_s / t_p, (p_s - p_p).cwiseAbs().maxCoeff());

  // gradient-style weighted sums
  Eigen::MatrixXd coeff = Eigen::MatrixXd::Random(
      static_cast<Eigen::Index>(nj), static_cast<Eigen::Index>(nk));
  auto ws_s = kernels::weighted_state_sums_serial(rhos, coeff);
  auto ws_p = kernels::weighted_state_sums_omp(rhos, coeff);
  t_s = time_ms(reps, [&] { kernels::weighted_state_sums_serial(rhos, coeff); });
  t_p = time_ms(reps, [&] { kernels::weighted_state_sums_omp(rhos, coeff); });
  std::printf("weighted_state_sums serial %8.3f ms  omp %8.3f ms  x%.2f  dev %.3e\n",
              t_s, t_p, t_s / t_p, max_diff(ws_s, ws_p));

  // push + renormalize conjugation
  CMatrix drift = CMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < nk; ++k) drift += ws_s[k] * pis[k].mat();
  CMatrix s_a, s_b;
  auto gp_s = kernels::gradient_push_serial(pis, ws_s, drift, 1e-3, &s_a);
  auto gp_p = kernels::gradient_push_omp(pis, ws_s, drift, 1e-3, &s_b);
  t_s = time_ms(reps, [&] {
    CMatrix s;
    kernels::gradient_push_serial(pis, ws_s, drift, 1e-3, &s);
  });
  t_p = time_ms(reps, [&] {
    CMatrix s;
    kernels::gradient_push_omp(pis, ws_s, drift, 1e-3, &s);
  });
  std::printf("gradient_push       serial %8.3f ms  omp %8.3f ms  x%.2f  dev %.3e\n",
              t_s, t_p, t_s / t_p,
              std::max(max_diff(gp_s, gp_p), max_abs(s_a - s_b)));

  CMatrix x = CMatrix::Identity(dim, dim) * 0.5;
  auto cj_s = kernels::conjugate_members_serial(gp_s, x);
  auto cj_p = kernels::conjugate_members_omp(gp_s, x);
  t_s = time_ms(reps, [&] { kernels::conjugate_members_serial(gp_s, x); });
  t_p = time_ms(reps, [&] { kernels::conjugate_members_omp(gp_s, x); });
  std::printf("conjugate_members   serial %8.3f ms  omp %8.3f ms  x%.2f  dev %.3e\n",
              t_s, t_p, t_s / t_p, max_diff(cj_s, cj_p));

  return 0;
}
