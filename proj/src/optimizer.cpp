#include "accinfo/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "accinfo/kernels.hpp"

namespace accinfo {

namespace {

constexpr double kProbFloor = 1e-12;
constexpr int kOvershootLimit = 60;
constexpr int kConvergenceWindow = 5;

Eigen::MatrixXd log_ratio_table(const JointDistribution& d) {
  Eigen::MatrixXd coeff(d.rows(), d.cols());
  for (Eigen::Index k = 0; k < d.cols(); ++k) {
    if (d.col_marg(k) <= kProbFloor) {
      // dead member: zero gradient, candidate for pruning
      coeff.col(k).setZero();
      continue;
    }
    for (Eigen::Index j = 0; j < d.rows(); ++j) {
      const double p = std::max(d.p(j, k), kProbFloor);
      coeff(j, k) = std::log(p / (d.row_marg(j) * d.col_marg(k)));
    }
  }
  return coeff;
}

}  // namespace

GradientFunctional GradientFunctional::accessible_information() {
  return GradientFunctional(
      "accessible-information",
      [](const Ensemble& e, const Povm&, const JointDistribution& d) {
        return kernels::weighted_state_sums(e.states(), log_ratio_table(d));
      },
      [](const Ensemble&, const Povm&, const JointDistribution& d) {
        return mutual_information(d, LogBase::Nat);
      });
}

GradientFunctional GradientFunctional::helstrom() {
  return GradientFunctional(
      "helstrom",
      [](const Ensemble& e, const Povm& m, const JointDistribution&) {
        if (m.size() != e.size())
          throw ShapeMismatch("helstrom functional requires K = J");
        std::vector<CMatrix> rs;
        rs.reserve(e.size());
        for (const HermMatrix& s : e.states()) rs.push_back(s.mat());
        return rs;
      },
      [](const Ensemble&, const Povm&, const JointDistribution& d) {
        return success_rate(d);
      });
}

GradientFunctional GradientFunctional::custom(std::string name, Rule rule,
                                              Objective objective) {
  return GradientFunctional(std::move(name), std::move(rule),
                            std::move(objective));
}

std::vector<CMatrix> gradient_operators(const Ensemble& e, const Povm& m,
                                        const GradientFunctional& f) {
  if (e.dim() != m.dim())
    throw DimensionMismatch("gradient_operators: dimensions differ");
  return f.gradient(e, m, joint_probabilities(e, m));
}

HermMatrix lagrange_operator(const std::vector<CMatrix>& rs, const Povm& m) {
  if (rs.size() != m.size())
    throw ShapeMismatch("lagrange_operator: length mismatch");
  CMatrix lambda = CMatrix::Zero(m.dim(), m.dim());
  for (std::size_t k = 0; k < rs.size(); ++k)
    lambda += rs[k] * m.members()[k].mat();
  return HermMatrix(hermitian_part(lambda), 1e-9);
}

double stationarity_residual(const Povm& m, const std::vector<CMatrix>& rs) {
  if (rs.size() != m.size())
    throw ShapeMismatch("stationarity_residual: length mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const CMatrix rkpk = rs[k] * m.members()[k].mat();
    for (std::size_t l = 0; l < m.size(); ++l) {
      const CMatrix lhs = m.members()[l].mat() * rkpk;
      const CMatrix rhs =
          m.members()[l].mat() * rs[l] * m.members()[k].mat();
      worst = std::max(worst, max_abs(lhs - rhs));
    }
  }
  return worst;
}

double ascent_gain(const Povm& m, const std::vector<CMatrix>& rs) {
  if (rs.size() != m.size())
    throw ShapeMismatch("ascent_gain: length mismatch");
  double gain = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k)
    for (std::size_t l = 0; l < m.size(); ++l) {
      const CMatrix diff = rs[k] - rs[l];
      gain += (diff * m.members()[k].mat() * diff * m.members()[l].mat())
                  .trace()
                  .real();
    }
  return gain;
}

Povm iterate_round(const Povm& m, const std::vector<CMatrix>& rs,
                   double alpha) {
  if (rs.size() != m.size())
    throw ShapeMismatch("iterate_round: length mismatch");
  const Eigen::Index d = m.dim();

  CMatrix drift = CMatrix::Zero(d, d);  // sum_l R_l Pi_l
  for (std::size_t l = 0; l < rs.size(); ++l)
    drift += rs[l] * m.members()[l].mat();

  CMatrix s;
  std::vector<CMatrix> pushed =
      kernels::gradient_push(m.members(), rs, drift, alpha, &s);

  // G^dag Pi G preserves positivity exactly; rounding noise on rank-deficient
  // members can leak slightly negative and gets amplified by later pushes, so
  // clip it before renormalizing (S^{-1/2} then restores exact completeness)
  bool clipped = false;
  for (CMatrix& p : pushed) {
    CMatrix h = hermitian_part(p);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.eigenvalues().minCoeff() < 0.0) {
      p = es.eigenvectors() *
          es.eigenvalues().cwiseMax(0.0).cast<Complex>().asDiagonal() *
          es.eigenvectors().adjoint();
      clipped = true;
    } else {
      p = std::move(h);
    }
  }
  if (clipped) {
    s = CMatrix::Zero(d, d);
    for (const CMatrix& p : pushed) s += p;
  }

  HermMatrix x;
  try {
    x = inv_sqrt(HermMatrix(hermitian_part(s), 1e-9));
  } catch (const SingularMatrix&) {
    throw StepFailed("iterate_round: member sum not invertible (alpha too large)");
  }

  std::vector<CMatrix> renorm = kernels::conjugate_members(pushed, x.mat());
  std::vector<HermMatrix> members;
  members.reserve(renorm.size());
  for (const CMatrix& t : renorm) members.emplace_back(hermitian_part(t), 1e-9);
  return Povm(std::move(members));
}

Povm iterate_round(const Povm& m, const Ensemble& e,
                   const GradientFunctional& f, double alpha) {
  return iterate_round(m, f.gradient(e, m, joint_probabilities(e, m)), alpha);
}

int davies_bound(const Ensemble& e) {
  const int r = matrix_rank(e.total_state(), 1e-10);
  bool all_real = true;
  for (const HermMatrix& s : e.states())
    if (s.mat().imag().cwiseAbs().maxCoeff() > 1e-12) {
      all_real = false;
      break;
    }
  return all_real ? r * (r + 1) / 2 : r * r;
}

namespace {

struct RunOutcome {
  Povm povm;
  double info;
  double residual;
  bool converged;
};

// inner ascent loop at fixed member count
RunOutcome run_ascent(const Ensemble& e, const GradientFunctional& f,
                      const IterationConfig& cfg, Povm start,
                      std::vector<TraceRow>& trace, int& round) {
  Povm cur = std::move(start);
  JointDistribution d = joint_probabilities(e, cur);
  double info = f.objective(e, cur, d);
  std::vector<CMatrix> rs = f.gradient(e, cur, d);
  double residual = stationarity_residual(cur, rs);

  double max_r = 0.0;
  for (const CMatrix& r : rs) max_r = std::max(max_r, max_abs(r));
  double alpha = cfg.alpha0 > 0.0 ? cfg.alpha0 : 1.0 / (1.0 + max_r);
  const double alpha_cap = 10.0 * alpha;

  bool converged = false;
  bool any_accept = false;
  int window = 0;
  int halvings = 0;

  while (round < cfg.max_rounds) {
    ++round;
    Povm next = iterate_round(cur, rs, alpha);
    JointDistribution dn = joint_probabilities(e, next);
    const double info_next = f.objective(e, next, dn);

    if (info_next < info) {
      trace.push_back({round, alpha, info_next, residual, cur.size(), false});
      alpha *= cfg.alpha_shrink;
      ++halvings;
      if (halvings > kOvershootLimit || alpha < 1e-12) {
        if (!any_accept)
          throw NoProgress("optimize: step size underflow with no accepted round");
        converged = residual <= cfg.tol_residual;
        break;
      }
      continue;
    }

    any_accept = true;
    halvings = 0;
    const double rel = (info_next - info) / std::max(1.0, std::abs(info_next));
    window = rel <= cfg.tol_info ? window + 1 : 0;

    cur = std::move(next);
    d = std::move(dn);
    info = info_next;
    rs = f.gradient(e, cur, d);
    residual = stationarity_residual(cur, rs);
    trace.push_back({round, alpha, info, residual, cur.size(), true});
    alpha = std::min(alpha * cfg.alpha_grow, alpha_cap);

    if (window >= kConvergenceWindow && residual <= cfg.tol_residual) {
      converged = true;
      break;
    }
  }
  return {std::move(cur), info, residual, converged};
}

// random positive operator used when the grow strategy appends a member
CMatrix random_gram(Eigen::Index dim, std::uint64_t seed, double trace) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      a(r, c) = Complex(gauss(rng), gauss(rng));
  CMatrix g = a.adjoint() * a;
  return g * (trace / g.trace().real());
}

RunOutcome run_strategy(const Ensemble& e, const GradientFunctional& f,
                        const IterationConfig& cfg,
                        const std::optional<Povm>& start,
                        std::vector<TraceRow>& trace) {
  int round = 0;
  const std::size_t j = e.size();

  switch (cfg.k_strategy) {
    case KStrategy::Fixed: {
      Povm p0 = start ? *start
                      : random_povm(e.dim(), cfg.k > 0 ? cfg.k : j, cfg.seed);
      return run_ascent(e, f, cfg, std::move(p0), trace, round);
    }
    case KStrategy::Davies: {
      const std::size_t kd = static_cast<std::size_t>(davies_bound(e));
      Povm p0 = start ? *start : random_povm(e.dim(), kd, cfg.seed);
      RunOutcome out = run_ascent(e, f, cfg, std::move(p0), trace, round);
      Povm merged = merge_equivalent(
          out.povm, joint_probabilities(e, out.povm), cfg.merge_tol);
      JointDistribution dm = joint_probabilities(e, merged);
      std::vector<CMatrix> rs = f.gradient(e, merged, dm);
      const double info = f.objective(e, merged, dm);
      const double resid = stationarity_residual(merged, rs);
      return {std::move(merged), info, resid, out.converged};
    }
    case KStrategy::Prune: {
      Povm p0 = start ? *start
                      : random_povm(e.dim(), cfg.k > 0 ? cfg.k : j, cfg.seed);
      RunOutcome out = run_ascent(e, f, cfg, std::move(p0), trace, round);
      // merge at the convergence checkpoint and re-polish if K dropped
      for (;;) {
        Povm merged = merge_equivalent(
            out.povm, joint_probabilities(e, out.povm), cfg.merge_tol);
        if (merged.size() >= out.povm.size()) break;
        out = run_ascent(e, f, cfg, std::move(merged), trace, round);
      }
      return out;
    }
    case KStrategy::Grow: {
      const std::size_t k_cap = static_cast<std::size_t>(davies_bound(e));
      Povm p0 = start ? *start
                      : random_povm(e.dim(), cfg.k > 0 ? cfg.k : j, cfg.seed);
      RunOutcome best = run_ascent(e, f, cfg, std::move(p0), trace, round);
      std::uint64_t grow_seed = cfg.seed + 1000003;
      while (best.povm.size() < k_cap && round < cfg.max_rounds) {
        std::vector<CMatrix> enlarged;
        for (const HermMatrix& mm : best.povm.members())
          enlarged.push_back(mm.mat());
        enlarged.push_back(random_gram(e.dim(), grow_seed++, 0.5));
        RunOutcome trial = run_ascent(e, f, cfg,
                                      normalize_to_povm(enlarged), trace,
                                      round);
        Povm merged = merge_equivalent(
            trial.povm, joint_probabilities(e, trial.povm), cfg.merge_tol);
        const double gain = trial.info - best.info;
        const bool virtual_growth = merged.size() <= best.povm.size();
        if (gain <= cfg.tol_info * std::max(1.0, std::abs(trial.info)) ||
            virtual_growth) {
          if (trial.info > best.info) {
            JointDistribution dm = joint_probabilities(e, merged);
            std::vector<CMatrix> rs = f.gradient(e, merged, dm);
            const double info = f.objective(e, merged, dm);
            const double resid = stationarity_residual(merged, rs);
            best = {std::move(merged), info, resid, trial.converged};
          }
          break;
        }
        best = {std::move(merged), trial.info, trial.residual,
                trial.converged};
      }
      return best;
    }
  }
  throw InvalidInput("optimize: unknown k_strategy");
}

}  // namespace

OptimizationResult optimize(const Ensemble& e, const GradientFunctional& f,
                            const IterationConfig& cfg,
                            const std::optional<Povm>& start) {
  if (cfg.max_rounds < 1 || cfg.tol_info <= 0.0 || cfg.tol_residual <= 0.0)
    throw InvalidInput("optimize: invalid configuration");

  std::optional<OptimizationResult> best;
  for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
    IterationConfig c = cfg;
    c.seed = cfg.seed + static_cast<std::uint64_t>(r);
    std::vector<TraceRow> trace;
    RunOutcome out = run_strategy(e, f, c, start, trace);
    int rounds = trace.empty() ? 0 : trace.back().round;
    if (!best || out.info > best->info_value) {
      best = OptimizationResult{std::move(out.povm), out.info,
                                std::move(trace), out.converged, rounds,
                                out.residual};
    }
  }
  return std::move(*best);
}

void write_trace_csv(const std::vector<TraceRow>& trace,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open trace file " + path);
  out << "round,alpha,info_nats,residual,K,accepted\n";
  char buf[128];
  for (const TraceRow& row : trace) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%zu,%d\n", row.round,
                  row.alpha, row.info, row.residual, row.k,
                  row.accepted ? 1 : 0);
    out << buf;
  }
}

}  // namespace accinfo
