#ifndef ACCINFO_OPTIMIZER_HPP
#define ACCINFO_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "accinfo/ensemble.hpp"

namespace accinfo {

/// Functional gradient rule: the objective is I(Pi) = sum_k tr(R_k Pi_k)
/// up to a Pi-independent constant, and the R_k drive the ascent.
class GradientFunctional {
 public:
  using Rule = std::function<std::vector<CMatrix>(
      const Ensemble&, const Povm&, const JointDistribution&)>;
  using Objective =
      std::function<double(const Ensemble&, const Povm&,
                           const JointDistribution&)>;

  static GradientFunctional accessible_information();
  static GradientFunctional helstrom();
  static GradientFunctional custom(std::string name, Rule rule,
                                   Objective objective);

  const std::string& name() const { return name_; }
  std::vector<CMatrix> gradient(const Ensemble& e, const Povm& m,
                                const JointDistribution& d) const {
    return rule_(e, m, d);
  }
  double objective(const Ensemble& e, const Povm& m,
                   const JointDistribution& d) const {
    return objective_(e, m, d);
  }

 private:
  GradientFunctional(std::string name, Rule rule, Objective objective)
      : name_(std::move(name)),
        rule_(std::move(rule)),
        objective_(std::move(objective)) {}

  std::string name_;
  Rule rule_;
  Objective objective_;
};

enum class KStrategy { Fixed, Davies, Grow, Prune };

struct IterationConfig {
  double alpha0 = 0.0;        // <= 0 selects 1/(1 + max_k |R_k|) at round 1
  double alpha_grow = 1.1;
  double alpha_shrink = 0.5;
  double tol_info = 1e-12;    // relative dI stop, 5-round window
  double tol_residual = 1e-8; // stationarity stop
  int max_rounds = 20000;
  KStrategy k_strategy = KStrategy::Fixed;
  std::size_t k = 0;          // member count for Fixed (0 = J)
  std::uint64_t seed = 1;
  int restarts = 1;
  double merge_tol = 1e-8;
};

struct TraceRow {
  int round;
  double alpha;
  double info;      // nats
  double residual;
  std::size_t k;
  bool accepted;
};

struct OptimizationResult {
  Povm povm;
  double info_value = 0.0;  // nats
  std::vector<TraceRow> trace;
  bool converged = false;
  int rounds_used = 0;
  double final_residual = 0.0;
};

std::vector<CMatrix> gradient_operators(const Ensemble& e, const Povm& m,
                                        const GradientFunctional& f);

/// Lambda = Hermitian part of sum_k R_k Pi_k; tr(Lambda) equals the
/// objective at stationary points.
HermMatrix lagrange_operator(const std::vector<CMatrix>& rs, const Povm& m);

/// max_{k,l} |Pi_l R_k Pi_k - Pi_l R_l Pi_k|_max; zero exactly at
/// stationary POVMs.
double stationarity_residual(const Povm& m, const std::vector<CMatrix>& rs);

/// dI/dalpha at alpha = 0 along the ascent direction:
/// sum_{k,l} tr[(R_k - R_l) Pi_k (R_k - R_l) Pi_l] >= 0.
double ascent_gain(const Povm& m, const std::vector<CMatrix>& rs);

/// One ascent round: G_k = 1 + alpha (R_k - sum_l R_l Pi_l),
/// Pi~_k = G_k^dag Pi_k G_k, then S^{-1/2} Pi~_k S^{-1/2}.
Povm iterate_round(const Povm& m, const Ensemble& e,
                   const GradientFunctional& f, double alpha);

/// Same round with precomputed gradients (the hot path).
Povm iterate_round(const Povm& m, const std::vector<CMatrix>& rs,
                   double alpha);

/// Steepest ascent with overshoot control and K management.
OptimizationResult optimize(const Ensemble& e, const GradientFunctional& f,
                            const IterationConfig& cfg,
                            const std::optional<Povm>& start = std::nullopt);

/// r^2 members always suffice (r = rank of the total state); r(r+1)/2 when
/// every state is real in the computational basis.
int davies_bound(const Ensemble& e);

/// Trace CSV with header round,alpha,info_nats,residual,K,accepted and
/// floats at 17 significant digits.
void write_trace_csv(const std::vector<TraceRow>& trace,
                     const std::string& path);

}  // namespace accinfo

#endif
