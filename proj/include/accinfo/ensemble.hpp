#ifndef ACCINFO_ENSEMBLE_HPP
#define ACCINFO_ENSEMBLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "accinfo/linalg.hpp"

namespace accinfo {

/// Ordered set of subnormalized states rho_j; tr(rho_j) is the prior of
/// state j and the traces sum to one.
class Ensemble {
 public:
  Ensemble(std::vector<HermMatrix> states, std::string label = {});

  const std::vector<HermMatrix>& states() const { return states_; }
  Eigen::Index dim() const { return states_.front().dim(); }
  std::size_t size() const { return states_.size(); }
  const std::string& label() const { return label_; }
  /// True when construction rescaled a total trace off by at most 1e-6.
  bool was_rescaled() const { return rescaled_; }

  /// rho = sum_j rho_j.
  HermMatrix total_state() const;

 private:
  std::vector<HermMatrix> states_;
  std::string label_;
  bool rescaled_ = false;
};

/// Ordered set of positive operators summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<HermMatrix> members);

  const std::vector<HermMatrix>& members() const { return members_; }
  Eigen::Index dim() const { return members_.front().dim(); }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<HermMatrix> members_;
};

/// Joint outcome table p_jk with cached marginals.
struct JointDistribution {
  Eigen::MatrixXd p;           // J x K
  Eigen::VectorXd row_marg;    // p_{j.}
  Eigen::VectorXd col_marg;    // p_{.k}

  Eigen::Index rows() const { return p.rows(); }
  Eigen::Index cols() const { return p.cols(); }
};

enum class LogBase { Nat, Bit };

JointDistribution joint_probabilities(const Ensemble& e, const Povm& m);

/// I = sum_jk p_jk log(p_jk / (p_j. p_.k)), with 0 log 0 = 0.
double mutual_information(const JointDistribution& d,
                          LogBase base = LogBase::Nat);

/// sum_j p_jj; requires a square table.
double success_rate(const JointDistribution& d);

/// K Gaussian Gram matrices renormalized to a resolution of the identity.
/// Deterministic for a given seed.
Povm random_povm(Eigen::Index dim, std::size_t k, std::uint64_t seed);

/// Convex blend (1-fraction) m + fraction random_povm(dim, K, seed).
Povm perturb_ignorant(const Povm& m, double fraction, std::uint64_t seed);

/// Sums members whose outcome columns are proportional
/// (|p_{jk1} p_{j'k2} - p_{j'k1} p_{jk2}| <= tol for all j, j'), drops
/// members with trace <= 1e-12, and renormalizes if needed. `d` must have
/// been computed from `m`.
Povm merge_equivalent(const Povm& m, const JointDistribution& d,
                      double tol = 1e-8);

/// S^{-1/2} (.) S^{-1/2} renormalization of arbitrary positive operators,
/// S their sum. The same rule as Step 3 of the iteration round.
Povm normalize_to_povm(const std::vector<CMatrix>& positive_ops);

}  // namespace accinfo

#endif
