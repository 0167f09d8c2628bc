#include "accinfo/ensemble.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>

#include "accinfo/kernels.hpp"

namespace accinfo {

Ensemble::Ensemble(std::vector<HermMatrix> states, std::string label)
    : states_(std::move(states)), label_(std::move(label)) {
  if (states_.size() < 2)
    throw InvalidInput("Ensemble requires at least two states");
  const Eigen::Index d = states_.front().dim();
  double total = 0.0;
  for (const HermMatrix& s : states_) {
    if (s.dim() != d)
      throw DimensionMismatch("Ensemble states have mixed dimensions");
    if (!is_psd(s, 1e-10))
      throw InvalidInput("Ensemble state is not positive semidefinite");
    total += s.trace_real();
  }
  const double off = std::abs(total - 1.0);
  if (off > 1e-6)
    throw InvalidInput("Ensemble traces sum to " + std::to_string(total) +
                       ", expected 1");
  if (off > 1e-10) {
    for (HermMatrix& s : states_) s = HermMatrix(s.mat() / total);
    rescaled_ = true;
    std::cerr << "warning: ensemble trace off by " << off
              << "; rescaled to unit total trace\n";
  }
}

HermMatrix Ensemble::total_state() const {
  CMatrix rho = CMatrix::Zero(dim(), dim());
  for (const HermMatrix& s : states_) rho += s.mat();
  return HermMatrix(rho);
}

Povm::Povm(std::vector<HermMatrix> members) : members_(std::move(members)) {
  if (members_.empty()) throw InvalidInput("Povm requires at least one member");
  const Eigen::Index d = members_.front().dim();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const HermMatrix& m : members_) {
    if (m.dim() != d)
      throw DimensionMismatch("Povm members have mixed dimensions");
    if (!is_psd(m, 1e-10))
      throw InvalidInput("Povm member is not positive semidefinite");
    sum += m.mat();
  }
  if (max_abs(sum - CMatrix::Identity(d, d)) > 1e-10)
    throw InvalidInput("Povm members do not sum to the identity");
}

JointDistribution joint_probabilities(const Ensemble& e, const Povm& m) {
  if (e.dim() != m.dim())
    throw DimensionMismatch("ensemble and POVM dimensions differ");
  JointDistribution d;
  d.p = kernels::joint_table(e.states(), m.members());
  for (Eigen::Index j = 0; j < d.p.rows(); ++j)
    for (Eigen::Index k = 0; k < d.p.cols(); ++k) {
      if (d.p(j, k) < -1e-12)
        throw NegativeProbability("joint probability " +
                                  std::to_string(d.p(j, k)));
      if (d.p(j, k) < 0.0) d.p(j, k) = 0.0;
    }
  d.row_marg = d.p.rowwise().sum();
  d.col_marg = d.p.colwise().sum();
  return d;
}

double mutual_information(const JointDistribution& d, LogBase base) {
  double info = 0.0;
  for (Eigen::Index j = 0; j < d.rows(); ++j)
    for (Eigen::Index k = 0; k < d.cols(); ++k) {
      const double p = d.p(j, k);
      if (p <= 1e-300) continue;
      info += p * std::log(p / (d.row_marg(j) * d.col_marg(k)));
    }
  return base == LogBase::Bit ? info / std::numbers::ln2 : info;
}

double success_rate(const JointDistribution& d) {
  if (d.rows() != d.cols())
    throw ShapeMismatch("success_rate requires J = K");
  return d.p.diagonal().sum();
}

Povm normalize_to_povm(const std::vector<CMatrix>& positive_ops) {
  const Eigen::Index d = positive_ops.front().rows();
  CMatrix s = CMatrix::Zero(d, d);
  for (const CMatrix& op : positive_ops) s += op;
  HermMatrix x = inv_sqrt(HermMatrix(hermitian_part(s), 1e-9));
  std::vector<CMatrix> conj = kernels::conjugate_members(positive_ops, x.mat());
  std::vector<HermMatrix> members;
  members.reserve(conj.size());
  for (const CMatrix& c : conj) members.emplace_back(hermitian_part(c), 1e-9);
  return Povm(std::move(members));
}

Povm random_povm(Eigen::Index dim, std::size_t k, std::uint64_t seed) {
  if (dim < 1 || k < 1) throw InvalidInput("random_povm: dim and K must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<CMatrix> gram;
  gram.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    CMatrix a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c)
        a(r, c) = Complex(gauss(rng), gauss(rng));
    gram.push_back(a.adjoint() * a);
  }
  return normalize_to_povm(gram);
}

Povm perturb_ignorant(const Povm& m, double fraction, std::uint64_t seed) {
  Povm noise = random_povm(m.dim(), m.size(), seed);
  std::vector<HermMatrix> blended;
  blended.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    blended.emplace_back((1.0 - fraction) * m.members()[k].mat() +
                         fraction * noise.members()[k].mat());
  return Povm(std::move(blended));
}

Povm merge_equivalent(const Povm& m, const JointDistribution& d, double tol) {
  const std::size_t k = m.size();
  if (static_cast<std::size_t>(d.cols()) != k)
    throw ShapeMismatch("merge_equivalent: table does not match the POVM");
  const Eigen::Index nj = d.rows();

  // union-find over members; equivalence = proportional outcome columns
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  for (std::size_t k1 = 0; k1 < k; ++k1)
    for (std::size_t k2 = k1 + 1; k2 < k; ++k2) {
      bool equiv = true;
      for (Eigen::Index j = 0; j < nj && equiv; ++j)
        for (Eigen::Index jp = 0; jp < nj && equiv; ++jp)
          if (std::abs(d.p(j, k1) * d.p(jp, k2) - d.p(jp, k1) * d.p(j, k2)) >
              tol)
            equiv = false;
      if (equiv) parent[find(k2)] = find(k1);
    }

  const Eigen::Index dim = m.dim();
  std::vector<CMatrix> merged;
  for (std::size_t root = 0; root < k; ++root) {
    if (find(root) != root) continue;
    CMatrix acc = CMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < k; ++i)
      if (find(i) == root) acc += m.members()[i].mat();
    if (acc.trace().real() > 1e-12) merged.push_back(acc);
  }
  if (merged.empty()) merged.push_back(CMatrix::Identity(dim, dim));

  CMatrix sum = CMatrix::Zero(dim, dim);
  for (const CMatrix& t : merged) sum += t;
  if (max_abs(sum - CMatrix::Identity(dim, dim)) > 1e-13)
    return normalize_to_povm(merged);
  std::vector<HermMatrix> members;
  for (const CMatrix& t : merged) members.emplace_back(t, 1e-9);
  return Povm(std::move(members));
}

}  // namespace accinfo
