#include "accinfo/linalg.hpp"

#include <cmath>

namespace accinfo {

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

HermMatrix::HermMatrix(const CMatrix& m, double tol) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("HermMatrix requires a square matrix");
  const double drift = max_abs(m - m.adjoint());
  if (drift > tol * (1.0 + max_abs(m)))
    throw InvalidInput("matrix is not Hermitian within tolerance");
  m_ = hermitian_part(m);
}

double trace_product_real(const CMatrix& a, const CMatrix& b) {
  // tr(AB) = sum_{ij} A_ij B_ji
  return a.transpose().cwiseProduct(b).sum().real();
}

bool is_psd(const HermMatrix& m, double tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m.mat(),
                                            Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix partial_trace(const CMatrix& m, const std::vector<Eigen::Index>& dims,
                      const std::vector<std::size_t>& keep) {
  Eigen::Index total = 1;
  for (Eigen::Index d : dims) total *= d;
  if (total != m.rows() || m.rows() != m.cols())
    throw DimensionMismatch("partial_trace: dims do not factor the matrix");

  std::vector<bool> kept(dims.size(), false);
  for (std::size_t s : keep) {
    if (s >= dims.size())
      throw DimensionMismatch("partial_trace: keep index out of range");
    kept[s] = true;
  }

  Eigen::Index dim_keep = 1, dim_trace = 1;
  for (std::size_t s = 0; s < dims.size(); ++s)
    (kept[s] ? dim_keep : dim_trace) *= dims[s];

  // strides of each subsystem in the full row index (row-major subsystem
  // ordering: subsystem 0 is the most significant factor)
  std::vector<Eigen::Index> stride(dims.size());
  {
    Eigen::Index acc = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
      stride[s] = acc;
      acc *= dims[s];
    }
  }

  auto full_index = [&](Eigen::Index ik, Eigen::Index it) {
    Eigen::Index idx = 0, k = ik, t = it;
    for (std::size_t s = dims.size(); s-- > 0;) {
      Eigen::Index digit;
      if (kept[s]) {
        digit = k % dims[s];
        k /= dims[s];
      } else {
        digit = t % dims[s];
        t /= dims[s];
      }
      idx += digit * stride[s];
    }
    return idx;
  };

  CMatrix out = CMatrix::Zero(dim_keep, dim_keep);
  for (Eigen::Index r = 0; r < dim_keep; ++r)
    for (Eigen::Index c = 0; c < dim_keep; ++c) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < dim_trace; ++t)
        acc += m(full_index(r, t), full_index(c, t));
      out(r, c) = acc;
    }
  return out;
}

CMatrix pauli_2x2(PauliAxis axis) {
  CMatrix p(2, 2);
  switch (axis) {
    case PauliAxis::X:
      p << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      p << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case PauliAxis::Z:
      p << 1, 0, 0, -1;
      break;
  }
  return p;
}

HermMatrix pauli(PauliAxis axis, std::size_t qubit, std::size_t n_qubits) {
  if (qubit >= n_qubits) throw IndexOutOfRange("pauli: qubit index out of range");
  CMatrix out = CMatrix::Identity(1, 1);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if (q == qubit)
      out = tensor(out, pauli_2x2(axis));
    else
      out = tensor(out, CMatrix::Identity(2, 2));
  }
  return HermMatrix(out);
}

namespace {

// Gershgorin bound on the spectrum of a Hermitian matrix: every eigenvalue
// lies in [min_i (a_ii - r_i), max_i (a_ii + r_i)] with r_i the off-diagonal
// absolute row sum.
std::pair<double, double> gershgorin_bounds(const CMatrix& m) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double r = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
    double d = m(i, i).real();
    lo = std::min(lo, d - r);
    hi = std::max(hi, d + r);
  }
  return {lo, hi};
}

}  // namespace

HermMatrix inv_sqrt_fixpoint(const HermMatrix& s, double tol, int max_iter) {
  const Eigen::Index d = s.dim();
  const CMatrix& sm = s.mat();

  auto [glo, ghi] = gershgorin_bounds(sm);
  if (glo <= 0.0 || ghi >= 3.0) {
    // cheap bound inconclusive or violated; settle it exactly
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sm, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo <= 0.0 || hi >= 3.0)
      throw SpectrumOutOfRange("inv_sqrt_fixpoint: spectrum outside (0,3)");
  }

  CMatrix x = CMatrix::Identity(d, d);
  for (int n = 0; n < max_iter; ++n) {
    CMatrix sx = sm * x;
    CMatrix next = 1.5 * x - 0.25 * x * (sx + sx.adjoint()) * x;
    const double step = max_abs(next - x);
    x.swap(next);
    if (!x.allFinite() || max_abs(x) > 1e12)
      throw SpectrumOutOfRange("inv_sqrt_fixpoint: iteration diverged");
    if (step <= tol) return HermMatrix(hermitian_part(x), 1e-9);
  }
  throw NotConverged("inv_sqrt_fixpoint: max_iter reached");
}

HermMatrix inv_sqrt_eigen(const HermMatrix& s) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(s.mat());
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (ev.minCoeff() <= 1e-14)
    throw SingularMatrix("inv_sqrt_eigen: eigenvalue at or below 1e-14");
  Eigen::VectorXd inv_root = ev.array().sqrt().inverse();
  CMatrix x = es.eigenvectors() * inv_root.asDiagonal() *
              es.eigenvectors().adjoint();
  return HermMatrix(hermitian_part(x), 1e-9);
}

HermMatrix inv_sqrt(const HermMatrix& s) {
  try {
    return inv_sqrt_fixpoint(s);
  } catch (const SpectrumOutOfRange&) {
    return inv_sqrt_eigen(s);
  } catch (const NotConverged&) {
    return inv_sqrt_eigen(s);
  }
}

Eigen::VectorXd eigenvalues(const HermMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m.mat(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

int matrix_rank(const HermMatrix& m, double threshold) {
  Eigen::VectorXd ev = eigenvalues(m);
  int r = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > threshold) ++r;
  return r;
}

}  // namespace accinfo
