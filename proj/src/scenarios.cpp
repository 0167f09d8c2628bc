#include "accinfo/scenarios.hpp"

#include <cmath>

namespace accinfo::scenarios {

namespace {

void check_eps(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw RangeError("epsilon must lie in [0, 1]");
}

// sigma_zeta on ancilla qubit 3 (resp. 4), as a 4x4 operator
CMatrix sigma3(PauliAxis z) {
  return tensor(pauli_2x2(z), CMatrix::Identity(2, 2));
}
CMatrix sigma4(PauliAxis z) {
  return tensor(CMatrix::Identity(2, 2), pauli_2x2(z));
}

CMatrix sigma_dot_sigma() {
  CMatrix acc = CMatrix::Zero(4, 4);
  for (PauliAxis z : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z})
    acc += tensor(pauli_2x2(z), pauli_2x2(z));
  return acc;
}

double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

}  // namespace

NoiseParameters::NoiseParameters(double eps) : epsilon(eps) {
  check_eps(eps);
  // both amplitudes real, a >= 0; then (2a+b) b* = eps_bar >= 0
  b = std::sqrt(eps);
  a = 0.5 * (std::sqrt(4.0 - 3.0 * eps) - std::sqrt(eps));
  eps_bar = std::sqrt(std::max(0.0, 4.0 * eps - 3.0 * eps * eps));
}

Ensemble adhoc_ensemble() {
  CMatrix r1(3, 3), r2(3, 3);
  r1 << 0, 0, 0, 0, 5, 2, 0, 2, 10;
  r2 << 5, 2, 0, 2, 25, 0, 0, 0, 0;
  r1 /= 30.0;
  r2 /= 60.0;
  return Ensemble({HermMatrix(r1), HermMatrix(r2)}, "adhoc");
}

Povm helstrom_projectors(const Ensemble& e) {
  if (e.size() != 2)
    throw ShapeMismatch("helstrom_projectors requires exactly two states");
  const CMatrix diff = e.states()[0].mat() - e.states()[1].mat();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(diff);
  const Eigen::Index d = e.dim();
  CMatrix pi1 = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    if (es.eigenvalues()(i) >= 0.0)
      pi1 += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  CMatrix pi2 = CMatrix::Identity(d, d) - pi1;
  return Povm({HermMatrix(hermitian_part(pi1), 1e-9),
               HermMatrix(hermitian_part(pi2), 1e-9)});
}

CVector singlet() {
  CVector s = CVector::Zero(4);
  s(1) = 1.0 / std::sqrt(2.0);   // |01>
  s(2) = -1.0 / std::sqrt(2.0);  // |10>
  return s;
}

HermMatrix source_state(double eps) {
  check_eps(eps);
  const CVector psi = singlet();
  CMatrix rho =
      (1.0 - eps) * (psi * psi.adjoint()) + eps / 4.0 * CMatrix::Identity(4, 4);
  return HermMatrix(rho);
}

CVector psi_state(double eps) {
  NoiseParameters np(eps);
  const CVector s = singlet();
  auto amp = [&](int i, int j) { return s(2 * i + j); };

  CVector psi = CVector::Zero(16);
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b2 = 0; b2 < 2; ++b2)
      for (int b3 = 0; b3 < 2; ++b3)
        for (int b4 = 0; b4 < 2; ++b4) {
          const int idx = ((b1 * 2 + b2) * 2 + b3) * 2 + b4;
          psi(idx) = np.a * amp(b1, b2) * amp(b3, b4) +
                     np.b * amp(b1, b3) * amp(b2, b4);
        }
  return psi;
}

Ensemble tomographic_sextet(double eps) {
  NoiseParameters np(eps);
  const CMatrix id = CMatrix::Identity(4, 4);
  const CMatrix dot = sigma_dot_sigma();
  std::vector<HermMatrix> states;
  for (PauliAxis z : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z})
    for (double sign : {+1.0, -1.0}) {
      CMatrix rho =
          (id - sign * 0.5 * (eps + np.eps_bar) * sigma3(z) -
           sign * 0.5 * (eps - np.eps_bar) * sigma4(z) - (1.0 - eps) * dot) /
          24.0;
      states.emplace_back(rho);
    }
  return Ensemble(std::move(states), "tomographic-sextet");
}

Povm analytic_eve_povm() {
  const CMatrix id = CMatrix::Identity(4, 4);
  const CMatrix dot = sigma_dot_sigma();
  const double root3 = std::sqrt(3.0);
  std::vector<HermMatrix> members;
  for (PauliAxis z : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z})
    for (double sign : {+1.0, -1.0}) {
      CMatrix pi = (id - sign * 0.5 * root3 * (sigma3(z) - sigma4(z)) -
                    1.5 * sigma3(z) * sigma4(z) + 0.5 * dot) /
                   6.0;
      members.emplace_back(hermitian_part(pi), 1e-9);
    }
  return Povm(std::move(members));
}

double i_alice_bob(double eps) {
  check_eps(eps);
  return (xlog2x(eps) + xlog2x(2.0 - eps)) / 6.0;
}

double i_alice_eve(double eps, bool* separable_regime) {
  NoiseParameters np(eps);
  if (separable_regime) *separable_regime = eps >= 2.0 / 3.0;
  const double arg = 1.0 - std::sqrt(0.75) * np.eps_bar;
  return i_alice_bob(arg);
}

double critical_epsilon() { return 1.0 / (2.5 + std::sqrt(3.0)); }

Povm six_outcome_qubit_povm() {
  const CMatrix id = CMatrix::Identity(2, 2);
  std::vector<HermMatrix> members;
  for (PauliAxis z : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z})
    for (double sign : {+1.0, -1.0})
      members.emplace_back((id + sign * pauli_2x2(z)) / 6.0, 1e-9);
  return Povm(std::move(members));
}

}  // namespace accinfo::scenarios
