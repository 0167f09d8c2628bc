#ifndef ACCINFO_SCENARIOS_HPP
#define ACCINFO_SCENARIOS_HPP

#include "accinfo/ensemble.hpp"

namespace accinfo::scenarios {

/// Amplitudes of the four-qubit purification at noise level epsilon:
/// |2a+b|^2 = 4 - 3 eps, |b|^2 = eps, phases fixed so (2a+b) b* >= 0.
struct NoiseParameters {
  double epsilon;
  Complex a;
  Complex b;
  double eps_bar;  // sqrt(4 eps - 3 eps^2)

  explicit NoiseParameters(double eps);
};

/// The two rank-2 qutrit states of the ad-hoc example; traces 1/2 each.
Ensemble adhoc_ensemble();

/// Projectors onto the nonnegative / negative eigenspaces of rho_1 - rho_2.
/// Optimal for minimum-error discrimination of a two-state ensemble.
Povm helstrom_projectors(const Ensemble& e);

/// rho_A&B = (1-eps) |singlet><singlet| + eps/4 on two qubits.
HermMatrix source_state(double eps);

/// Four-qubit purification |Psi> = a |psi_12 psi_34> + b |psi_13 psi_24>;
/// qubits 1,2 are Alice's and Bob's, 3,4 Eve's ancilla.
CVector psi_state(double eps);

/// Eve's conditional ancilla sextet, ordered x+, x-, y+, y-, z+, z-.
Ensemble tomographic_sextet(double eps);

/// Eve's optimal six-element rank-1 POVM; independent of the noise level
/// (optimal for eps < 2/3).
Povm analytic_eve_povm();

/// Alice-Bob mutual information in bits,
/// (1/6) [eps log2 eps + (2-eps) log2(2-eps)].
double i_alice_bob(double eps);

/// Alice-Eve accessible information in bits: i_alice_bob evaluated at
/// 1 - sqrt(3/4) eps_bar. The underlying POVM is only optimal for
/// eps < 2/3; set *separable_regime when the caller needs the flag.
double i_alice_eve(double eps, bool* separable_regime = nullptr);

/// (5/2 + sqrt(3))^{-1}: the noise level where Eve's information catches
/// up with Bob's.
double critical_epsilon();

/// Singlet state vector of two qubits, (|01> - |10>)/sqrt(2).
CVector singlet();

/// Alice's (or Bob's) six-element tomographic POVM (1/6)(1 +- sigma_zeta)
/// on a single qubit, ordered x+, x-, y+, y-, z+, z-.
Povm six_outcome_qubit_povm();

}  // namespace accinfo::scenarios

#endif
