#pragma once

#include <Eigen/Dense>

#include <array>

namespace enttopo::oracle {

/// Dense density matrix over 1-3 qubits. Construction checks Hermiticity
/// and unit trace; positivity is the caller's responsibility (operations in
/// this module preserve it).
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd matrix);

  Eigen::Index dimension() const { return mat_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return mat_; }

 private:
  Eigen::MatrixXcd mat_;
};

enum class Bell { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

/// Two-qubit Bell state as a normalised column vector in the computational
/// basis |00>, |01>, |10>, |11>. Psi states flip the second qubit relative
/// to the first; Phi states align the two.
Eigen::Vector4cd bell_vector(Bell which);

/// lambda |psi+><psi+| + (1 - lambda) |phi+><phi+|.
DensityMatrix bell_diagonal_density(double lambda);

/// Exact channel action on the second qubit of a two-qubit state: with
/// probability (1 + e^-d)/2 nothing happens, otherwise the qubit is
/// bit-flipped.
DensityMatrix apply_bitflip(const DensityMatrix& rho, double distance);

/// Entanglement swapping at a relay holding one qubit of each input pair:
/// projects the relay's two qubits onto a Bell state, applies the
/// outcome's correction on the kept qubit, and returns the state of the two
/// end qubits. Outcomes are averaged (they coincide for rank-2 inputs).
DensityMatrix swap_pairs(const DensityMatrix& pair_ab,
                         const DensityMatrix& pair_bc);

/// Per-outcome fidelities with psi+ of the post-swap end-to-end pair, in
/// the order psi+, psi-, phi+, phi-. Used to confirm the outcomes agree.
std::array<double, 4> swap_outcome_fidelities(const DensityMatrix& pair_ab,
                                              const DensityMatrix& pair_bc);

/// <psi|rho|psi> for the chosen Bell state.
double bell_overlap(const DensityMatrix& rho, Bell which);

/// Von Neumann entropy in bits, via eigendecomposition.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace enttopo::oracle
