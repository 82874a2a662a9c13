#include "enttopo/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace enttopo::oracle {

namespace {

constexpr double kHermitianTol = 1e-9;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  return x;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  return z;
}

/// Trace out the two middle qubits of a 4-qubit state (order A, B, B', C),
/// leaving the 2-qubit state of A and C.
Eigen::Matrix4cd trace_out_middle(const Eigen::MatrixXcd& rho4q) {
  auto idx = [](int a, int b, int bp, int c) {
    return ((a * 2 + b) * 2 + bp) * 2 + c;
  };
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) {
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int c2 = 0; c2 < 2; ++c2) {
          std::complex<double> sum = 0.0;
          for (int b = 0; b < 2; ++b) {
            for (int bp = 0; bp < 2; ++bp) {
              sum += rho4q(idx(a, b, bp, c), idx(a2, b, bp, c2));
            }
          }
          out(a * 2 + c, a2 * 2 + c2) = sum;
        }
      }
    }
  }
  return out;
}

/// Correction applied to the kept qubit so every measurement outcome steers
/// the surviving pair back onto the psi+/phi+ axis.
Eigen::Matrix2cd correction_for(Bell outcome) {
  switch (outcome) {
    case Bell::PsiPlus:
      return Eigen::Matrix2cd::Identity();
    case Bell::PsiMinus:
      return pauli_z();
    case Bell::PhiPlus:
      return pauli_x();
    case Bell::PhiMinus:
      return pauli_z() * pauli_x();
  }
  throw std::invalid_argument("unknown Bell outcome");
}

struct SwapOutcome {
  double probability = 0.0;
  Eigen::Matrix4cd corrected;  // probability-weighted, not normalised
};

std::array<SwapOutcome, 4> swap_outcomes(const DensityMatrix& pair_ab,
                                         const DensityMatrix& pair_bc) {
  if (pair_ab.dimension() != 4 || pair_bc.dimension() != 4) {
    throw std::invalid_argument("entanglement swapping joins 2-qubit pairs");
  }
  const Eigen::MatrixXcd joint = kron(pair_ab.matrix(), pair_bc.matrix());
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();

  constexpr Bell kOutcomes[] = {Bell::PsiPlus, Bell::PsiMinus, Bell::PhiPlus,
                                Bell::PhiMinus};
  std::array<SwapOutcome, 4> results;
  for (std::size_t k = 0; k < 4; ++k) {
    const Eigen::Vector4cd bell = bell_vector(kOutcomes[k]);
    const Eigen::Matrix4cd proj = bell * bell.adjoint();
    const Eigen::MatrixXcd projector = kron(kron(id2, proj), id2);
    const Eigen::MatrixXcd measured = projector * joint * projector.adjoint();

    const Eigen::Matrix4cd reduced = trace_out_middle(measured);
    const Eigen::Matrix4cd fix = kron(id2, correction_for(kOutcomes[k]));
    results[k].probability = reduced.trace().real();
    results[k].corrected = fix * reduced * fix.adjoint();
  }
  return results;
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : mat_(std::move(matrix)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 2) {
    throw std::invalid_argument("density matrix must be square");
  }
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  if (std::abs(mat_.trace() - std::complex<double>(1.0)) > kHermitianTol) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
}

Eigen::Vector4cd bell_vector(Bell which) {
  const double r = std::sqrt(0.5);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (which) {
    case Bell::PsiPlus:
      v(1) = r;
      v(2) = r;
      break;
    case Bell::PsiMinus:
      v(1) = r;
      v(2) = -r;
      break;
    case Bell::PhiPlus:
      v(0) = r;
      v(3) = r;
      break;
    case Bell::PhiMinus:
      v(0) = r;
      v(3) = -r;
      break;
  }
  return v;
}

DensityMatrix bell_diagonal_density(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("fidelity must lie in [0, 1]");
  }
  const Eigen::Vector4cd psi = bell_vector(Bell::PsiPlus);
  const Eigen::Vector4cd phi = bell_vector(Bell::PhiPlus);
  Eigen::MatrixXcd rho = lambda * (psi * psi.adjoint()) +
                         (1.0 - lambda) * (phi * phi.adjoint());
  return DensityMatrix(std::move(rho));
}

DensityMatrix apply_bitflip(const DensityMatrix& rho, double distance) {
  if (rho.dimension() != 4) {
    throw std::invalid_argument("bit-flip channel acts on a 2-qubit state");
  }
  if (!(distance >= 0.0) || !std::isfinite(distance)) {
    throw std::invalid_argument("channel distance must be finite and >= 0");
  }
  const double q = 0.5 * (1.0 + std::exp(-distance));
  const Eigen::Matrix4cd flip =
      kron(Eigen::Matrix2cd::Identity(), pauli_x());
  Eigen::MatrixXcd out =
      q * rho.matrix() + (1.0 - q) * flip * rho.matrix() * flip.adjoint();
  return DensityMatrix(std::move(out));
}

DensityMatrix swap_pairs(const DensityMatrix& pair_ab,
                         const DensityMatrix& pair_bc) {
  const auto outcomes = swap_outcomes(pair_ab, pair_bc);
  Eigen::MatrixXcd mix = Eigen::Matrix4cd::Zero();
  for (const auto& outcome : outcomes) mix += outcome.corrected;
  return DensityMatrix(std::move(mix));
}

std::array<double, 4> swap_outcome_fidelities(const DensityMatrix& pair_ab,
                                              const DensityMatrix& pair_bc) {
  const auto outcomes = swap_outcomes(pair_ab, pair_bc);
  const Eigen::Vector4cd psi = bell_vector(Bell::PsiPlus);
  std::array<double, 4> fidelities{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (outcomes[k].probability <= 0.0) {
      throw std::domain_error("measurement outcome has zero probability");
    }
    const std::complex<double> overlap =
        (psi.adjoint() * outcomes[k].corrected * psi)(0, 0);
    fidelities[k] = overlap.real() / outcomes[k].probability;
  }
  return fidelities;
}

double bell_overlap(const DensityMatrix& rho, Bell which) {
  if (rho.dimension() != 4) {
    throw std::invalid_argument("Bell overlap needs a 2-qubit state");
  }
  const Eigen::Vector4cd v = bell_vector(which);
  return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()(i);
    if (p > 1e-15) entropy -= p * std::log2(p);
  }
  return entropy;
}

}  // namespace enttopo::oracle
