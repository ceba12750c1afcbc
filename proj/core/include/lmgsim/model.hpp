#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "lmgsim/errors.hpp"

namespace lmg {

using complexd = std::complex<double>;

// Phase of the isotropic collective-spin bath as a function of the intra-bath
// coupling lambda; the transition sits at lambda = 1.
enum class Phase { SymmetryBroken, Critical, Symmetric };

const char* phase_name(Phase phase);

// Full experiment definition: a bath of n_spins spin-1/2 sites with all-to-all
// XY coupling lambda, two non-interacting central qubits coupled to every bath
// spin with strength lambda_prime, and the correlation coefficients
// (kx, ky, kz) of the initial two-qubit X state
// rho_ab(0) = (I + kx XX + ky YY + kz ZZ) / 4. Units: hbar = 1, all energies
// and times dimensionless.
struct ModelParams {
  double lambda = 1.0;
  double lambda_prime = 0.0;
  int n_spins = 4;
  double kx = 0.0;
  double ky = 0.0;
  double kz = 0.0;

  // Throws invalid_parameter / invalid_state when any invariant fails:
  // lambda > 0, lambda_prime >= 0, n_spins even and >= 4, k coefficients in
  // [-1, 1] and the initial state positive semidefinite.
  void validate() const;
};

Phase classify_phase(double lambda);

// Round half away from zero. The single place the nearest-integer rule for
// the ground-state index lives.
long nearest_integer(double x);

// Magnetization index M of the bath ground state |N/2, M>: N/2 in the
// symmetry-broken phase (lambda <= 1), the nearest integer to N/(2 lambda)
// clamped to [-N/2, N/2] in the symmetric phase.
int ground_state_index(double lambda, int n_spins);

// One invariant-subspace block of the total Hamiltonian, spanned by
// {|N/2,M>|1,1>, |N/2,M+1>|1,0>, |N/2,M+2>|1,-1>}. The block is 3x3 for
// M <= N/2-2 and 2x2 for M = N/2-1 (the last basis state does not exist,
// kappa and gamma drop out). Only the top-left dim x dim corner of `entries`
// is meaningful.
struct HamiltonianBlock {
  int m_index = 0;
  int dim = 3;
  Eigen::Matrix3d entries = Eigen::Matrix3d::Zero();

  double alpha() const { return entries(0, 0); }
  double beta() const { return entries(1, 1); }
  double gamma() const { return entries(2, 2); }
  double xi() const { return entries(0, 1); }
  double kappa() const { return entries(1, 2); }

  Eigen::MatrixXd matrix() const { return entries.topLeftCorner(dim, dim); }
};

// Builds the block for -N/2 <= m_index <= N/2 - 1. Symmetric by construction.
HamiltonianBlock build_block(const ModelParams& params, int m_index);

// The two families of one-dimensional invariant subspaces: |N/2,N/2>|1,1>
// (top-aligned, energy -(N+2), independent of the couplings) and the singlet
// family |N/2,M>|0,0>, which decouples from the bath entirely.
enum class SingleLevel { TopAligned, Singlet };

double one_dim_energy(const ModelParams& params, SingleLevel which,
                      int m_index = 0);

// Two-qubit X-structure density matrix, stored as the blocks of
//   [[a, z], [z*, c]]  over {|uu>, |dd>}   (outer block)
//   [[b, y], [y, b]]   over {|ud>, |du>}   (inner block)
// with a, b, c, y real and z complex. Hermitian by construction.
struct XState {
  double a = 0.25;
  double b = 0.25;
  double c = 0.25;
  double y = 0.0;
  complexd z = 0.0;

  double trace() const { return a + 2.0 * b + c; }
  double purity() const;

  // Closed-form eigenvalues of the assembled 4x4 matrix, in the structural
  // order {outer+, outer-, b+y, b-y}.
  std::array<double, 4> eigenvalues() const;

  // Full 4x4 matrix in the basis {|uu>, |ud>, |du>, |dd>}.
  Eigen::Matrix4cd assemble() const;

  // Checks unit trace and positive semidefiniteness (within `tol` dust).
  void validate(double tol = 1e-10) const;
};

// Weights of the four Bell states in the X-structure initial state; all four
// must be nonnegative for a legal density matrix.
struct BellWeights {
  double psi_minus;  // (1 - kx - ky - kz) / 4, the singlet weight
  double phi_minus;  // (1 - kx + ky + kz) / 4
  double phi_plus;   // (1 + kx - ky + kz) / 4
  double psi_plus;   // (1 + kx + ky - kz) / 4
};

BellWeights bell_weights(double kx, double ky, double kz);

// rho_ab(0) = (I + kx XX + ky YY + kz ZZ) / 4 as an XState. Throws
// invalid_state naming the negative Bell weight when the coefficients do not
// describe a density matrix.
XState initial_xstate(double kx, double ky, double kz);

}  // namespace lmg
