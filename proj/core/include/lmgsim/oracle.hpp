#pragma once

#include <Eigen/Dense>

#include "lmgsim/model.hpp"

namespace lmg::oracle {

// Brute-force validators for desk-scale problems. Everything here goes
// through dense linear algebra or exhaustive search on purpose: these
// routines are the ground truth the fast closed-form paths are tested
// against, so they share no code with them.

inline constexpr int kMaxDenseSpins = 64;

// Dense total Hamiltonian over {|N/2,M>} (x) {|uu>,|ud>,|du>,|dd>},
// index = (M + N/2) * 4 + qubit. Real symmetric. Refuses n_spins beyond the
// desk-scale cap.
Eigen::MatrixXd dense_hamiltonian(const ModelParams& params);

// Exact full-space evolution: eigendecomposes the dense Hamiltonian once and
// evolves |G><G| (x) rho_ab(0) to any t, then traces out the bath.
class DenseEvolver {
 public:
  explicit DenseEvolver(const ModelParams& params);

  XState evolve(const XState& initial, double t) const;
  Eigen::Matrix4cd evolve_full(const XState& initial, double t) const;

  const Eigen::MatrixXd& hamiltonian() const { return hamiltonian_; }
  const Eigen::VectorXd& energies() const { return energies_; }
  int ground_index() const { return ground_index_; }

 private:
  int n_spins_;
  int ground_index_;
  Eigen::MatrixXd hamiltonian_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vectors_;
};

// One-shot convenience around DenseEvolver.
XState dense_evolve(const ModelParams& params, const XState& initial, double t);

// Projective measurement direction on the Bloch sphere:
// |1> = cos(theta)|u> + e^{i phi} sin(theta)|d>.
struct MeasurementAngles {
  double theta = 0.0;  // [0, pi/2]
  double phi = 0.0;    // [0, 2 pi)
};

struct BruteForceResult {
  double discord = 0.0;
  double classical = 0.0;
  double mutual_info = 0.0;
  MeasurementAngles best;      // refined argmin of the conditional entropy
  double coarse_discord = 0.0; // value after the grid stage alone
};

// Measurement-sweep discord: scans a coarse_grid x coarse_grid lattice over
// (theta, phi), then shrinks a local grid around the best point for
// refine_iters rounds. Deterministic: ties keep the lexicographically first
// (theta, phi). Works on the assembled 4x4 matrix and makes no use of the
// X-state closed forms.
BruteForceResult discord_bruteforce(const XState& state, int coarse_grid = 64,
                                    int refine_iters = 30);

}  // namespace lmg::oracle
