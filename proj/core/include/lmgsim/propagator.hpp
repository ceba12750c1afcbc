#pragma once

#include <optional>

#include <Eigen/Dense>

#include "lmgsim/model.hpp"

namespace lmg {

// Spectral decomposition of one invariant-subspace block: ascending energies,
// orthonormal eigenvector columns. Sign convention: the largest-magnitude
// component of each column is positive, which makes the decomposition
// bit-reproducible. Only the top-left dim x dim corner is meaningful.
struct BlockEigensystem {
  int m_index = 0;
  int dim = 1;
  Eigen::Vector3d energies = Eigen::Vector3d::Zero();
  Eigen::Matrix3d vectors = Eigen::Matrix3d::Identity();

  Eigen::VectorXd energy_vector() const { return energies.head(dim); }
  Eigen::MatrixXd vector_matrix() const {
    return vectors.topLeftCorner(dim, dim);
  }
};

BlockEigensystem eigensystem(const HamiltonianBlock& block);

// Closed-form eigenvector route for 3x3 blocks, valid only for well-separated
// spectra with nonzero couplings; returns the sign-fixed column matrix or
// nullopt when the route degenerates. Kept as an independent cross-check of
// the solver path.
std::optional<Eigen::Matrix3d> analytic_vectors(const HamiltonianBlock& block,
                                                const Eigen::Vector3d& energies);

// exp(-i H_M t) restricted to one invariant subspace: a complex symmetric
// unitary, computed from the eigensystem so it is exact at any t.
struct BlockPropagator {
  int m_index = 0;
  int dim = 1;
  double time = 0.0;
  Eigen::Matrix3cd entries = Eigen::Matrix3cd::Identity();

  Eigen::MatrixXcd matrix() const { return entries.topLeftCorner(dim, dim); }
};

BlockPropagator block_propagator(const BlockEigensystem& eig, double t);

// e^{-i E t}, the evolution of a one-dimensional subspace.
complexd scalar_phase(double energy, double t);

}  // namespace lmg
