#include "lmgsim/propagator.hpp"

#include <cmath>
#include <string>

namespace lmg {

namespace {

// Flip columns so the largest-magnitude component (first on ties) is positive.
void fix_column_signs(Eigen::Ref<Eigen::MatrixXd> vectors) {
  for (Eigen::Index col = 0; col < vectors.cols(); ++col) {
    Eigen::Index pivot = 0;
    for (Eigen::Index row = 1; row < vectors.rows(); ++row) {
      if (std::abs(vectors(row, col)) > std::abs(vectors(pivot, col))) {
        pivot = row;
      }
    }
    if (vectors(pivot, col) < 0.0) vectors.col(col) = -vectors.col(col);
  }
}

}  // namespace

BlockEigensystem eigensystem(const HamiltonianBlock& block) {
  BlockEigensystem out;
  out.m_index = block.m_index;
  out.dim = block.dim;
  out.energies.setZero();
  out.vectors.setIdentity();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block.matrix());
  Eigen::MatrixXd vectors = solver.eigenvectors();  // ascending eigenvalues
  fix_column_signs(vectors);
  out.energies.head(block.dim) = solver.eigenvalues();
  out.vectors.topLeftCorner(block.dim, block.dim) = vectors;
  return out;
}

std::optional<Eigen::Matrix3d> analytic_vectors(
    const HamiltonianBlock& block, const Eigen::Vector3d& energies) {
  if (block.dim != 3) return std::nullopt;

  const double scale = block.entries.cwiseAbs().maxCoeff();
  const double gap_floor = 1e-8 * std::max(1.0, scale);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(energies[i] - energies[j]) < gap_floor) return std::nullopt;
    }
  }

  const double alpha = block.alpha();
  const double gamma = block.gamma();
  const double xi = block.xi();
  const double kappa = block.kappa();

  Eigen::Matrix3d vectors;
  for (int j = 0; j < 3; ++j) {
    const double e = energies[j];
    Eigen::Vector3d v(xi * (e - gamma), (e - alpha) * (e - gamma),
                      kappa * (e - alpha));
    const double norm = v.norm();
    if (norm < 1e-12 * std::max(1.0, scale * scale)) return std::nullopt;
    vectors.col(j) = v / norm;
  }
  fix_column_signs(vectors);
  return vectors;
}

BlockPropagator block_propagator(const BlockEigensystem& eig, double t) {
  if (!std::isfinite(t)) {
    throw invalid_parameter("propagator time must be finite, got " +
                            std::to_string(t));
  }

  BlockPropagator prop;
  prop.m_index = eig.m_index;
  prop.dim = eig.dim;
  prop.time = t;
  prop.entries.setIdentity();

  complexd phases[3];
  for (int j = 0; j < eig.dim; ++j) phases[j] = scalar_phase(eig.energies[j], t);

  // U_ik = sum_j V_ij V_kj e^{-i E_j t}; fill the upper triangle and mirror
  // so the matrix is bitwise symmetric.
  for (int i = 0; i < eig.dim; ++i) {
    for (int k = i; k < eig.dim; ++k) {
      complexd entry = 0.0;
      for (int j = 0; j < eig.dim; ++j) {
        entry += eig.vectors(i, j) * eig.vectors(k, j) * phases[j];
      }
      prop.entries(i, k) = entry;
      prop.entries(k, i) = entry;
    }
  }
  return prop;
}

complexd scalar_phase(double energy, double t) {
  return std::polar(1.0, -energy * t);
}

}  // namespace lmg
