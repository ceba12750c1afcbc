#include "lmgsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lmg {

namespace {

void check_bath(double lambda, int n_spins) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw invalid_parameter("lambda must be positive and finite, got " +
                            std::to_string(lambda));
  }
  if (n_spins < 4 || n_spins % 2 != 0) {
    throw invalid_parameter("n_spins must be an even integer >= 4, got " +
                            std::to_string(n_spins));
  }
}

}  // namespace

const char* phase_name(Phase phase) {
  switch (phase) {
    case Phase::SymmetryBroken:
      return "symmetry-broken";
    case Phase::Critical:
      return "critical";
    case Phase::Symmetric:
      return "symmetric";
  }
  return "unknown";
}

void ModelParams::validate() const {
  check_bath(lambda, n_spins);
  if (lambda_prime < 0.0 || !std::isfinite(lambda_prime)) {
    throw invalid_parameter("lambda_prime must be >= 0 and finite, got " +
                            std::to_string(lambda_prime));
  }
  const double ks[3] = {kx, ky, kz};
  const char* names[3] = {"kx", "ky", "kz"};
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(ks[i]) || std::abs(ks[i]) > 1.0 + 1e-12) {
      throw invalid_parameter(std::string(names[i]) +
                              " must lie in [-1, 1], got " +
                              std::to_string(ks[i]));
    }
  }
  initial_xstate(kx, ky, kz);  // throws invalid_state when illegal
}

Phase classify_phase(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw invalid_parameter("lambda must be positive and finite, got " +
                            std::to_string(lambda));
  }
  if (lambda < 1.0) return Phase::SymmetryBroken;
  if (lambda > 1.0) return Phase::Symmetric;
  return Phase::Critical;
}

long nearest_integer(double x) {
  return std::lround(x);  // half-way cases away from zero
}

int ground_state_index(double lambda, int n_spins) {
  check_bath(lambda, n_spins);
  const int half = n_spins / 2;
  if (lambda <= 1.0) return half;
  const long idx = nearest_integer(n_spins / (2.0 * lambda));
  return static_cast<int>(std::clamp<long>(idx, -half, half));
}

HamiltonianBlock build_block(const ModelParams& params, int m_index) {
  check_bath(params.lambda, params.n_spins);
  const int half = params.n_spins / 2;
  if (m_index < -half || m_index > half - 1) {
    throw invalid_parameter("block index M must lie in [-N/2, N/2-1], got M=" +
                            std::to_string(m_index) +
                            " for N=" + std::to_string(params.n_spins));
  }

  const double n = params.n_spins;
  const double m = m_index;
  // Diagonal: collective-spin dispersion of |N/2, M+j> plus the qubit Zeeman
  // energy of the triplet component |1, 1-j>, which sums to -2(M+1) for all
  // three rows. Off-diagonal: one-excitation exchange with the bath ladder.
  const auto level = [&](double mb) {
    return -params.lambda / (2.0 * n) * (n * n - 4.0 * mb * mb);
  };
  const auto exchange = [&](double mb) {
    return -params.lambda_prime / n *
           std::sqrt(2.0 * n * (n + 2.0) - 8.0 * mb * (mb + 1.0));
  };

  HamiltonianBlock block;
  block.m_index = m_index;
  block.dim = (m_index == half - 1) ? 2 : 3;
  block.entries.setZero();
  block.entries(0, 0) = level(m) - 2.0 * (m + 1.0);
  block.entries(1, 1) = level(m + 1.0) - 2.0 * (m + 1.0);
  block.entries(0, 1) = block.entries(1, 0) = exchange(m);
  if (block.dim == 3) {
    block.entries(2, 2) = level(m + 2.0) - 2.0 * (m + 1.0);
    block.entries(1, 2) = block.entries(2, 1) = exchange(m + 1.0);
  }
  return block;
}

double one_dim_energy(const ModelParams& params, SingleLevel which,
                      int m_index) {
  check_bath(params.lambda, params.n_spins);
  const double n = params.n_spins;
  if (which == SingleLevel::TopAligned) return -(n + 2.0);

  const int half = params.n_spins / 2;
  if (m_index < -half || m_index > half) {
    throw invalid_parameter("singlet bath index M must lie in [-N/2, N/2], got M=" +
                            std::to_string(m_index));
  }
  // Bath dispersion of |N/2, M>; the singlet carries no Zeeman energy and is
  // annihilated by the coupling term.
  const double m = m_index;
  return 2.0 * params.lambda * m * m / n - params.lambda * n / 2.0 - 2.0 * m;
}

double XState::purity() const {
  return a * a + c * c + 2.0 * std::norm(z) + 2.0 * (b * b + y * y);
}

std::array<double, 4> XState::eigenvalues() const {
  const double mid = 0.5 * (a + c);
  const double split = std::hypot(0.5 * (a - c), std::abs(z));
  return {mid + split, mid - split, b + y, b - y};
}

Eigen::Matrix4cd XState::assemble() const {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = a;
  rho(1, 1) = b;
  rho(2, 2) = b;
  rho(3, 3) = c;
  rho(0, 3) = z;
  rho(3, 0) = std::conj(z);
  rho(1, 2) = y;
  rho(2, 1) = y;
  return rho;
}

void XState::validate(double tol) const {
  if (std::abs(trace() - 1.0) > tol) {
    throw invalid_state("X state trace " + std::to_string(trace()) +
                        " deviates from 1 beyond tolerance");
  }
  for (double ev : eigenvalues()) {
    if (ev < -tol) {
      throw invalid_state("X state has negative eigenvalue " +
                          std::to_string(ev));
    }
  }
}

BellWeights bell_weights(double kx, double ky, double kz) {
  return {0.25 * (1.0 - kx - ky - kz), 0.25 * (1.0 - kx + ky + kz),
          0.25 * (1.0 + kx - ky + kz), 0.25 * (1.0 + kx + ky - kz)};
}

XState initial_xstate(double kx, double ky, double kz) {
  const BellWeights w = bell_weights(kx, ky, kz);
  const struct {
    const char* name;
    double value;
  } checks[] = {{"|psi->", w.psi_minus},
                {"|phi->", w.phi_minus},
                {"|phi+>", w.phi_plus},
                {"|psi+>", w.psi_plus}};
  for (const auto& chk : checks) {
    if (chk.value < -1e-12) {
      throw invalid_state(
          "initial X state is not positive semidefinite: weight of " +
          std::string(chk.name) + " is " + std::to_string(chk.value));
    }
  }

  XState state;
  state.a = 0.25 * (1.0 + kz);
  state.c = 0.25 * (1.0 + kz);
  state.b = 0.25 * (1.0 - kz);
  state.y = 0.25 * (kx + ky);
  state.z = 0.25 * (kx - ky);
  return state;
}

}  // namespace lmg
