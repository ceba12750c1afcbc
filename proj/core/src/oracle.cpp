#include "lmgsim/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace lmg::oracle {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double clamped_entropy(const Eigen::VectorXd& eigenvalues) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    h -= xlog2x(std::max(eigenvalues[i], 0.0));
  }
  return h;
}

Eigen::Matrix2cd trace_out_second(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix2cd out;
  out(0, 0) = rho(0, 0) + rho(1, 1);
  out(0, 1) = rho(0, 2) + rho(1, 3);
  out(1, 0) = rho(2, 0) + rho(3, 1);
  out(1, 1) = rho(2, 2) + rho(3, 3);
  return out;
}

Eigen::Matrix2cd trace_out_first(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix2cd out;
  out(0, 0) = rho(0, 0) + rho(2, 2);
  out(0, 1) = rho(0, 1) + rho(2, 3);
  out(1, 0) = rho(1, 0) + rho(3, 2);
  out(1, 1) = rho(1, 1) + rho(3, 3);
  return out;
}

double entropy_2x2(const Eigen::Matrix2cd& rho) {
  const double mid = 0.5 * (rho(0, 0) + rho(1, 1)).real();
  const double split =
      std::hypot(0.5 * (rho(0, 0) - rho(1, 1)).real(), std::abs(rho(0, 1)));
  return -xlog2x(std::max(mid + split, 0.0)) -
         xlog2x(std::max(mid - split, 0.0));
}

}  // namespace

Eigen::MatrixXd dense_hamiltonian(const ModelParams& params) {
  params.validate();
  if (params.n_spins > kMaxDenseSpins) {
    throw invalid_parameter(
        "dense oracle is desk-scale only: n_spins must be <= " +
        std::to_string(kMaxDenseSpins) + ", got " +
        std::to_string(params.n_spins));
  }

  const int n = params.n_spins;
  const double j = 0.5 * n;
  const int n_bath = n + 1;
  const int dim = 4 * n_bath;
  const auto ladder = [j](double m) {
    return std::sqrt(j * (j + 1.0) - m * (m + 1.0));  // <m+1|S+|m>
  };

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  // Diagonal: bath dispersion plus the qubit Zeeman term.
  const double zeeman[4] = {-2.0, 0.0, 0.0, 2.0};
  for (int mb = 0; mb < n_bath; ++mb) {
    const double m = mb - j;
    const double bath =
        -params.lambda / n * (2.0 * (j * (j + 1.0) - m * m) - n) - 2.0 * m;
    for (int q = 0; q < 4; ++q) h(mb * 4 + q, mb * 4 + q) = bath + zeeman[q];
  }

  // Exchange: qubit raising paired with bath lowering, plus the transpose.
  // Nonzero <q'|S+|q> elements in the {uu, ud, du, dd} basis are all 1.
  constexpr std::array<std::array<int, 2>, 4> raising = {
      {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
  const double strength = -2.0 * params.lambda_prime / n;
  for (int mb = 1; mb < n_bath; ++mb) {
    const double amp = ladder(mb - 1 - j);  // <M-1|S-|M>
    for (const auto& [q_to, q_from] : raising) {
      const int row = (mb - 1) * 4 + q_to;
      const int col = mb * 4 + q_from;
      h(row, col) += strength * amp;
      h(col, row) += strength * amp;
    }
  }
  return h;
}

DenseEvolver::DenseEvolver(const ModelParams& params)
    : n_spins_(params.n_spins),
      ground_index_(ground_state_index(params.lambda, params.n_spins)),
      hamiltonian_(dense_hamiltonian(params)) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian_);
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

Eigen::Matrix4cd DenseEvolver::evolve_full(const XState& initial,
                                           double t) const {
  if (!std::isfinite(t)) {
    throw invalid_parameter("evolution time must be finite");
  }

  const int n_bath = n_spins_ + 1;
  const int dim = 4 * n_bath;
  const int ground_row = (ground_index_ + n_spins_ / 2) * 4;

  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) phases[i] = std::polar(1.0, -energies_[i] * t);

  // Evolved columns for the four initial product states |G>|q>.
  std::array<Eigen::VectorXcd, 4> evolved;
  for (int q = 0; q < 4; ++q) {
    const Eigen::VectorXcd w =
        phases.cwiseProduct(vectors_.row(ground_row + q).transpose().cast<complexd>());
    const Eigen::VectorXd re = vectors_ * w.real();
    const Eigen::VectorXd im = vectors_ * w.imag();
    evolved[q] = re.cast<complexd>() + complexd(0.0, 1.0) * im.cast<complexd>();
  }

  const Eigen::Matrix4cd x0 = initial.assemble();
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int q1 = 0; q1 < 4; ++q1) {
    for (int q2 = 0; q2 < 4; ++q2) {
      complexd acc = 0.0;
      for (int q = 0; q < 4; ++q) {
        for (int qp = 0; qp < 4; ++qp) {
          if (x0(q, qp) == 0.0) continue;
          complexd bath_dot = 0.0;
          for (int mb = 0; mb < n_bath; ++mb) {
            bath_dot += evolved[q][mb * 4 + q1] *
                        std::conj(evolved[qp][mb * 4 + q2]);
          }
          acc += x0(q, qp) * bath_dot;
        }
      }
      rho(q1, q2) = acc;
    }
  }
  return rho;
}

XState DenseEvolver::evolve(const XState& initial, double t) const {
  const Eigen::Matrix4cd rho = evolve_full(initial, t);

  constexpr double tol = 1e-9;
  double leak = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const bool on_x = (i == k) || (i + k == 3);
      if (!on_x) leak = std::max(leak, std::abs(rho(i, k)));
    }
    leak = std::max(leak, std::abs(rho(i, i).imag()));
  }
  leak = std::max(leak, std::abs(rho(1, 1) - rho(2, 2)));
  leak = std::max(leak, std::abs(rho(1, 2) - std::conj(rho(2, 1))));
  if (leak > tol) {
    throw invariant_violation(
        "dense evolution left the X-state family (leak " +
        std::to_string(leak) + ")");
  }

  XState out;
  out.a = rho(0, 0).real();
  out.b = 0.5 * (rho(1, 1) + rho(2, 2)).real();
  out.c = rho(3, 3).real();
  out.y = 0.5 * (rho(1, 2) + rho(2, 1)).real();
  out.z = rho(0, 3);
  return out;
}

XState dense_evolve(const ModelParams& params, const XState& initial,
                    double t) {
  return DenseEvolver(params).evolve(initial, t);
}

BruteForceResult discord_bruteforce(const XState& state, int coarse_grid,
                                    int refine_iters) {
  if (coarse_grid < 64) {
    throw invalid_parameter("coarse_grid must be >= 64, got " +
                            std::to_string(coarse_grid));
  }
  if (refine_iters < 0) {
    throw invalid_parameter("refine_iters must be >= 0");
  }

  const Eigen::Matrix4cd rho = state.assemble();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> joint(
      rho, Eigen::EigenvaluesOnly);
  const double s_joint = clamped_entropy(joint.eigenvalues());
  const double s_a = entropy_2x2(trace_out_second(rho));
  const double s_b = entropy_2x2(trace_out_first(rho));
  const double mutual = s_a + s_b - s_joint;

  // Average post-measurement entropy of qubit a for a projective measurement
  // of qubit b along (theta, phi).
  const auto conditional_entropy = [&rho](double theta, double phi) {
    const complexd up = std::cos(theta);
    const complexd down = std::polar(std::sin(theta), phi);
    const Eigen::Vector2cd directions[2] = {{up, down},
                                            {std::conj(down), -up}};
    double total = 0.0;
    for (const auto& dir : directions) {
      const Eigen::Matrix2cd proj = dir * dir.adjoint();
      Eigen::Matrix4cd measure = Eigen::Matrix4cd::Zero();
      measure.block<2, 2>(0, 0) = proj;
      measure.block<2, 2>(2, 2) = proj;
      const Eigen::Matrix4cd collapsed = measure * rho * measure;
      const double p = collapsed.trace().real();
      if (p < 1e-15) continue;
      total += p * entropy_2x2(trace_out_second(collapsed) / p);
    }
    return total;
  };

  double best_value = std::numeric_limits<double>::infinity();
  MeasurementAngles best;
  const auto consider = [&](double theta, double phi) {
    const double value = conditional_entropy(theta, phi);
    if (value < best_value) {
      best_value = value;
      best = {theta, phi};
    }
  };

  const double theta_span = 0.5 * std::numbers::pi;
  const double phi_span = 2.0 * std::numbers::pi;
  for (int i = 0; i < coarse_grid; ++i) {
    const double theta = theta_span * i / (coarse_grid - 1);
    for (int k = 0; k < coarse_grid; ++k) {
      consider(theta, phi_span * k / coarse_grid);
    }
  }
  const double coarse_discord = s_b - s_joint + best_value;

  // Local grid shrink around the best point; inverse-golden step per round.
  double h_theta = theta_span / (coarse_grid - 1);
  double h_phi = phi_span / coarse_grid;
  constexpr double shrink = 0.6180339887498949;
  for (int round = 0; round < refine_iters; ++round) {
    const MeasurementAngles center = best;
    for (int a = -3; a <= 3; ++a) {
      const double theta =
          std::clamp(center.theta + a * h_theta / 3.0, 0.0, theta_span);
      for (int b = -3; b <= 3; ++b) {
        double phi = std::fmod(center.phi + b * h_phi / 3.0, phi_span);
        if (phi < 0.0) phi += phi_span;
        consider(theta, phi);
      }
    }
    h_theta *= shrink;
    h_phi *= shrink;
  }

  BruteForceResult result;
  result.discord = s_b - s_joint + best_value;
  result.classical = s_a - best_value;
  result.mutual_info = mutual;
  result.best = best;
  result.coarse_discord = coarse_discord;
  return result;
}

}  // namespace lmg::oracle
