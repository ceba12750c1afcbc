#include <doctest.h>

#include <cmath>
#include <random>

#include "lmgsim/oracle.hpp"
#include "lmgsim/reduced_dynamics.hpp"
#include "test_support.hpp"

using namespace lmg;
using lmg::testing::make_params;

namespace {

// Literal textbook assembly for the symmetric phase, valid only when the
// ground index satisfies I(lambda) <= N/2 - 2 so that all three blocks are
// 3x3. Used as an independent check of the generic channel assembly.
XState literal_symmetric(const ModelParams& p, double t) {
  const int mg = ground_state_index(p.lambda, p.n_spins);
  REQUIRE(mg <= p.n_spins / 2 - 2);
  const auto u = block_propagator(eigensystem(build_block(p, mg)), t).entries;
  const auto up =
      block_propagator(eigensystem(build_block(p, mg - 1)), t).entries;
  const auto upp =
      block_propagator(eigensystem(build_block(p, mg - 2)), t).entries;

  const double w = 0.25 * (1.0 + p.kz);
  const double w_mid = 0.25 * (1.0 + p.kx + p.ky - p.kz);
  const double w_singlet = 0.25 * (1.0 - p.kx - p.ky - p.kz);

  XState out;
  out.a = w * (std::norm(u(0, 0)) + std::norm(upp(0, 2))) +
          w_mid * std::norm(up(0, 1));
  out.b = 0.5 * w * (std::norm(u(0, 1)) + std::norm(upp(1, 2))) +
          0.5 * w_mid * std::norm(up(1, 1)) + 0.5 * w_singlet;
  out.c = w * (std::norm(u(0, 2)) + std::norm(upp(2, 2))) +
          w_mid * std::norm(up(1, 2));
  out.y = 0.5 * w * (std::norm(u(0, 1)) + std::norm(upp(1, 2))) +
          0.5 * w_mid * std::norm(up(1, 1)) - 0.5 * w_singlet;
  out.z = 0.25 * (p.kx - p.ky) * u(0, 0) * std::conj(upp(2, 2));
  return out;
}

// Literal assembly for the fully polarized ground state.
XState literal_broken(const ModelParams& p, double t) {
  const int half = p.n_spins / 2;
  const auto up =
      block_propagator(eigensystem(build_block(p, half - 1)), t).entries;
  const auto upp =
      block_propagator(eigensystem(build_block(p, half - 2)), t).entries;
  const complexd top_phase =
      scalar_phase(one_dim_energy(p, SingleLevel::TopAligned), t);

  const double w = 0.25 * (1.0 + p.kz);
  const double w_mid = 0.25 * (1.0 + p.kx + p.ky - p.kz);
  const double w_singlet = 0.25 * (1.0 - p.kx - p.ky - p.kz);

  XState out;
  out.a = w * (1.0 + std::norm(upp(0, 2))) + w_mid * std::norm(up(0, 1));
  out.b = 0.5 * w * std::norm(upp(1, 2)) + 0.5 * w_mid * std::norm(up(1, 1)) +
          0.5 * w_singlet;
  out.c = w * std::norm(upp(2, 2));
  out.y = 0.5 * w * std::norm(upp(1, 2)) + 0.5 * w_mid * std::norm(up(1, 1)) -
          0.5 * w_singlet;
  out.z = 0.25 * (p.kx - p.ky) * top_phase * std::conj(upp(2, 2));
  return out;
}

double max_gap(const XState& lhs, const XState& rhs) {
  return (lhs.assemble() - rhs.assemble()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("context construction") {
  const auto ctx = make_context(make_params(1.25, 2.0, 20, 1, -1, 1));
  CHECK(ctx.phase == Phase::Symmetric);
  CHECK(ctx.ground_index == 8);
  CHECK(ctx.channels[0].dim == 3);
  CHECK(ctx.channels[1].dim == 3);
  CHECK(ctx.channels[2].dim == 3);

  // Small N just above the transition: ground index reaches the ladder top.
  const auto edge = make_context(make_params(1.05, 1.0, 4, 1, -1, 1));
  CHECK(edge.phase == Phase::Symmetric);
  CHECK(edge.ground_index == 2);
  CHECK(edge.channels[0].dim == 1);
  CHECK(edge.channels[1].dim == 2);
  CHECK(edge.channels[2].dim == 3);

  const auto broken = make_context(make_params(0.75, 0.5, 12, 1, -1, 1));
  CHECK(broken.phase == Phase::SymmetryBroken);
  CHECK(broken.ground_index == 6);
  CHECK(broken.channels[0].dim == 1);
  CHECK(broken.channels[1].dim == 2);
  CHECK(broken.channels[2].dim == 3);
}

TEST_CASE("phase dispatch") {
  const auto symmetric = make_context(make_params(1.25, 1.0, 20, 1, -1, 1));
  const auto broken = make_context(make_params(0.75, 1.0, 20, 1, -1, 1));
  const auto critical = make_context(make_params(1.0, 1.0, 20, 1, -1, 1));

  CHECK_NOTHROW(reduced_state_symmetric(symmetric, 0.3));
  CHECK_THROWS_AS(reduced_state_symmetric(broken, 0.3), dispatch_error);
  CHECK_THROWS_AS(reduced_state_symmetric(critical, 0.3), dispatch_error);

  CHECK_NOTHROW(reduced_state_broken(broken, 0.3));
  CHECK_NOTHROW(reduced_state_broken(critical, 0.3));
  CHECK_THROWS_AS(reduced_state_broken(symmetric, 0.3), dispatch_error);

  // the critical point rides the broken branch and coincides at I(1) = N/2
  CHECK(critical.ground_index == 10);
  CHECK(max_gap(reduced_state(critical, 0.9),
                reduced_state_broken(critical, 0.9)) == 0.0);
}

TEST_CASE("t = 0 returns the initial state") {
  for (double lambda : {0.75, 1.25}) {
    for (auto [kx, ky, kz] : {std::array{1.0, -1.0, 1.0},
                              std::array{1.0, -0.2, 0.2},
                              std::array{0.3, 0.1, -0.4}}) {
      const auto ctx = make_context(make_params(lambda, 2.0, 20, kx, ky, kz));
      const XState start = reduced_state(ctx, 0.0);
      CHECK(max_gap(start, initial_xstate(kx, ky, kz)) < 1e-14);
    }
  }
}

TEST_CASE("decoupled qubits keep every population and |z|") {
  for (double lambda : {0.6, 1.7}) {
    const auto ctx = make_context(make_params(lambda, 0.0, 16, 1, -0.2, 0.2));
    const XState start = reduced_state(ctx, 0.0);
    for (double t : {0.3, 1.7, 4.0}) {
      const XState now = reduced_state(ctx, t);
      CHECK(now.a == doctest::Approx(start.a).epsilon(1e-13));
      CHECK(now.b == doctest::Approx(start.b).epsilon(1e-13));
      CHECK(now.c == doctest::Approx(start.c).epsilon(1e-13));
      CHECK(now.y == doctest::Approx(start.y).epsilon(1e-13));
      CHECK(std::abs(now.z) == doctest::Approx(std::abs(start.z)).epsilon(1e-13));
    }
  }
}

TEST_CASE("literal assemblies match the generic channels") {
  auto rng = lmg::testing::make_rng(41);
  std::uniform_real_distribution<double> times(0.0, 6.0);

  SUBCASE("symmetric phase, all blocks three-dimensional") {
    for (const auto& p : {make_params(1.25, 0.5, 20, 1, -1, 1),
                          make_params(2.0, 2.0, 12, 1, -0.2, 0.2),
                          make_params(3.1, 1.3, 30, 0.4, 0.2, -0.3)}) {
      const auto ctx = make_context(p);
      for (int i = 0; i < 10; ++i) {
        const double t = times(rng);
        CHECK(max_gap(reduced_state_symmetric(ctx, t), literal_symmetric(p, t)) <
              1e-12);
      }
    }
  }

  SUBCASE("broken phase") {
    for (const auto& p : {make_params(0.75, 0.5, 20, 1, -1, 1),
                          make_params(0.4, 3.0, 8, 1, -0.2, 0.2),
                          make_params(1.0, 1.0, 12, 0.4, 0.2, -0.3)}) {
      const auto ctx = make_context(p);
      for (int i = 0; i < 10; ++i) {
        const double t = times(rng);
        CHECK(max_gap(reduced_state(ctx, t), literal_broken(p, t)) < 1e-12);
      }
    }
  }
}

TEST_CASE("dense oracle spot checks") {
  const auto symmetric = make_params(1.25, 1.25, 20, 1, -1, 1);
  CHECK(max_gap(reduced_state(symmetric, 0.5),
                oracle::dense_evolve(symmetric, initial_xstate(1, -1, 1), 0.5)) <
        1e-8);

  const auto broken = make_params(0.75, 2.0, 20, 1, -1, 1);
  CHECK(max_gap(reduced_state(broken, 1.0),
                oracle::dense_evolve(broken, initial_xstate(1, -1, 1), 1.0)) <
        1e-8);

  // ground index at the ladder top inside the symmetric phase
  const auto edge = make_params(1.05, 1.5, 4, 1, -0.2, 0.2);
  const oracle::DenseEvolver evolver(edge);
  const auto ctx = make_context(edge);
  for (double t : {0.4, 1.1, 3.3}) {
    CHECK(max_gap(reduced_state(ctx, t),
                  evolver.evolve(initial_xstate(1, -0.2, 0.2), t)) < 1e-8);
  }
}

TEST_CASE("structural invariants along trajectories") {
  auto rng = lmg::testing::make_rng(43);
  std::uniform_real_distribution<double> times(0.0, 5.0);

  for (const auto& p : {make_params(0.75, 2.0, 20, 1, -1, 1),
                        make_params(1.25, 0.5, 20, 1, -0.2, 0.2),
                        make_params(1.25, 5.0, 8, 0.5, -0.5, 0.2),
                        make_params(0.5, 3.5, 500, 1, -1, 1)}) {
    const auto ctx = make_context(p);
    const XState start = reduced_state(ctx, 0.0);
    const double singlet_weight = start.b - start.y;
    for (int i = 0; i < 20; ++i) {
      const XState state = reduced_state(ctx, times(rng));

      CHECK(std::abs(state.trace() - 1.0) < 1e-10);
      for (double ev : state.eigenvalues()) CHECK(ev > -1e-10);
      CHECK(state.purity() > 0.25 - 1e-10);
      CHECK(state.purity() < 1.0 + 1e-10);
      // the singlet population never moves
      CHECK(std::abs((state.b - state.y) - singlet_weight) < 1e-10);
      // hermitian by construction, bitwise
      const Eigen::Matrix4cd rho = state.assemble();
      CHECK((rho.array() == rho.adjoint().array()).all());
    }
  }
}

TEST_CASE("rejects invalid parameters") {
  CHECK_THROWS_AS(make_context(make_params(0.0, 1.0, 8, 0, 0, 0)),
                  invalid_parameter);
  CHECK_THROWS_AS(make_context(make_params(1.0, 1.0, 5, 0, 0, 0)),
                  invalid_parameter);
  CHECK_THROWS_AS(make_context(make_params(1.0, 1.0, 8, 1, 1, 1)),
                  invalid_state);
}
