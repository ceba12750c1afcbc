#include "lmgsim/reduced_dynamics.hpp"

#include <cmath>
#include <string>

namespace lmg {

namespace {

BlockEigensystem channel_eigensystem(const ModelParams& params, int block_m) {
  const int half = params.n_spins / 2;
  if (block_m == half) {
    // Top of the ladder: |N/2,N/2>|1,1> alone, a pure phase.
    BlockEigensystem eig;
    eig.m_index = block_m;
    eig.dim = 1;
    eig.energies.setZero();
    eig.vectors.setIdentity();
    eig.energies[0] = one_dim_energy(params, SingleLevel::TopAligned);
    return eig;
  }
  return eigensystem(build_block(params, block_m));
}

// Traces the bath out of the evolved total state. Each triplet component of
// the initial X state evolves inside its own invariant subspace; the bath
// trace keeps the per-component populations plus the single surviving
// coherence between the |1,1> and |1,-1> channels (the only pair that ever
// shares a bath state). The singlet weight rides along unchanged.
XState assemble_reduced(const EvolutionContext& ctx, double t) {
  const XState& x0 = ctx.initial;
  const double weight[3] = {x0.a, x0.b + x0.y, x0.c};
  const double singlet_weight = x0.b - x0.y;

  Eigen::Vector3cd amplitude[3];
  for (int ch = 0; ch < 3; ++ch) {
    const BlockEigensystem& eig = ctx.channels[ch];
    const BlockPropagator prop = block_propagator(eig, t);
    amplitude[ch].setZero();
    amplitude[ch].head(eig.dim) = prop.matrix().col(ch);
  }

  double population[3];
  for (int i = 0; i < 3; ++i) {
    population[i] = 0.0;
    for (int ch = 0; ch < 3; ++ch) {
      population[i] += weight[ch] * std::norm(amplitude[ch][i]);
    }
  }

  XState out;
  out.a = population[0];
  out.c = population[2];
  out.b = 0.5 * (population[1] + singlet_weight);
  out.y = 0.5 * (population[1] - singlet_weight);
  out.z = x0.z * amplitude[0][0] * std::conj(amplitude[2][2]);
  return out;
}

}  // namespace

EvolutionContext make_context(const ModelParams& params) {
  params.validate();

  EvolutionContext ctx;
  ctx.params = params;
  ctx.phase = classify_phase(params.lambda);
  ctx.ground_index = ground_state_index(params.lambda, params.n_spins);
  for (int ch = 0; ch < 3; ++ch) {
    ctx.channels[ch] = channel_eigensystem(params, ctx.ground_index - ch);
  }
  ctx.initial = initial_xstate(params.kx, params.ky, params.kz);
  return ctx;
}

XState reduced_state_symmetric(const EvolutionContext& ctx, double t) {
  if (ctx.phase != Phase::Symmetric) {
    throw dispatch_error(
        std::string("symmetric-phase reduced state requested for a ") +
        phase_name(ctx.phase) + " bath");
  }
  return assemble_reduced(ctx, t);
}

XState reduced_state_broken(const EvolutionContext& ctx, double t) {
  if (ctx.phase == Phase::Symmetric) {
    throw dispatch_error(
        "symmetry-broken reduced state requested for a symmetric bath");
  }
  return assemble_reduced(ctx, t);
}

XState reduced_state(const EvolutionContext& ctx, double t) {
  return ctx.phase == Phase::Symmetric ? reduced_state_symmetric(ctx, t)
                                       : reduced_state_broken(ctx, t);
}

XState reduced_state(const ModelParams& params, double t) {
  return reduced_state(make_context(params), t);
}

}  // namespace lmg
