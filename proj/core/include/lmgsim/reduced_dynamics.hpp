#pragma once

#include <array>

#include "lmgsim/model.hpp"
#include "lmgsim/propagator.hpp"

namespace lmg {

// Immutable per-run evolution data. Channel i (i = 0, 1, 2) holds the
// eigensystem of the invariant subspace containing |N/2, M_G> (x) |1, 1-i>,
// i.e. the blocks M_G, M_G-1, M_G-2; within block M_G - i the initial state
// is basis column i. Channel dimensions follow the subspace rules: 3 for
// M <= N/2-2, 2 for M = N/2-1, 1 for M = N/2. The singlet channel never
// mixes, so only its (constant) weight enters the reduced state.
struct EvolutionContext {
  ModelParams params;
  Phase phase = Phase::SymmetryBroken;
  int ground_index = 0;
  std::array<BlockEigensystem, 3> channels;
  XState initial;
};

EvolutionContext make_context(const ModelParams& params);

// Reduced two-qubit state at time t with the bath in the symmetric-phase
// ground state |N/2, I(lambda)>. Throws dispatch_error for other phases.
XState reduced_state_symmetric(const EvolutionContext& ctx, double t);

// Reduced state with the fully polarized ground state |N/2, N/2>; serves the
// symmetry-broken phase and, by convention, the critical point lambda = 1.
XState reduced_state_broken(const EvolutionContext& ctx, double t);

// Phase dispatch over the two branches above.
XState reduced_state(const EvolutionContext& ctx, double t);
XState reduced_state(const ModelParams& params, double t);

}  // namespace lmg
