#pragma once

#include <span>

#include "lmgsim/model.hpp"

namespace lmg {

// One evaluated time point. All entropic quantities are in bits.
struct CorrelationRecord {
  double time = 0.0;
  double discord = 0.0;
  double classical = 0.0;
  double mutual_info = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  double purity = 0.0;
};

// Shannon entropy -sum p log2 p with 0 log 0 = 0. Entries in [-1e-12, 0) are
// treated as roundoff and clamped; anything more negative, or a total that
// misses 1 by more than 1e-9, throws invalid_state.
double entropy(std::span<const double> probabilities);

struct DiscordResult {
  double discord = 0.0;
  double classical = 0.0;
  double mutual_info = 0.0;
  double d1 = 0.0;  // conditional-entropy candidate for the z measurement
  double d2 = 0.0;  // candidate for the equatorial measurement
};

// Closed-form quantum discord of an X state: min{D1, D2} over the two
// candidate one-qubit measurements, with classical = mutual_info - discord.
// Relies on the equal marginals of this X-state family.
DiscordResult discord_xstate(const XState& state);

// Wootters concurrence, 2 max{0, y - sqrt(ac), |z| - b}, clamped to [0, 1].
double concurrence(const XState& state);

// Entanglement of formation as the binary entropy of (1 + sqrt(1-zeta^2))/2.
double eof_from_concurrence(double zeta);

// Bundles every measure for one state at one time.
CorrelationRecord evaluate(const XState& state, double t);

}  // namespace lmg
