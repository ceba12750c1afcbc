#include "lmgsim/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lmg {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// -p log2(p/(p+q)) - q log2(q/(p+q)): the entropy contribution of one
// post-measurement pair, shared by D1 and the additive identity.
double pair_entropy(double p, double q) {
  return xlog2x(p + q) - xlog2x(p) - xlog2x(q);
}

double clamp_dust(double v, double tol = 1e-9) {
  return (v < 0.0 && v > -tol) ? 0.0 : v;
}

}  // namespace

double entropy(std::span<const double> probabilities) {
  double sum = 0.0;
  double h = 0.0;
  for (double p : probabilities) {
    if (p < -1e-12) {
      throw invalid_state("probability " + std::to_string(p) +
                          " is negative beyond roundoff");
    }
    sum += p;
    h -= xlog2x(p);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw invalid_state("probabilities sum to " + std::to_string(sum) +
                        ", not 1");
  }
  return h;
}

DiscordResult discord_xstate(const XState& state) {
  auto eigs = state.eigenvalues();
  for (double& ev : eigs) ev = std::max(ev, 0.0);
  const double s_joint = entropy(eigs);

  const std::array<double, 2> marginal = {state.a + state.b,
                                          state.b + state.c};
  const double s_marginal = entropy(marginal);  // equal for both qubits

  const double mutual = clamp_dust(2.0 * s_marginal - s_joint);

  const double d1 = s_marginal - s_joint + pair_entropy(state.a, state.b) +
                    pair_entropy(state.b, state.c);

  const double theta =
      std::min(1.0, std::hypot(state.a - state.c,
                               2.0 * (std::abs(state.y) + std::abs(state.z))));
  const double d2 = s_marginal - s_joint +
                    pair_entropy(0.5 * (1.0 - theta), 0.5 * (1.0 + theta));

  DiscordResult result;
  result.d1 = d1;
  result.d2 = d2;
  result.mutual_info = mutual;
  result.discord = clamp_dust(std::min(d1, d2));
  result.classical = clamp_dust(mutual - result.discord);
  return result;
}

double concurrence(const XState& state) {
  const double geometric = std::sqrt(std::max(state.a * state.c, 0.0));
  const double zeta =
      2.0 * std::max({0.0, state.y - geometric, std::abs(state.z) - state.b});
  return std::clamp(zeta, 0.0, 1.0);
}

double eof_from_concurrence(double zeta) {
  if (zeta < -1e-12 || zeta > 1.0 + 1e-12) {
    throw invalid_parameter("concurrence must lie in [0, 1], got " +
                            std::to_string(zeta));
  }
  zeta = std::clamp(zeta, 0.0, 1.0);
  const double lam = 0.5 * (1.0 + std::sqrt(1.0 - zeta * zeta));
  return -xlog2x(lam) - xlog2x(1.0 - lam);
}

CorrelationRecord evaluate(const XState& state, double t) {
  const DiscordResult discord = discord_xstate(state);
  const double zeta = concurrence(state);

  CorrelationRecord record;
  record.time = t;
  record.discord = discord.discord;
  record.classical = discord.classical;
  record.mutual_info = discord.mutual_info;
  record.concurrence = zeta;
  record.eof = eof_from_concurrence(zeta);
  record.purity = state.purity();
  return record;
}

}  // namespace lmg
