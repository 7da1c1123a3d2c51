// Grover reflections on n-qudit registers.
//
// Both reflections are rank-1 updates of the amplitude vector:
//   oracle     P_w = 1 - 2|W><W|        (negate the marked amplitudes)
//   diffusion  P_psi = 2|psi><psi| - 1  (reflect about the reference state)
// One Grover iteration is the diffusion applied after the oracle.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "groverian/qudit.hpp"

namespace groverian {

PureState oracle_reflect(const PureState& state, std::size_t marked);
/// Negates every amplitude in `marked`; duplicate indices count once.
PureState oracle_reflect(const PureState& state, std::span<const std::size_t> marked);

PureState diffusion_reflect(const PureState& state, const PureState& reference);

PureState grover_iteration(const PureState& state, std::size_t marked, const PureState& reference);

double success_probability(const PureState& state, std::size_t marked);
double success_probability(const PureState& state, std::span<const std::size_t> marked);

/// round((pi / (2 asin(sqrt(r/N))) - 1) / 2), at least 1.
std::size_t optimal_iterations(std::size_t space_size, std::size_t marked_count = 1);

struct StepLabel {
  enum class Kind { init, oracle, diffusion };
  Kind kind = Kind::init;
  std::size_t iteration = 0;  // 1-based for oracle/diffusion, 0 for init

  /// "init", "oracle-<k>" or "diffusion-<k>".
  std::string text() const;
  friend bool operator==(const StepLabel&, const StepLabel&) = default;
};

struct GroverStep {
  StepLabel label;
  PureState state;
  double success = 0.0;
};

struct GroverTrace {
  std::size_t marked = 0;
  std::vector<GroverStep> steps;
};

/// Starts from the uniform superposition and records the state after every
/// reflection; the diffusion reference is always that starting state.
GroverTrace run_trajectory(std::size_t parties, std::size_t dim, std::size_t marked, std::size_t iterations);

}  // namespace groverian
