#pragma once

namespace groverian {

/// Numerical thresholds shared by every public operation.
///
/// Operations that depend on a threshold take a `const Tolerances&` whose
/// default is `kDefaultTolerances`; tests pass a modified copy to probe the
/// boundaries.
struct Tolerances {
  // |norm^2 - 1| allowed on any state or product vector handed back to callers.
  double normalization = 1e-12;
  // make_state in strict mode rejects inputs further than this from unit norm.
  double strict_input = 1e-9;
  // Anything below this norm is treated as the zero vector.
  double min_norm = 1e-14;
  double hermitian = 1e-9;
  double unitary = 1e-10;
  double density_trace = 1e-12;
  double jacobi_off_diagonal = 1e-14;
  int jacobi_max_sweeps = 100;
  // sin(theta) below this makes gamma, chi, chi' unidentifiable.
  double degenerate_angle = 1e-12;
  // Imaginary parts up to this size still count as a real amplitude.
  double real_amplitude = 1e-12;
  // Slack on the [0, 1] domain of the success probability.
  double probability_slack = 1e-12;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace groverian
