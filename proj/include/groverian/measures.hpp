// Groverian entanglement G = sqrt(1 - P_max), where P_max is the largest
// squared overlap of a state with any product state, computed three ways:
//
//   svd_oracle   - bipartite only: P_max is the largest squared singular
//                  value of the coefficient matrix. Ground truth.
//   variational  - any register: alternating maximization over the
//                  per-party unit vectors, best over seeded restarts.
//   closed_form  - two qutrits with real amplitudes: a fixed algebraic
//                  expression in the a_ij. Kept for reproduction and audit;
//                  it overshoots the true maximum on some inputs.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "groverian/qudit.hpp"

namespace groverian {

enum class Method { closed_form, variational, svd_oracle };

std::string_view method_name(Method method);

struct VariationalDiagnostics {
  bool converged = false;
  std::size_t sweeps = 0;        // sweeps used by the winning restart
  std::size_t best_restart = 0;
  // Squared overlap after each sweep of the winning restart; non-decreasing.
  std::vector<double> history;
};

struct MeasureResult {
  double pmax = 0.0;
  double g = 0.0;
  Method method = Method::svd_oracle;
  std::optional<ProductVector> witness;
  std::optional<VariationalDiagnostics> diagnostics;
};

/// sqrt(1 - pmax). Inputs within `tol.probability_slack` of [0, 1] are
/// clamped; anything further out throws std::domain_error.
double groverian_from_pmax(double pmax, const Tolerances& tol = kDefaultTolerances);

MeasureResult pmax_svd_oracle(const PureState& state, const Tolerances& tol = kDefaultTolerances);

struct VariationalOptions {
  std::size_t restarts = 32;
  std::size_t max_iter = 500;
  double tol = 1e-12;
  std::uint64_t seed = 0;
};

/// Each sweep replaces every party's vector, in order, by the normalized
/// contraction of the state with the conjugates of all other parties'
/// vectors; that choice maximizes the overlap with the others held fixed, so
/// the recorded overlap never decreases. A restart stops when a sweep gains
/// less than `options.tol` or after `options.max_iter` sweeps. Restart r
/// draws its starting vectors from a stream seeded by (seed, r).
MeasureResult pmax_variational(const PureState& state, const VariationalOptions& options = {});

bool closed_form_eligible(const PureState& state, const Tolerances& tol = kDefaultTolerances);

/// The two-qutrit real-amplitude closed form. With
///   S- = |(a11 - a22, a21 + a12)|, S+ = |(a11 + a22, a21 - a12)|,
///   R1 = |(a13, a23)|, R2 = |(a31, a32)|, h = (S- + S+) / 2,
/// returns 1/4 [ |(a33 - h, R1 + R2)| + |(a33 + h, R1 - R2)| ]^2.
/// Throws IneligibleInput unless d = 3 and every entry is real.
double pmax_closed_form_real(const CoeffMatrix& m, const Tolerances& tol = kDefaultTolerances);

MeasureResult measure_closed_form(const PureState& state, const Tolerances& tol = kDefaultTolerances);

/// -sum lambda log_d lambda over the spectrum of the first party's reduced
/// state (log base 3 for qutrits), so a maximally entangled pair scores 1.
double entropy_of_entanglement(const PureState& state, const Tolerances& tol = kDefaultTolerances);

/// Converts each part of a d = 3 witness to angle form.
std::vector<QutritAngles> witness_angles(const ProductVector& witness,
                                         const Tolerances& tol = kDefaultTolerances);

}  // namespace groverian
