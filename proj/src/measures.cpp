#include "groverian/measures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "groverian/linalg.hpp"

namespace groverian {

namespace {

using Parts = std::vector<std::vector<Cx>>;

double vector_norm(std::span<const Cx> v) {
  double acc = 0.0;
  for (const Cx& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

std::mt19937_64 restart_stream(std::uint64_t seed, std::uint64_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
  return std::mt19937_64(seq);
}

Parts random_parts(std::size_t parties, std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Parts parts(parties, std::vector<Cx>(dim));
  for (auto& part : parts) {
    double norm = 0.0;
    while (norm < 1e-8) {
      for (Cx& x : part) {
        const double re = normal(rng);
        const double im = normal(rng);
        x = Cx{re, im};
      }
      norm = vector_norm(part);
    }
    for (Cx& x : part) x /= norm;
  }
  return parts;
}

// Contraction of the state with conj(parts[q]) for every q != party; the
// result is indexed by the digit of `party`.
std::vector<Cx> contract_except(const PureState& state, const Parts& parts, std::size_t party) {
  const std::size_t d = state.local_dim();
  const std::size_t n = state.parties();
  std::vector<Cx> out(d);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    Cx weight = state[flat];
    for (std::size_t q = 0; q < n; ++q)
      if (q != party) weight *= std::conj(parts[q][digits[q]]);
    out[digits[party]] += weight;
    for (std::size_t q = n; q-- > 0;) {
      if (++digits[q] < d) break;
      digits[q] = 0;
    }
  }
  return out;
}

struct RestartOutcome {
  Parts parts;
  double value = 0.0;
  bool converged = false;
  std::vector<double> history;
};

RestartOutcome climb(const PureState& state, Parts parts, const VariationalOptions& options) {
  RestartOutcome out;
  double previous = -1.0;
  for (std::size_t sweep = 0; sweep < options.max_iter; ++sweep) {
    double value = previous;
    for (std::size_t p = 0; p < state.parties(); ++p) {
      std::vector<Cx> c = contract_except(state, parts, p);
      const double norm = vector_norm(c);
      // A vanishing contraction leaves every choice of this part equally good.
      if (norm > 0.0) {
        for (Cx& x : c) x /= norm;
        parts[p] = std::move(c);
      }
      value = norm * norm;
    }
    out.history.push_back(value);
    if (value - previous < options.tol) {
      out.converged = true;
      break;
    }
    previous = value;
  }
  out.value = out.history.empty() ? 0.0 : out.history.back();
  out.parts = std::move(parts);
  return out;
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::closed_form:
      return "closed-form";
    case Method::variational:
      return "variational";
    case Method::svd_oracle:
      return "oracle";
  }
  return "unknown";
}

double groverian_from_pmax(double pmax, const Tolerances& tol) {
  if (!(pmax >= -tol.probability_slack && pmax <= 1.0 + tol.probability_slack))
    throw std::domain_error("success probability outside [0, 1]");
  return std::sqrt(1.0 - std::clamp(pmax, 0.0, 1.0));
}

MeasureResult pmax_svd_oracle(const PureState& state, const Tolerances& tol) {
  const CoeffMatrix coeffs = coeff_matrix(state);
  const SquareMatrix& a = coeffs.entries();
  const std::size_t d = a.dim();
  const HermitianEigen eig = hermitian_eigen(a * a.adjoint(), tol);
  const double pmax = std::clamp(eig.values.front(), 0.0, 1.0);

  // Left factor: top eigenvector u of A A^dagger. Right factor: the overlap
  // is u^dagger A conj(e2), maximized by conj(e2) proportional to A^dagger u.
  std::vector<Cx> left(d);
  std::vector<Cx> right(d);
  for (std::size_t i = 0; i < d; ++i) left[i] = eig.vectors(i, 0);
  for (std::size_t j = 0; j < d; ++j) {
    Cx acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) acc += a(i, j) * std::conj(left[i]);
    right[j] = acc;
  }
  MeasureResult result;
  result.pmax = pmax;
  result.g = groverian_from_pmax(pmax, tol);
  result.method = Method::svd_oracle;
  result.witness = ProductVector::normalized({std::move(left), std::move(right)}, tol);
  return result;
}

MeasureResult pmax_variational(const PureState& state, const VariationalOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("pmax_variational needs at least one restart");
  if (options.max_iter < 1) throw std::invalid_argument("pmax_variational needs max_iter >= 1");

  std::optional<RestartOutcome> best;
  std::size_t best_restart = 0;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    auto rng = restart_stream(options.seed, r);
    RestartOutcome outcome = climb(state, random_parts(state.parties(), state.local_dim(), rng), options);
    if (!best || outcome.value > best->value) {
      best = std::move(outcome);
      best_restart = r;
    }
  }

  MeasureResult result;
  result.pmax = std::clamp(best->value, 0.0, 1.0);
  result.g = groverian_from_pmax(result.pmax);
  result.method = Method::variational;
  result.witness = ProductVector::normalized(std::move(best->parts));
  result.diagnostics =
      VariationalDiagnostics{best->converged, best->history.size(), best_restart, std::move(best->history)};
  return result;
}

bool closed_form_eligible(const PureState& state, const Tolerances& tol) {
  return state.parties() == 2 && state.local_dim() == 3 && state.has_real_amplitudes(tol);
}

double pmax_closed_form_real(const CoeffMatrix& m, const Tolerances& tol) {
  if (m.dim() != 3) throw IneligibleInput("closed form is defined for two qutrits only");
  for (const Cx& x : m.entries().data())
    if (std::abs(x.imag()) > tol.real_amplitude)
      throw IneligibleInput("closed form requires real amplitudes");

  auto a = [&](std::size_t i, std::size_t j) { return m(i - 1, j - 1).real(); };
  const double s_minus = std::hypot(a(1, 1) - a(2, 2), a(2, 1) + a(1, 2));
  const double s_plus = std::hypot(a(1, 1) + a(2, 2), a(2, 1) - a(1, 2));
  const double r1 = std::hypot(a(1, 3), a(2, 3));
  const double r2 = std::hypot(a(3, 1), a(3, 2));
  const double h = 0.5 * (s_minus + s_plus);
  const double sum = std::hypot(a(3, 3) - h, r1 + r2) + std::hypot(a(3, 3) + h, r1 - r2);
  return 0.25 * sum * sum;
}

MeasureResult measure_closed_form(const PureState& state, const Tolerances& tol) {
  if (!closed_form_eligible(state, tol))
    throw IneligibleInput("closed form needs a two-qutrit state with real amplitudes");
  MeasureResult result;
  result.pmax = pmax_closed_form_real(coeff_matrix(state), tol);
  result.g = groverian_from_pmax(result.pmax, tol);
  result.method = Method::closed_form;
  return result;
}

double entropy_of_entanglement(const PureState& state, const Tolerances& tol) {
  const auto spectrum = hermitian_eigenvalues(reduced_density(state, Subsystem::first), tol);
  const double log_d = std::log(static_cast<double>(state.local_dim()));
  double entropy = 0.0;
  for (double lambda : spectrum)
    if (lambda > 0.0) entropy -= lambda * std::log(lambda) / log_d;
  return std::clamp(entropy, 0.0, 1.0);
}

std::vector<QutritAngles> witness_angles(const ProductVector& witness, const Tolerances& tol) {
  std::vector<QutritAngles> out;
  out.reserve(witness.parties());
  for (std::size_t p = 0; p < witness.parties(); ++p)
    out.push_back(angles_from_product_vector(witness.part(p), tol));
  return out;
}

}  // namespace groverian
