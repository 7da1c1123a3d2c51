#include "groverian/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace groverian {

namespace {

std::vector<std::size_t> unique_indices(std::span<const std::size_t> marked, std::size_t size) {
  std::vector<std::size_t> out(marked.begin(), marked.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= size) throw std::out_of_range("marked index out of range");
  return out;
}

}  // namespace

PureState oracle_reflect(const PureState& state, std::size_t marked) {
  return oracle_reflect(state, std::span<const std::size_t>(&marked, 1));
}

PureState oracle_reflect(const PureState& state, std::span<const std::size_t> marked) {
  const auto indices = unique_indices(marked, state.size());
  std::vector<Cx> amps(state.amps().begin(), state.amps().end());
  for (std::size_t idx : indices) amps[idx] = -amps[idx];
  return PureState(detail::Trusted{}, state.parties(), state.local_dim(), std::move(amps));
}

PureState diffusion_reflect(const PureState& state, const PureState& reference) {
  const Cx projection = 2.0 * inner(reference, state);
  std::vector<Cx> amps(state.size());
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = projection * reference[i] - state[i];
  return PureState(detail::Trusted{}, state.parties(), state.local_dim(), std::move(amps));
}

PureState grover_iteration(const PureState& state, std::size_t marked, const PureState& reference) {
  return diffusion_reflect(oracle_reflect(state, marked), reference);
}

double success_probability(const PureState& state, std::size_t marked) {
  if (marked >= state.size()) throw std::out_of_range("marked index out of range");
  return std::norm(state[marked]);
}

double success_probability(const PureState& state, std::span<const std::size_t> marked) {
  double total = 0.0;
  for (std::size_t idx : unique_indices(marked, state.size())) total += std::norm(state[idx]);
  return total;
}

std::size_t optimal_iterations(std::size_t space_size, std::size_t marked_count) {
  if (marked_count < 1 || marked_count >= space_size)
    throw std::invalid_argument("optimal_iterations needs 1 <= r < N");
  const double angle =
      std::asin(std::sqrt(static_cast<double>(marked_count) / static_cast<double>(space_size)));
  const double count = std::round((std::numbers::pi / (2.0 * angle) - 1.0) / 2.0);
  return std::max<std::size_t>(1, static_cast<std::size_t>(count));
}

std::string StepLabel::text() const {
  switch (kind) {
    case Kind::init:
      return "init";
    case Kind::oracle:
      return "oracle-" + std::to_string(iteration);
    case Kind::diffusion:
      return "diffusion-" + std::to_string(iteration);
  }
  return "unknown";
}

GroverTrace run_trajectory(std::size_t parties, std::size_t dim, std::size_t marked, std::size_t iterations) {
  if (iterations < 1) throw std::invalid_argument("run_trajectory needs at least one iteration");
  const PureState reference = uniform_state(parties, dim);
  if (marked >= reference.size()) throw std::out_of_range("marked index out of range");

  GroverTrace trace;
  trace.marked = marked;
  trace.steps.reserve(2 * iterations + 1);
  trace.steps.push_back({StepLabel{}, reference, success_probability(reference, marked)});
  for (std::size_t k = 1; k <= iterations; ++k) {
    PureState after_oracle = oracle_reflect(trace.steps.back().state, marked);
    const double p_oracle = success_probability(after_oracle, marked);
    trace.steps.push_back({{StepLabel::Kind::oracle, k}, std::move(after_oracle), p_oracle});

    PureState after_diffusion = diffusion_reflect(trace.steps.back().state, reference);
    const double p_diffusion = success_probability(after_diffusion, marked);
    trace.steps.push_back({{StepLabel::Kind::diffusion, k}, std::move(after_diffusion), p_diffusion});
  }
  return trace;
}

}  // namespace groverian
