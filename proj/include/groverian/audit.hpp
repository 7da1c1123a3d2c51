// Compares the real-amplitude closed form against the singular-value oracle
// and the variational optimizer over seeded random two-qutrit ensembles.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "groverian/measures.hpp"

namespace groverian {

enum class Ensemble { real, complex };

struct AuditRow {
  std::size_t state_id = 0;
  std::optional<double> pmax_closed;  // absent for complex states
  double pmax_oracle = 0.0;
  double pmax_variational = 0.0;
  std::optional<double> deviation;  // pmax_closed - pmax_oracle
};

struct AuditOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  Ensemble ensemble = Ensemble::real;
  VariationalOptions variational{};
  // Worker threads for sample evaluation; output does not depend on it.
  std::size_t threads = 1;
};

struct AuditSummary {
  std::size_t count = 0;  // rows carrying a deviation
  double max_abs_deviation = 0.0;
  double mean_abs_deviation = 0.0;
  double threshold = 1e-6;
  std::size_t flagged = 0;  // rows with |deviation| > threshold
};

/// I.i.d. standard normal coefficients (complex ones get independent real
/// and imaginary parts), then normalized.
PureState random_state(std::size_t parties, std::size_t dim, Ensemble ensemble, std::mt19937_64& rng);

/// Random state for audit sample `state_id`, drawn from its own stream.
PureState audit_sample_state(std::uint64_t seed, std::size_t state_id, Ensemble ensemble);

/// (|11> + |22> + |33>)/sqrt(3) and 0.6|11> + 0.8|23>.
std::vector<PureState> audit_sentinels();

AuditRow audit_row(std::size_t state_id, const PureState& state, const VariationalOptions& variational);

/// Sentinels as state_id 0 and 1, then `samples` random states. Rows are
/// ordered by state_id and are a pure function of (samples, seed, ensemble).
std::vector<AuditRow> formula_audit(const AuditOptions& options);

AuditSummary summarize(const std::vector<AuditRow>& rows, double threshold = 1e-6);

inline constexpr const char* kAuditCsvHeader = "state_id,pmax_closed,pmax_oracle,pmax_variational,deviation";

void write_audit_csv(std::ostream& out, const std::vector<AuditRow>& rows);
std::string format_summary(const AuditSummary& summary);

}  // namespace groverian
