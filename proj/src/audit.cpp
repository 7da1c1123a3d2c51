#include "groverian/audit.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include "groverian/format.hpp"

namespace groverian {

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace

PureState random_state(std::size_t parties, std::size_t dim, Ensemble ensemble, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Cx> amps(register_size(parties, dim));
  for (Cx& x : amps) {
    const double re = normal(rng);
    const double im = ensemble == Ensemble::complex ? normal(rng) : 0.0;
    x = Cx{re, im};
  }
  return make_state(parties, dim, std::move(amps), NormalizationMode::normalize);
}

PureState audit_sample_state(std::uint64_t seed, std::size_t state_id, Ensemble ensemble) {
  std::mt19937_64 rng(derive_seed(seed, state_id));
  return random_state(2, 3, ensemble, rng);
}

std::vector<PureState> audit_sentinels() {
  const double third = 1.0 / std::sqrt(3.0);
  std::vector<Cx> diagonal(9);
  diagonal[0] = diagonal[4] = diagonal[8] = third;
  std::vector<Cx> skewed(9);
  skewed[0] = 0.6;
  skewed[5] = 0.8;
  return {make_state(2, 3, std::move(diagonal)), make_state(2, 3, std::move(skewed))};
}

AuditRow audit_row(std::size_t state_id, const PureState& state, const VariationalOptions& variational) {
  AuditRow row;
  row.state_id = state_id;
  row.pmax_oracle = pmax_svd_oracle(state).pmax;
  row.pmax_variational = pmax_variational(state, variational).pmax;
  if (closed_form_eligible(state)) {
    row.pmax_closed = pmax_closed_form_real(coeff_matrix(state));
    row.deviation = *row.pmax_closed - row.pmax_oracle;
  }
  return row;
}

std::vector<AuditRow> formula_audit(const AuditOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("formula_audit needs at least one sample");
  const auto sentinels = audit_sentinels();
  const std::size_t total = sentinels.size() + options.samples;
  std::vector<AuditRow> rows(total);

  auto evaluate = [&](std::size_t id) {
    const PureState state =
        id < sentinels.size() ? sentinels[id] : audit_sample_state(options.seed, id, options.ensemble);
    VariationalOptions variational = options.variational;
    variational.seed = derive_seed(options.seed ^ 0x9e3779b97f4a7c15ULL, id);
    rows[id] = audit_row(id, state, variational);
  };

  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, total);
  if (workers == 1) {
    for (std::size_t id = 0; id < total; ++id) evaluate(id);
    return rows;
  }

  // Strided partition; each worker writes only its own rows.
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t id = w; id < total; id += workers) evaluate(id);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

AuditSummary summarize(const std::vector<AuditRow>& rows, double threshold) {
  AuditSummary s;
  s.threshold = threshold;
  double total = 0.0;
  for (const auto& row : rows) {
    if (!row.deviation) continue;
    const double dev = std::abs(*row.deviation);
    ++s.count;
    total += dev;
    s.max_abs_deviation = std::max(s.max_abs_deviation, dev);
    if (dev > threshold) ++s.flagged;
  }
  if (s.count > 0) s.mean_abs_deviation = total / static_cast<double>(s.count);
  return s;
}

void write_audit_csv(std::ostream& out, const std::vector<AuditRow>& rows) {
  out << kAuditCsvHeader << '\n';
  for (const auto& row : rows) {
    out << row.state_id << ',' << format_real(row.pmax_closed) << ',' << format_real(row.pmax_oracle) << ','
        << format_real(row.pmax_variational) << ',' << format_real(row.deviation) << '\n';
  }
}

std::string format_summary(const AuditSummary& s) {
  return "count=" + std::to_string(s.count) + " max_abs_deviation=" + format_real(s.max_abs_deviation) +
         " mean_abs_deviation=" + format_real(s.mean_abs_deviation) +
         " threshold=" + format_real(s.threshold) + " flagged=" + std::to_string(s.flagged);
}

}  // namespace groverian
