#include "lab_cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "groverian/audit.hpp"
#include "groverian/format.hpp"
#include "groverian/measures.hpp"
#include "groverian/state_io.hpp"
#include "json.hpp"

namespace groverian::lab {

namespace {

struct MeasureFlags {
  std::string state_path;
  std::string method = "oracle";
  bool normalize = false;
  bool angles = false;
  std::uint64_t seed = 0;
  std::size_t restarts = VariationalOptions{}.restarts;
};

struct TrajectoryFlags {
  std::size_t marked = 0;
  std::size_t iterations = 2;
  std::string out_path;
};

struct AuditFlags {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  Ensemble ensemble = Ensemble::real;
  std::string out_path;
  std::size_t threads = 1;
};

// Writes `text` to `path`, or to `out` when the path is empty.
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (file) file << text;
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

nlohmann::json result_json(const MeasureResult& r, const std::optional<double>& entropy, bool angles) {
  nlohmann::json j{{"method", method_name(r.method)}, {"pmax", r.pmax}, {"g", r.g}};
  j["entropy"] = entropy ? nlohmann::json(*entropy) : nlohmann::json(nullptr);
  if (r.diagnostics) {
    j["converged"] = r.diagnostics->converged;
    j["sweeps"] = r.diagnostics->sweeps;
  }
  if (angles && r.witness && r.witness->local_dim() == 3) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& a : witness_angles(*r.witness))
      parts.push_back({{"theta", a.theta}, {"gamma", a.gamma}, {"chi", a.chi}, {"chi_prime", a.chi_prime}});
    j["witness_angles"] = std::move(parts);
  }
  return j;
}

int cmd_measure(const MeasureFlags& flags, std::ostream& out, std::ostream& err) {
  std::optional<PureState> state;
  try {
    state = read_state_file(flags.state_path,
                            flags.normalize ? NormalizationMode::normalize : NormalizationMode::strict);
  } catch (const StateFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const bool bipartite = state->parties() == 2;
  const bool all = flags.method == "all";
  if (!all && flags.method != "variational") {
    if (flags.method == "oracle" && !bipartite) {
      err << "error: the oracle method needs a two-party state\n";
      return kExitIneligible;
    }
    if (flags.method == "closed-form" && !closed_form_eligible(*state)) {
      err << "error: the closed form needs a two-qutrit state with real amplitudes\n";
      return kExitIneligible;
    }
  }

  const std::optional<double> entropy =
      bipartite ? std::optional<double>(entropy_of_entanglement(*state)) : std::nullopt;
  VariationalOptions variational;
  variational.seed = flags.seed;
  variational.restarts = flags.restarts;

  nlohmann::json results = nlohmann::json::array();
  if ((all && bipartite) || flags.method == "oracle")
    results.push_back(result_json(pmax_svd_oracle(*state), entropy, flags.angles));
  if (all || flags.method == "variational")
    results.push_back(result_json(pmax_variational(*state, variational), entropy, flags.angles));
  if ((all && closed_form_eligible(*state)) || flags.method == "closed-form")
    results.push_back(result_json(measure_closed_form(*state), entropy, flags.angles));

  nlohmann::json doc{{"n", state->parties()}, {"d", state->local_dim()}, {"results", std::move(results)}};
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_trajectory(const TrajectoryFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.marked >= 9) {
    err << "error: --marked must index a two-qutrit basis state (0..8)\n";
    return kExitInputError;
  }
  if (flags.iterations < 1) {
    err << "error: --iterations must be at least 1\n";
    return kExitInputError;
  }
  std::ostringstream csv;
  write_trajectory_csv(csv, trajectory_rows(run_trajectory(2, 3, flags.marked, flags.iterations)));
  return emit(flags.out_path, csv.str(), out, err) ? kExitOk : kExitInputError;
}

int cmd_audit(const AuditFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.samples < 1) {
    err << "error: --samples must be at least 1\n";
    return kExitInputError;
  }
  AuditOptions options;
  options.samples = flags.samples;
  options.seed = flags.seed;
  options.ensemble = flags.ensemble;
  options.threads = flags.threads;
  const auto rows = formula_audit(options);

  std::ostringstream csv;
  write_audit_csv(csv, rows);
  if (flags.out_path.empty()) {
    out << csv.str();
  } else if (!emit(flags.out_path, csv.str(), out, err)) {
    return kExitInputError;
  }
  out << format_summary(summarize(rows)) << '\n';
  return kExitOk;
}

}  // namespace

std::vector<TrajectoryRow> trajectory_rows(const GroverTrace& trace) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(trace.steps.size());
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const GroverStep& step = trace.steps[i];
    TrajectoryRow row;
    row.step = i;
    row.label = step.label.text();
    row.success = step.success;
    row.g_oracle = pmax_svd_oracle(step.state).g;
    if (closed_form_eligible(step.state)) row.g_closed = measure_closed_form(step.state).g;
    row.entropy = entropy_of_entanglement(step.state);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryRow>& rows) {
  out << kTrajectoryCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.step << ',' << r.label << ',' << format_real(r.success) << ',' << format_real(r.g_oracle) << ','
        << format_real(r.g_closed) << ',' << format_real(r.entropy) << '\n';
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groverian entanglement lab for qudit registers"};
  app.require_subcommand(1);

  MeasureFlags measure;
  auto* measure_cmd = app.add_subcommand("measure", "P_max, G and entropy of a JSON state file");
  measure_cmd->add_option("--state", measure.state_path, "State document {n, d, amps}")->required();
  measure_cmd->add_option("--method", measure.method, "oracle | variational | closed-form | all")
      ->check(CLI::IsMember({"oracle", "variational", "closed-form", "all"}))
      ->capture_default_str();
  measure_cmd->add_flag("--normalize", measure.normalize, "Rescale a non-normalized state instead of rejecting it");
  measure_cmd->add_flag("--angles", measure.angles, "Report the maximizing product state in angle form (qutrits)");
  measure_cmd->add_option("--seed", measure.seed, "Seed for variational restarts")->capture_default_str();
  measure_cmd->add_option("--restarts", measure.restarts, "Variational restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  TrajectoryFlags trajectory;
  auto* trajectory_cmd = app.add_subcommand("trajectory", "Two-qutrit Grover trajectory as CSV");
  trajectory_cmd->add_option("--marked", trajectory.marked, "Marked basis index (0..8)")->capture_default_str();
  trajectory_cmd->add_option("--iterations", trajectory.iterations, "Grover iterations")->capture_default_str();
  trajectory_cmd->add_option("--out", trajectory.out_path, "Output CSV (default: stdout)");

  AuditFlags audit;
  const std::map<std::string, Ensemble> ensembles{{"real", Ensemble::real}, {"complex", Ensemble::complex}};
  auto* audit_cmd = app.add_subcommand("audit", "Closed form vs oracle vs variational on random states");
  audit_cmd->add_option("--samples", audit.samples, "Random states after the two sentinels")->capture_default_str();
  audit_cmd->add_option("--seed", audit.seed, "Ensemble seed")->capture_default_str();
  audit_cmd->add_option("--ensemble", audit.ensemble, "real | complex")
      ->transform(CLI::CheckedTransformer(ensembles, CLI::ignore_case));
  audit_cmd->add_option("--out", audit.out_path, "Output CSV (default: stdout)");
  audit_cmd->add_option("--threads", audit.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*measure_cmd) return cmd_measure(measure, out, err);
    if (*trajectory_cmd) return cmd_trajectory(trajectory, out, err);
    return cmd_audit(audit, out, err);
  } catch (const IneligibleInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitIneligible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"groverian-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace groverian::lab
