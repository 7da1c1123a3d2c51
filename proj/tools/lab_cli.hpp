// Command-line front end: `measure`, `trajectory` and `audit`.
//
// Exit codes: 0 success, 2 input error (bad flags, unreadable or invalid
// state file, unwritable output), 3 method not applicable to the state.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "groverian/grover.hpp"

namespace groverian::lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitIneligible = 3;

struct TrajectoryRow {
  std::size_t step = 0;
  std::string label;
  double success = 0.0;
  double g_oracle = 0.0;
  std::optional<double> g_closed;  // only for real-amplitude states
  double entropy = 0.0;
};

inline constexpr const char* kTrajectoryCsvHeader = "step,label,success,g_oracle,g_closed,entropy";

/// Two-qutrit trajectory measured step by step.
std::vector<TrajectoryRow> trajectory_rows(const GroverTrace& trace);
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryRow>& rows);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groverian::lab
