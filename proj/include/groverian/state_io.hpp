// JSON state documents: {"n": int, "d": int, "amps": [[re, im], ...]} with
// amplitudes in flat index order (party 1 most significant).

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "groverian/qudit.hpp"

namespace groverian {

class StateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws StateFormatError for malformed documents and for states that
/// make_state rejects (wrong amplitude count, zero or non-unit norm).
PureState parse_state_json(std::string_view text, NormalizationMode mode = NormalizationMode::strict);
PureState read_state_file(const std::filesystem::path& path, NormalizationMode mode = NormalizationMode::strict);

std::string to_state_json(const PureState& state);

}  // namespace groverian
