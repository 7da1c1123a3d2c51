#include "groverian/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace groverian {

namespace {

std::size_t read_count(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw StateFormatError(std::string("missing field \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw StateFormatError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

PureState parse_state_json(std::string_view text, NormalizationMode mode) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StateFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw StateFormatError("state document must be a JSON object");

  const std::size_t parties = read_count(doc, "n");
  const std::size_t dim = read_count(doc, "d");
  if (!doc.contains("amps") || !doc.at("amps").is_array())
    throw StateFormatError("field \"amps\" must be an array of [re, im] pairs");

  std::vector<Cx> amps;
  amps.reserve(doc.at("amps").size());
  for (const auto& pair : doc.at("amps")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw StateFormatError("each amplitude must be a [re, im] pair of numbers");
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  try {
    return make_state(parties, dim, std::move(amps), mode);
  } catch (const std::invalid_argument& e) {
    throw StateFormatError(e.what());
  }
}

PureState read_state_file(const std::filesystem::path& path, NormalizationMode mode) {
  std::ifstream in(path);
  if (!in) throw StateFormatError("cannot open state file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str(), mode);
}

std::string to_state_json(const PureState& state) {
  nlohmann::json amps = nlohmann::json::array();
  for (const Cx& x : state.amps()) amps.push_back({x.real(), x.imag()});
  nlohmann::json doc{{"n", state.parties()}, {"d", state.local_dim()}, {"amps", std::move(amps)}};
  return doc.dump();
}

}  // namespace groverian
