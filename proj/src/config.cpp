#include "homalg/config.hpp"

#include <cstdlib>
#include <fstream>

#include "homalg/error.hpp"

namespace homalg {

void RunConfig::validate() const {
  if (!oracle_cap || !power_cap || !iso_cap || !enum_cap || !parallelism)
    throw ParameterError("run configuration caps and parallelism must be positive");
}

nlohmann::json RunConfig::to_json() const {
  return {{"oracle_cap", oracle_cap}, {"power_cap", power_cap}, {"iso_cap", iso_cap},
          {"enum_cap", enum_cap},     {"parallelism", parallelism}, {"seed", seed}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("run configuration must be a JSON object");
  RunConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "oracle_cap") c.oracle_cap = value.get<std::uint64_t>();
      else if (key == "power_cap") c.power_cap = value.get<std::uint64_t>();
      else if (key == "iso_cap") c.iso_cap = value.get<std::size_t>();
      else if (key == "enum_cap") c.enum_cap = value.get<std::size_t>();
      else if (key == "parallelism") c.parallelism = value.get<unsigned>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else throw FormatError("unknown run configuration key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad run configuration: ") + e.what());
  }
  c.validate();
  return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open run configuration '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return from_json(j);
}

RunConfig RunConfig::from_environment() {
  const char* path = std::getenv("HOMALG_CONFIG");
  if (!path || !*path) return {};
  return from_file(path);
}

}  // namespace homalg
