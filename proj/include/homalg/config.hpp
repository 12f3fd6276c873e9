#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "homalg/algebra.hpp"
#include "homalg/enumerate.hpp"
#include "homalg/homcount.hpp"
#include "homalg/iso.hpp"

namespace homalg {

struct RunConfig {
  std::uint64_t oracle_cap = kDefaultOracleCap;  ///< candidate maps for hom_bruteforce
  std::uint64_t power_cap = kDefaultPowerCap;    ///< vertices of a materialized power
  std::size_t iso_cap = kDefaultIsoCap;          ///< order for canonical forms / iso tests
  std::size_t enum_cap = kDefaultEnumCap;        ///< order for regular enumeration
  unsigned parallelism = 1;
  std::uint64_t seed = 1;

  /// Throws ParameterError if a cap or the worker count is zero.
  void validate() const;

  CountOptions count_options() const { return {parallelism}; }

  nlohmann::json to_json() const;
  /// Missing keys keep their defaults; unknown keys are rejected.
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig from_file(const std::string& path);
  /// Reads the file named by HOMALG_CONFIG when set, defaults otherwise.
  static RunConfig from_environment();
};

}  // namespace homalg
