#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reldisp::demos {

//! One golden comparison. Qualitative checks leave expected/computed unset
//! and carry their outcome in `pass` and a description in `detail`.
struct Check
{
  std::string name;
  std::optional<double> expected;
  std::optional<double> computed;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct DemoResult
{
  std::string name;
  std::vector<Check> checks;
  nlohmann::json payload;

  bool passed() const;
};

std::vector<std::string_view> names();

/// Runs the named demo end to end. `seed` overrides the default seed of the
/// demos built on synthetic data. Throws DomainError for an unknown name.
DemoResult run(std::string_view name, std::optional<std::uint64_t> seed = {});

nlohmann::json to_json(const DemoResult& r);

} // namespace reldisp::demos
