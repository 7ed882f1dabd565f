#ifndef HURWITZ_SCENARIOS_HPP
#define HURWITZ_SCENARIOS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/report.hpp"

namespace hurwitz {

/// Registered scenario ids in registry order.
const std::vector<std::string>& scenario_ids();

/// One-line description of a scenario; throws UnknownScenario.
const std::string& scenario_summary(std::string_view id);

/// Runs the scenario's fixed check list. `seed` replaces the scenario's own
/// seed for random searches. timing_ms is left at 0. Throws UnknownScenario.
Report run_scenario(std::string_view id, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace hurwitz

#endif  // HURWITZ_SCENARIOS_HPP
