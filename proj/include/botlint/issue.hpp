#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "botlint/ast.hpp"

namespace botlint {

enum class Category { Bug, Smell, Perfume };

std::string_view category_name(Category c); // "BUG" / "SMELL" / "PERFUME"

struct Issue {
    std::string pattern_id;
    Category category = Category::Bug;
    std::string actor;
    std::optional<int> script;                 // index within the actor
    std::vector<std::string> block_ids;        // first entry anchors the issue
    std::string hint_key;                      // equals pattern_id
    std::map<std::string, std::string> params; // hint placeholder values
    std::map<std::string, std::string> metadata;
};

// Stable output order: (actor document order, script, anchor block, pattern id).
void canonical_sort(std::vector<Issue>& issues, const Project& project);

namespace pattern {

// bug patterns
inline constexpr std::string_view kActionNotStopped = "action-not-stopped";
inline constexpr std::string_view kColourOutOfRange = "colour-out-of-range";
inline constexpr std::string_view kInterruptedLoopSensing = "interrupted-loop-sensing";
inline constexpr std::string_view kLowMotorPower = "low-motor-power";
inline constexpr std::string_view kMissingLoopSensing = "missing-loop-sensing";
inline constexpr std::string_view kMotorOutOfRange = "motor-out-of-range";
inline constexpr std::string_view kParallelActuatorUse = "parallel-actuator-use";
inline constexpr std::string_view kQueryInLoop = "query-in-loop";
inline constexpr std::string_view kSensorEqualsCheck = "sensor-equals-check";
inline constexpr std::string_view kSeveralLaunches = "several-launches";
inline constexpr std::string_view kStutteringAction = "stuttering-action";
inline constexpr std::string_view kWaitingAborted = "waiting-aborted";

// code smells
inline constexpr std::string_view kNegativeMotorPower = "negative-motor-power";
inline constexpr std::string_view kNoneffectiveModification = "noneffective-modification";
inline constexpr std::string_view kNoneffectiveTimeLimit = "noneffective-time-limit";

// code perfumes
inline constexpr std::string_view kColourUsage = "colour-usage";
inline constexpr std::string_view kLoopSensing = "loop-sensing";
inline constexpr std::string_view kMotorUsage = "motor-usage";
inline constexpr std::string_view kParallelisation = "parallelisation";

std::string off_missing(Actuator a);   // "<actuator>-off-missing"
std::string actuator_off(Actuator a);  // "<actuator>-off"
std::string useless_sensing(Sensor s); // "useless-<sensor>-sensing"
std::string correct_sensing(Sensor s); // "<sensor>-sensing"

// All 26 + 3 + 18 ids, bugs then smells then perfumes, alphabetical per group.
const std::vector<std::pair<std::string, Category>>& all_patterns();

} // namespace pattern

} // namespace botlint
