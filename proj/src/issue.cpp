#include "botlint/issue.hpp"

#include <algorithm>

namespace botlint {

std::string_view category_name(Category c) {
    switch (c) {
    case Category::Bug: return "BUG";
    case Category::Smell: return "SMELL";
    case Category::Perfume: return "PERFUME";
    }
    return "?";
}

void canonical_sort(std::vector<Issue>& issues, const Project& project) {
    std::map<std::string, int> actor_order;
    for (std::size_t i = 0; i < project.actors.size(); ++i)
        actor_order.emplace(project.actors[i].name, static_cast<int>(i));

    auto key = [&](const Issue& issue) {
        auto it = actor_order.find(issue.actor);
        int actor = it == actor_order.end() ? static_cast<int>(actor_order.size()) : it->second;
        int script = issue.script.value_or(-1);
        std::string anchor = issue.block_ids.empty() ? std::string{} : issue.block_ids.front();
        return std::tuple(actor, script, anchor, issue.pattern_id);
    };
    std::stable_sort(issues.begin(), issues.end(),
                     [&](const Issue& a, const Issue& b) { return key(a) < key(b); });
}

namespace pattern {

std::string off_missing(Actuator a) {
    return std::string(actuator_slug(a)) + "-off-missing";
}

std::string actuator_off(Actuator a) {
    return std::string(actuator_slug(a)) + "-off";
}

std::string useless_sensing(Sensor s) {
    return "useless-" + std::string(sensor_slug(s)) + "-sensing";
}

std::string correct_sensing(Sensor s) {
    return std::string(sensor_slug(s)) + "-sensing";
}

const std::vector<std::pair<std::string, Category>>& all_patterns() {
    static const std::vector<std::pair<std::string, Category>> table = [] {
        std::vector<std::pair<std::string, Category>> t;
        auto bug = [&](std::string id) { t.emplace_back(std::move(id), Category::Bug); };
        auto smell = [&](std::string id) { t.emplace_back(std::move(id), Category::Smell); };
        auto perfume = [&](std::string id) { t.emplace_back(std::move(id), Category::Perfume); };

        std::vector<std::string> bugs{
            std::string(kActionNotStopped),
            std::string(kColourOutOfRange),
            std::string(kInterruptedLoopSensing),
            std::string(kLowMotorPower),
            std::string(kMissingLoopSensing),
            std::string(kMotorOutOfRange),
            std::string(kParallelActuatorUse),
            std::string(kQueryInLoop),
            std::string(kSensorEqualsCheck),
            std::string(kSeveralLaunches),
            std::string(kStutteringAction),
            std::string(kWaitingAborted),
        };
        for (Actuator a : kAllActuators)
            bugs.push_back(off_missing(a));
        for (Sensor s : kAllSensors)
            bugs.push_back(useless_sensing(s));
        std::sort(bugs.begin(), bugs.end());
        for (auto& id : bugs)
            bug(std::move(id));

        std::vector<std::string> smells{
            std::string(kNegativeMotorPower),
            std::string(kNoneffectiveModification),
            std::string(kNoneffectiveTimeLimit),
        };
        std::sort(smells.begin(), smells.end());
        for (auto& id : smells)
            smell(std::move(id));

        std::vector<std::string> perfumes{
            std::string(kColourUsage),
            std::string(kLoopSensing),
            std::string(kMotorUsage),
            std::string(kParallelisation),
        };
        for (Actuator a : kAllActuators)
            perfumes.push_back(actuator_off(a));
        for (Sensor s : kAllSensors)
            perfumes.push_back(correct_sensing(s));
        std::sort(perfumes.begin(), perfumes.end());
        for (auto& id : perfumes)
            perfume(std::move(id));

        return t;
    }();
    return table;
}

} // namespace pattern

} // namespace botlint
