#include "finders_common.hpp"

namespace botlint {

std::vector<Issue> run_finders(const Project& project, const FinderOptions& options) {
    std::vector<Issue> issues;
    auto merge = [&](std::vector<Issue> found) {
        std::move(found.begin(), found.end(), std::back_inserter(issues));
    };

    if (options.bugs) {
        merge(find_action_not_stopped(project));
        for (Actuator a : kAllActuators)
            merge(find_actuator_off_missing(project, a));
        merge(find_colour_out_of_range(project));
        merge(find_interrupted_loop_sensing(project));
        merge(find_low_motor_power(project));
        merge(find_missing_loop_sensing(project));
        merge(find_motor_out_of_range(project));
        merge(find_parallel_actuator_use(project));
        merge(find_query_in_loop(project));
        merge(find_sensor_equals_check(project));
        merge(find_several_launches(project));
        merge(find_stuttering_action(project));
        for (Sensor s : kAllSensors)
            merge(find_useless_sensing(project, s));
        merge(find_waiting_aborted(project));
    }
    if (options.smells) {
        merge(find_negative_motor_power(project));
        merge(find_noneffective_modification(project));
        merge(find_noneffective_time_limit(project));
    }
    if (options.perfumes) {
        merge(find_colour_usage(project));
        for (Sensor s : kAllSensors)
            merge(find_correct_sensing(project, s));
        for (Actuator a : kAllActuators)
            merge(find_actuator_off(project, a));
        merge(find_loop_sensing(project));
        merge(find_motor_usage(project));
        merge(find_parallelisation(project));
    }

    canonical_sort(issues, project);
    return issues;
}

} // namespace botlint
