#pragma once

#include <vector>

#include "botlint/ast.hpp"
#include "botlint/issue.hpp"

namespace botlint {

// Tri-state truth of `sensor <op> literal` over the sensor's valid range,
// sensor read as the left operand.
enum class RangeVerdict { AlwaysTrue, AlwaysFalse, Satisfiable };
RangeVerdict comparison_verdict(Sensor sensor, OperatorVariant op, double literal,
                                Device device);

// Disposition of one motor power literal; every literal lands in exactly one.
enum class MotorLiteralClass { Usage, LowPower, OutOfRange, Negative, Nothing };
MotorLiteralClass classify_motor_literal(double power, Device device);

// ---- bug patterns ------------------------------------------------------------

std::vector<Issue> find_action_not_stopped(const Project&);
std::vector<Issue> find_actuator_off_missing(const Project&, Actuator actuator);
std::vector<Issue> find_colour_out_of_range(const Project&);
std::vector<Issue> find_interrupted_loop_sensing(const Project&);
std::vector<Issue> find_low_motor_power(const Project&);
std::vector<Issue> find_missing_loop_sensing(const Project&);
std::vector<Issue> find_motor_out_of_range(const Project&);
std::vector<Issue> find_parallel_actuator_use(const Project&);
std::vector<Issue> find_query_in_loop(const Project&);
std::vector<Issue> find_sensor_equals_check(const Project&);
std::vector<Issue> find_several_launches(const Project&);
std::vector<Issue> find_stuttering_action(const Project&);
std::vector<Issue> find_useless_sensing(const Project&, Sensor sensor);
std::vector<Issue> find_waiting_aborted(const Project&);

// ---- code smells ---------------------------------------------------------------

std::vector<Issue> find_negative_motor_power(const Project&);
std::vector<Issue> find_noneffective_modification(const Project&);
std::vector<Issue> find_noneffective_time_limit(const Project&);

// ---- code perfumes ---------------------------------------------------------------

std::vector<Issue> find_colour_usage(const Project&);
std::vector<Issue> find_correct_sensing(const Project&, Sensor sensor);
std::vector<Issue> find_actuator_off(const Project&, Actuator actuator);
std::vector<Issue> find_loop_sensing(const Project&);
std::vector<Issue> find_motor_usage(const Project&);
std::vector<Issue> find_parallelisation(const Project&);

// ---- engine -----------------------------------------------------------------------

struct FinderOptions {
    bool bugs = true;
    bool smells = true;
    bool perfumes = true;
};

// Runs every enabled finder and returns the canonically sorted result.
std::vector<Issue> run_finders(const Project& project, const FinderOptions& options = {});

} // namespace botlint
