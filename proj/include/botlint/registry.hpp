#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "botlint/errors.hpp"

namespace botlint {

enum class Device { Codey, Mcore };

enum class Actuator { Led, Light, Matrix, Motor };

enum class Sensor {
    Battery,
    Colour,
    Distance,
    AmbientLight,
    Line,
    Loudness,
    PitchAngle,
    Potentiometer,
    RollAngle,
    Shaking,
};

inline constexpr Sensor kAllSensors[] = {
    Sensor::Battery,      Sensor::Colour,     Sensor::Distance,
    Sensor::AmbientLight, Sensor::Line,       Sensor::Loudness,
    Sensor::PitchAngle,   Sensor::Potentiometer, Sensor::RollAngle,
    Sensor::Shaking,
};

inline constexpr Actuator kAllActuators[] = {
    Actuator::Led, Actuator::Light, Actuator::Matrix, Actuator::Motor,
};

enum class Direction { Forward, Backward, TurnLeft, TurnRight };

enum class ControlVariant {
    If,
    IfElse,
    Forever,
    RepeatTimes,
    RepeatUntil,
    Wait,
    WaitUntil,
    StopAll,
    StopOtherScripts,
    StopThisScript,
};

enum class OperatorVariant {
    Eq, Gt, Lt, And, Or, Not, Add, Subtract, Multiply, Divide, Random,
};

struct BlockKind {
    enum class Tag {
        Hat,
        ActuatorOn,
        ActuatorOff,
        TimedActuator,
        Move,
        TimedMove,
        SensorReporter,
        BooleanSensor,
        Control,
        Operator,
        VariableSet,
        VariableChange,
        Unknown,
    };

    Tag tag = Tag::Unknown;
    std::string event_tag;        // Hat
    Actuator actuator{};          // ActuatorOn/Off, TimedActuator
    Direction direction{};        // Move, TimedMove
    Sensor sensor{};              // SensorReporter
    std::string boolean_kind;     // BooleanSensor, e.g. "button", "ir-remote"
    ControlVariant control{};     // Control
    OperatorVariant op{};         // Operator
};

struct SensorRange {
    double lo = 0;
    double hi = 0;
    bool discrete = false;
};

struct MotorRange {
    double min_effective = 0;
    double max = 100;
};

// Value-range table of the supported sensors. The string-tag overload rejects
// device tags other than codey/mcore.
SensorRange sensor_range(Sensor sensor, Device device);
SensorRange sensor_range(Sensor sensor, std::string_view device_tag);
MotorRange motor_range(Device device);

std::optional<Device> parse_device_tag(std::string_view tag);
std::string_view device_tag(Device device);
std::string_view sensor_slug(Sensor sensor);   // kebab-case, e.g. "pitch-angle"
std::string_view actuator_slug(Actuator actuator);

struct RegistryEntry {
    std::string opcode;
    BlockKind kind;
    std::vector<std::string> devices;      // empty = usable everywhere
    std::vector<std::string> aliases;

    // slot bindings (names of input slots per role)
    std::string power_slot;
    std::string time_slot;
    std::string times_slot;
    std::string condition_slot;
    std::string content_slot;
    std::string value_slot;
    std::vector<std::string> colour_slots;
    std::vector<std::string> body_slots;
    std::vector<std::string> operand_slots;
    std::string variable_field;
    std::vector<std::string> hat_fields;   // fields that participate in hat equality
};

class Registry {
public:
    static Registry from_json_text(const std::string& text);
    static Registry load_file(const std::string& path);
    static const Registry& builtin();

    std::string to_json_text() const;

    // Kind of an opcode for an actor with the given device tag ("" = no device).
    // Unregistered opcodes and device mismatches yield Unknown.
    BlockKind classify(std::string_view opcode, std::string_view device_tag) const;
    const RegistryEntry* lookup(std::string_view opcode, std::string_view device_tag) const;

    const std::vector<RegistryEntry>& entries() const { return entries_; }

private:
    void index();
    void validate() const;

    std::vector<RegistryEntry> entries_;
    std::unordered_map<std::string, std::size_t> by_opcode_;
};

} // namespace botlint
