#include "botlint/registry.hpp"

#include <array>
#include <fstream>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace botlint {

namespace {

using Json = nlohmann::ordered_json;

struct TagName {
    BlockKind::Tag tag;
    std::string_view name;
};
constexpr std::array<TagName, 13> kTagNames{{
    {BlockKind::Tag::Hat, "hat"},
    {BlockKind::Tag::ActuatorOn, "actuator_on"},
    {BlockKind::Tag::ActuatorOff, "actuator_off"},
    {BlockKind::Tag::TimedActuator, "timed_actuator"},
    {BlockKind::Tag::Move, "move"},
    {BlockKind::Tag::TimedMove, "timed_move"},
    {BlockKind::Tag::SensorReporter, "sensor_reporter"},
    {BlockKind::Tag::BooleanSensor, "boolean_sensor"},
    {BlockKind::Tag::Control, "control"},
    {BlockKind::Tag::Operator, "operator"},
    {BlockKind::Tag::VariableSet, "variable_set"},
    {BlockKind::Tag::VariableChange, "variable_change"},
    {BlockKind::Tag::Unknown, "unknown"},
}});

struct ControlName {
    ControlVariant v;
    std::string_view name;
};
constexpr std::array<ControlName, 10> kControlNames{{
    {ControlVariant::If, "if"},
    {ControlVariant::IfElse, "if_else"},
    {ControlVariant::Forever, "forever"},
    {ControlVariant::RepeatTimes, "repeat_times"},
    {ControlVariant::RepeatUntil, "repeat_until"},
    {ControlVariant::Wait, "wait"},
    {ControlVariant::WaitUntil, "wait_until"},
    {ControlVariant::StopAll, "stop_all"},
    {ControlVariant::StopOtherScripts, "stop_other_scripts"},
    {ControlVariant::StopThisScript, "stop_this_script"},
}});

struct OperatorName {
    OperatorVariant v;
    std::string_view name;
};
constexpr std::array<OperatorName, 11> kOperatorNames{{
    {OperatorVariant::Eq, "eq"},
    {OperatorVariant::Gt, "gt"},
    {OperatorVariant::Lt, "lt"},
    {OperatorVariant::And, "and"},
    {OperatorVariant::Or, "or"},
    {OperatorVariant::Not, "not"},
    {OperatorVariant::Add, "add"},
    {OperatorVariant::Subtract, "subtract"},
    {OperatorVariant::Multiply, "multiply"},
    {OperatorVariant::Divide, "divide"},
    {OperatorVariant::Random, "random"},
}});

struct DirectionName {
    Direction v;
    std::string_view name;
};
constexpr std::array<DirectionName, 4> kDirectionNames{{
    {Direction::Forward, "forward"},
    {Direction::Backward, "backward"},
    {Direction::TurnLeft, "turn_left"},
    {Direction::TurnRight, "turn_right"},
}});

struct SensorName {
    Sensor v;
    std::string_view name;  // registry data name
    std::string_view slug;  // pattern-id fragment
};
constexpr std::array<SensorName, 10> kSensorNames{{
    {Sensor::Battery, "battery", "battery"},
    {Sensor::Colour, "colour", "colour"},
    {Sensor::Distance, "distance", "distance"},
    {Sensor::AmbientLight, "ambient_light", "light"},
    {Sensor::Line, "line", "line"},
    {Sensor::Loudness, "loudness", "loudness"},
    {Sensor::PitchAngle, "pitch_angle", "pitch-angle"},
    {Sensor::Potentiometer, "potentiometer", "potentiometer"},
    {Sensor::RollAngle, "roll_angle", "roll-angle"},
    {Sensor::Shaking, "shaking", "shaking"},
}});

struct ActuatorName {
    Actuator v;
    std::string_view name;
    std::string_view slug;
};
constexpr std::array<ActuatorName, 4> kActuatorNames{{
    {Actuator::Led, "led", "led"},
    {Actuator::Light, "light", "light"},
    {Actuator::Matrix, "matrix", "matrix"},
    {Actuator::Motor, "motor", "motor"},
}});

template <typename Table, typename Value>
std::string_view name_of(const Table& table, Value v) {
    for (const auto& row : table)
        if (row.v == v)
            return row.name;
    return "?";
}

template <typename Table>
auto value_of(const Table& table, std::string_view name, const char* what) {
    for (const auto& row : table)
        if (row.name == name)
            return row.v;
    throw RegistryError(std::string("unknown ") + what + ": " + std::string(name));
}

std::string_view tag_name(BlockKind::Tag tag) {
    for (const auto& row : kTagNames)
        if (row.tag == tag)
            return row.name;
    return "unknown";
}

BlockKind::Tag tag_value(std::string_view name) {
    for (const auto& row : kTagNames)
        if (row.name == name)
            return row.tag;
    throw RegistryError("unknown block kind: " + std::string(name));
}

std::vector<std::string> string_list(const Json& j, const char* key) {
    std::vector<std::string> out;
    if (j.contains(key))
        for (const Json& v : j.at(key))
            out.push_back(v.get<std::string>());
    return out;
}

} // namespace

SensorRange sensor_range(Sensor sensor, Device device) {
    switch (sensor) {
    case Sensor::Battery:       return {0, 100, false};
    case Sensor::Colour:        return {0, 255, false};
    case Sensor::Distance:      return {3, 400, false};
    case Sensor::AmbientLight:  return device == Device::Codey ? SensorRange{0, 100, false}
                                                               : SensorRange{0, 1020, false};
    case Sensor::Line:          return {0, 3, true};
    case Sensor::Loudness:      return {0, 100, false};
    case Sensor::PitchAngle:    return {-180, 180, false};
    case Sensor::Potentiometer: return {0, 100, false};
    case Sensor::RollAngle:     return {-90, 90, false};
    case Sensor::Shaking:       return {0, 100, false};
    }
    throw RegistryError("unhandled sensor");
}

SensorRange sensor_range(Sensor sensor, std::string_view device_tag) {
    auto device = parse_device_tag(device_tag);
    if (!device)
        throw UnknownDeviceError(std::string(device_tag));
    return sensor_range(sensor, *device);
}

MotorRange motor_range(Device device) {
    return device == Device::Mcore ? MotorRange{25, 100} : MotorRange{0, 100};
}

std::optional<Device> parse_device_tag(std::string_view tag) {
    if (tag == "codey")
        return Device::Codey;
    if (tag == "mcore")
        return Device::Mcore;
    return std::nullopt;
}

std::string_view device_tag(Device device) {
    return device == Device::Codey ? "codey" : "mcore";
}

std::string_view sensor_slug(Sensor sensor) {
    for (const auto& row : kSensorNames)
        if (row.v == sensor)
            return row.slug;
    return "?";
}

std::string_view actuator_slug(Actuator actuator) {
    for (const auto& row : kActuatorNames)
        if (row.v == actuator)
            return row.slug;
    return "?";
}

Registry Registry::from_json_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw RegistryError(std::string("registry file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
        throw RegistryError("registry file needs an 'entries' array");

    Registry registry;
    for (const Json& j : doc["entries"]) {
        RegistryEntry e;
        e.opcode = j.at("opcode").get<std::string>();
        e.kind.tag = tag_value(j.at("kind").get<std::string>());
        switch (e.kind.tag) {
        case BlockKind::Tag::Hat:
            e.kind.event_tag = j.at("event").get<std::string>();
            e.hat_fields = string_list(j, "hat_fields");
            break;
        case BlockKind::Tag::ActuatorOn:
        case BlockKind::Tag::ActuatorOff:
        case BlockKind::Tag::TimedActuator:
            e.kind.actuator = value_of(kActuatorNames, j.at("actuator").get<std::string>(),
                                       "actuator");
            break;
        case BlockKind::Tag::Move:
        case BlockKind::Tag::TimedMove:
            e.kind.direction = value_of(kDirectionNames, j.at("direction").get<std::string>(),
                                        "direction");
            break;
        case BlockKind::Tag::SensorReporter:
            e.kind.sensor = value_of(kSensorNames, j.at("sensor").get<std::string>(),
                                     "sensor");
            break;
        case BlockKind::Tag::BooleanSensor:
            e.kind.boolean_kind = j.at("boolean").get<std::string>();
            break;
        case BlockKind::Tag::Control:
            e.kind.control = value_of(kControlNames, j.at("control").get<std::string>(),
                                      "control variant");
            break;
        case BlockKind::Tag::Operator:
            e.kind.op = value_of(kOperatorNames, j.at("operator").get<std::string>(),
                                 "operator");
            break;
        case BlockKind::Tag::VariableSet:
        case BlockKind::Tag::VariableChange:
        case BlockKind::Tag::Unknown:
            break;
        }
        e.devices = string_list(j, "devices");
        e.aliases = string_list(j, "aliases");
        if (j.contains("slots")) {
            const Json& s = j["slots"];
            e.power_slot = s.value("power", "");
            e.time_slot = s.value("time", "");
            e.times_slot = s.value("times", "");
            e.condition_slot = s.value("condition", "");
            e.content_slot = s.value("content", "");
            e.value_slot = s.value("value", "");
            e.colour_slots = string_list(s, "colour");
            e.body_slots = string_list(s, "body");
            e.operand_slots = string_list(s, "operands");
        }
        e.variable_field = j.value("variable_field", "");
        registry.entries_.push_back(std::move(e));
    }
    registry.index();
    registry.validate();
    return registry;
}

std::string Registry::to_json_text() const {
    Json entries = Json::array();
    for (const RegistryEntry& e : entries_) {
        Json j;
        j["opcode"] = e.opcode;
        j["kind"] = std::string(tag_name(e.kind.tag));
        switch (e.kind.tag) {
        case BlockKind::Tag::Hat:
            j["event"] = e.kind.event_tag;
            if (!e.hat_fields.empty())
                j["hat_fields"] = e.hat_fields;
            break;
        case BlockKind::Tag::ActuatorOn:
        case BlockKind::Tag::ActuatorOff:
        case BlockKind::Tag::TimedActuator:
            j["actuator"] = std::string(name_of(kActuatorNames, e.kind.actuator));
            break;
        case BlockKind::Tag::Move:
        case BlockKind::Tag::TimedMove:
            j["direction"] = std::string(name_of(kDirectionNames, e.kind.direction));
            break;
        case BlockKind::Tag::SensorReporter:
            j["sensor"] = std::string(name_of(kSensorNames, e.kind.sensor));
            break;
        case BlockKind::Tag::BooleanSensor:
            j["boolean"] = e.kind.boolean_kind;
            break;
        case BlockKind::Tag::Control:
            j["control"] = std::string(name_of(kControlNames, e.kind.control));
            break;
        case BlockKind::Tag::Operator:
            j["operator"] = std::string(name_of(kOperatorNames, e.kind.op));
            break;
        default:
            break;
        }
        if (!e.devices.empty())
            j["devices"] = e.devices;
        if (!e.aliases.empty())
            j["aliases"] = e.aliases;
        Json slots = Json::object();
        if (!e.power_slot.empty()) slots["power"] = e.power_slot;
        if (!e.time_slot.empty()) slots["time"] = e.time_slot;
        if (!e.times_slot.empty()) slots["times"] = e.times_slot;
        if (!e.condition_slot.empty()) slots["condition"] = e.condition_slot;
        if (!e.content_slot.empty()) slots["content"] = e.content_slot;
        if (!e.value_slot.empty()) slots["value"] = e.value_slot;
        if (!e.colour_slots.empty()) slots["colour"] = e.colour_slots;
        if (!e.body_slots.empty()) slots["body"] = e.body_slots;
        if (!e.operand_slots.empty()) slots["operands"] = e.operand_slots;
        if (!slots.empty())
            j["slots"] = slots;
        if (!e.variable_field.empty())
            j["variable_field"] = e.variable_field;
        entries.push_back(std::move(j));
    }
    Json doc;
    doc["format"] = "botlint-registry-1";
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

Registry Registry::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw RegistryError("cannot open registry file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

void Registry::index() {
    by_opcode_.clear();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const RegistryEntry& e = entries_[i];
        if (!by_opcode_.emplace(e.opcode, i).second)
            throw RegistryError("duplicate opcode in registry: " + e.opcode);
        for (const std::string& alias : e.aliases)
            if (!by_opcode_.emplace(alias, i).second)
                throw RegistryError("duplicate opcode alias in registry: " + alias);
    }
}

void Registry::validate() const {
    for (const RegistryEntry& e : entries_) {
        auto require = [&](bool ok, const char* what) {
            if (!ok)
                throw RegistryError("registry entry '" + e.opcode + "' is missing " + what);
        };
        switch (e.kind.tag) {
        case BlockKind::Tag::Move:
            require(!e.power_slot.empty(), "a power slot");
            break;
        case BlockKind::Tag::TimedMove:
            require(!e.power_slot.empty(), "a power slot");
            require(!e.time_slot.empty(), "a time slot");
            break;
        case BlockKind::Tag::TimedActuator:
            require(!e.time_slot.empty(), "a time slot");
            break;
        case BlockKind::Tag::Control:
            switch (e.kind.control) {
            case ControlVariant::If:
            case ControlVariant::IfElse:
            case ControlVariant::RepeatUntil:
                require(!e.condition_slot.empty(), "a condition slot");
                require(!e.body_slots.empty(), "a body slot");
                break;
            case ControlVariant::Forever:
                require(!e.body_slots.empty(), "a body slot");
                break;
            case ControlVariant::RepeatTimes:
                require(!e.times_slot.empty(), "a times slot");
                require(!e.body_slots.empty(), "a body slot");
                break;
            case ControlVariant::Wait:
                require(!e.time_slot.empty(), "a time slot");
                break;
            case ControlVariant::WaitUntil:
                require(!e.condition_slot.empty(), "a condition slot");
                break;
            default:
                break;
            }
            break;
        case BlockKind::Tag::Operator:
            require(!e.operand_slots.empty(), "operand slots");
            break;
        case BlockKind::Tag::VariableSet:
        case BlockKind::Tag::VariableChange:
            require(!e.variable_field.empty(), "a variable field");
            require(!e.value_slot.empty(), "a value slot");
            break;
        default:
            break;
        }
    }
}

const RegistryEntry* Registry::lookup(std::string_view opcode,
                                      std::string_view device_tag) const {
    auto it = by_opcode_.find(std::string(opcode));
    if (it == by_opcode_.end())
        return nullptr;
    const RegistryEntry& e = entries_[it->second];
    if (e.devices.empty())
        return &e;
    for (const std::string& d : e.devices)
        if (d == device_tag)
            return &e;
    return nullptr;
}

BlockKind Registry::classify(std::string_view opcode, std::string_view device_tag) const {
    const RegistryEntry* e = lookup(opcode, device_tag);
    return e ? e->kind : BlockKind{};
}

} // namespace botlint
