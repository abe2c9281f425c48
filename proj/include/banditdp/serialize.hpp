#pragma once

// JSON mapping of the core value types. Round-trips exactly: doubles are emitted with
// enough digits to be parsed back to the same value.

#include <json.hpp>

#include "banditdp/types.hpp"

namespace banditdp {

void to_json(nlohmann::json& j, const Module& m);
void from_json(const nlohmann::json& j, Module& m);
void to_json(nlohmann::json& j, const Dataset& d);
void from_json(const nlohmann::json& j, Dataset& d);
void to_json(nlohmann::json& j, const Arm& a);
void from_json(const nlohmann::json& j, Arm& a);
void to_json(nlohmann::json& j, const PolicyChoice& p);
void from_json(const nlohmann::json& j, PolicyChoice& p);
void to_json(nlohmann::json& j, const SimConfig& c);
void from_json(const nlohmann::json& j, SimConfig& c);
void to_json(nlohmann::json& j, const StreamingConfusion& c);
void from_json(const nlohmann::json& j, StreamingConfusion& c);
void to_json(nlohmann::json& j, const StepRecord& s);
void from_json(const nlohmann::json& j, StepRecord& s);
void to_json(nlohmann::json& j, const RunResult& r);
void from_json(const nlohmann::json& j, RunResult& r);

}  // namespace banditdp
