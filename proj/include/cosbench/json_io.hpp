#pragma once

#include "cosbench/types.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace cosbench {

using json = nlohmann::json;

// Canonical JSON per type. Object keys are emitted sorted and arrays in
// canonical order, so serialize -> parse -> serialize is byte-identical.

json to_json(const BrickScene& s);
json to_json(const NlvrScene& s);
json to_json(const NavMap& m);
json to_json(const Scene& s);
json to_json(const Query& q);
json to_json(const GoldAnswer& g);
json to_json(const TaskInstance& inst);
json to_json(const SymbolConfig& s);
json to_json(const ModelParams& p);
json to_json(const EvalRecord& r);
json to_json(const MetricRow& row);

BrickScene brick_scene_from_json(const json& j);
NlvrScene nlvr_scene_from_json(const json& j);
NavMap nav_map_from_json(const json& j);
Scene scene_from_json(Task task, const json& j);
Query query_from_json(Task task, const json& j);
GoldAnswer gold_from_json(Task task, const json& j);
TaskInstance instance_from_json(const json& j);
SymbolConfig symbol_config_from_json(const json& j);
ModelParams model_params_from_json(const json& j);
EvalRecord record_from_json(const json& j);

/// The identity payload hashed by instance_id(): task, setting, canonical
/// scene, question. Seed, description and metadata are excluded.
std::string instance_identity_json(const TaskInstance& inst);

/// One-line canonical dump (sorted keys, no whitespace).
std::string dump_canonical(const json& j);

// JSONL helpers.
std::vector<json> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<json>& lines);

} // namespace cosbench
