#pragma once

#include "cosbench/evalkit.hpp"
#include "cosbench/model_client.hpp"
#include "cosbench/taskgen.hpp"
#include "cosbench/types.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace cosbench {
namespace runner {

struct ConditionSpec {
    Task task = Task::Brick1D;
    std::optional<ShuffleSetting> setting;
    PromptMode mode = PromptMode::FewShotCoS;
    int limit = 0; // 0 = every instance in the condition file
};

// One declarative file describes a whole experiment: the dataset, the
// condition matrix, the model, and the run count.
struct RunConfig {
    taskgen::GenConfig dataset;
    std::vector<ConditionSpec> conditions;
    ModelParams model;
    int runs = 1;
    int n_demos = 5;          // the paper-style shot count
    uint64_t demo_seed = 1000; // run r draws demonstrations from demo_seed + r
    SymbolConfig symbols;
    evalkit::AccuracyMode accuracy = evalkit::AccuracyMode::Exact;
    std::string external_qa_path; // required for external_qa conditions
    std::string templates_dir;    // optional demo-template override

    void validate() const;
};

RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

std::string condition_key(Task task, std::optional<ShuffleSetting> setting, PromptMode mode);

struct RunStats {
    int completed = 0;
    int skipped = 0; // already present in the results file (resume)
    int errors = 0;  // model-call failures recorded per instance
};

/// Executes the condition matrix against `model`, appending one EvalRecord
/// JSONL line per (instance, condition, run). Interrupted runs resume by
/// skipping keys already present in `results_path`.
RunStats run_experiment(const RunConfig& cfg, const std::string& dataset_dir,
                        const std::string& results_path, client::ChatModel& model,
                        int parallel = 1);

/// Lenient JSONL reader: skips unparseable lines (e.g. a truncated tail after
/// a kill) and reports how many were skipped.
std::vector<EvalRecord> load_records(const std::string& path, int* skipped_lines = nullptr);

struct Report {
    std::vector<MetricRow> rows;
    std::string text;         // aligned human-readable tables
    nlohmann::json machine;   // {"schema_version":1,"rows":[...]}
};

Report make_report(const std::vector<EvalRecord>& records);

} // namespace runner
} // namespace cosbench
