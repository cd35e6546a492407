#pragma once

#include "cosbench/types.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cosbench {
namespace taskgen {

struct GenConfig {
    uint64_t seed = 0;
    int brick_per_condition = 500; // per setting x dimension
    int nlvr_count = 1000;
    int nav_count = 500;
    int brick_min = 3; // 1D range; 2D totals are shifted up by one
    int brick_max = 8;
    int nav_min_nodes = 7;
    int nav_max_nodes = 10;

    void validate() const;
};

// Inclusive brick-count range for a dimension. 2D scenes carry one extra
// brick so the base row plus towers stays non-degenerate.
std::pair<int, int> brick_range(const GenConfig& cfg, Dimension dim);

nlohmann::json gen_config_to_json(const GenConfig& cfg);
GenConfig gen_config_from_json(const nlohmann::json& j);

/// Dispatches to the task's generator, drawing size parameters from `seed`.
TaskInstance generate_for(Task task, std::optional<ShuffleSetting> setting, uint64_t seed,
                          const GenConfig& cfg);

// Seeded generators. Pure functions of their arguments: equal inputs give
// byte-identical instances.
TaskInstance gen_brick(uint64_t seed, int n_bricks, Dimension dim, ShuffleSetting setting,
                       const GenConfig& cfg = {});
TaskInstance gen_nlvr(uint64_t seed, const GenConfig& cfg = {});
TaskInstance gen_nav(uint64_t seed, const GenConfig& cfg = {});

/// Natural-language scene description in the task's sentence templates.
/// Sentence order follows the instance's shuffle setting and seed.
std::string render_description(const TaskInstance& inst);

/// The question text (fixed suffix plus the instance's target).
std::string render_question(const TaskInstance& inst);

// Rendering vocabulary shared with the prompt compiler.
std::string nlvr_condition_phrase(const NlvrValue& v); // "all rounds", "all black objects"
std::string nlvr_value_word(const NlvrValue& v);       // "round", "black", "small"
std::string landmark_name(const NavMap& m, char id);   // "store B"

// Scene structure helpers.
std::vector<char> brick_base_chain(const BrickScene& s);       // rear -> front
std::vector<char> brick_stack(const BrickScene& s, char base); // bottom -> top

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& sentence, const std::string& why)
        : std::runtime_error("cannot parse sentence: \"" + sentence + "\" (" + why + ")"),
          sentence(sentence) {}
    std::string sentence;
};

/// Reconstructs the scene graph from a rendered description. Order-insensitive
/// over sentences; question and instruction sentences are ignored.
Scene parse_description(const std::string& text, Task task);

/// Extracts the structured question (last one in `text`).
Query parse_question(const std::string& text, Task task);

// Per-instance seeds, derived so evaluation and demonstration namespaces
// never collide.
uint64_t eval_instance_seed(uint64_t config_seed, Task task, int setting_tag, int index);
uint64_t demo_instance_seed(uint64_t demo_seed, Task task, int setting_tag, int index);

struct ManifestFile {
    std::string file;
    Task task = Task::Brick1D;
    std::optional<ShuffleSetting> setting;
    int count = 0;
    std::string digest;
};

struct Manifest {
    GenConfig config;
    std::string config_hash;
    int total = 0;
    std::vector<ManifestFile> files;
};

/// Generates the full evaluation suite into `out_dir` (one JSONL file per
/// task/setting) and writes manifest.json. Same config, same bytes.
Manifest build_dataset(const GenConfig& cfg, const std::string& out_dir);

Manifest read_manifest(const std::string& dataset_dir);
std::vector<TaskInstance> load_instances(const std::string& dataset_dir, Task task,
                                         std::optional<ShuffleSetting> setting);

std::string condition_file_name(Task task, std::optional<ShuffleSetting> setting);

} // namespace taskgen
} // namespace cosbench
