#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cosbench {

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

enum class Task { Brick1D, Brick2D, Nlvr, Nav, ExternalQA };
enum class ShuffleSetting { NoShuffle, ShuffleDescription, ShuffleLabel, ShuffleBoth };
enum class PromptMode { ZeroShotCoT, FewShotCoT, FewShotCoS };

enum class BrickColor { Yellow, White, Blue };
enum class Dimension { D1, D2 };

enum class ObjectSize { Small, Middle, Large };
enum class ObjectShape { Square, Round, Triangle };
enum class ObjectColor { Yellow, Black, Blue };
enum class BoxPos { Left, Middle, Right };

enum class LandmarkKind { Store, Bank, House, Cinema, Garden, School };

// Canonical string forms used in JSON files and prompts.
const char* to_string(Task t);
const char* to_string(ShuffleSetting s);
const char* to_string(PromptMode m);
const char* to_string(BrickColor c);
const char* to_string(Dimension d);
const char* to_string(ObjectSize s);
const char* to_string(ObjectShape s);
const char* to_string(ObjectColor c);
const char* to_string(BoxPos b);
const char* to_string(LandmarkKind k);

Task task_from_string(const std::string& s);
ShuffleSetting setting_from_string(const std::string& s);
PromptMode mode_from_string(const std::string& s);
BrickColor brick_color_from_string(const std::string& s);
Dimension dimension_from_string(const std::string& s);
ObjectSize size_from_string(const std::string& s);
ObjectShape shape_from_string(const std::string& s);
ObjectColor object_color_from_string(const std::string& s);
BoxPos box_from_string(const std::string& s);
LandmarkKind kind_from_string(const std::string& s);

bool task_is_brick(Task t);

// ---------------------------------------------------------------------------
// Scenes
// ---------------------------------------------------------------------------

struct Brick {
    char label = 'A'; // single uppercase letter, unique within a scene
    BrickColor color = BrickColor::Yellow;

    bool operator==(const Brick&) const = default;
};

// Stacked bricks. on_top pairs are (upper, lower); in_front pairs are
// (front, back) and only link stack-bottom bricks in 2D scenes.
struct BrickScene {
    Dimension dimension = Dimension::D1;
    std::vector<Brick> bricks;                      // sorted by label
    std::vector<std::pair<char, char>> on_top;      // sorted by upper
    std::vector<std::pair<char, char>> in_front;    // sorted by front

    bool operator==(const BrickScene&) const = default;

    const Brick* find(char label) const;
    BrickColor color_of(char label) const;
    // Label of the brick directly below/above, or 0.
    char below(char label) const;
    char above(char label) const;
    void sort_canonical();
};

struct NlvrObject {
    ObjectSize size = ObjectSize::Small;
    ObjectShape shape = ObjectShape::Square;
    ObjectColor color = ObjectColor::Yellow;
    BoxPos box = BoxPos::Left;
    int ordinal = 0; // position within its box, 0-based, description order

    bool operator==(const NlvrObject&) const = default;
};

struct NlvrScene {
    std::vector<NlvrObject> objects; // sorted by (box, ordinal)

    bool operator==(const NlvrScene&) const = default;

    std::vector<NlvrObject> in_box(BoxPos box) const;
    void sort_canonical();
};

struct NavNode {
    char id = 'A';
    LandmarkKind kind = LandmarkKind::Store;

    bool operator==(const NavNode&) const = default;
};

struct NavEdge {
    char parent = 'A';
    char child = 'B';
    int distance_m = 100; // 100 or 200

    bool operator==(const NavEdge&) const = default;
};

// Rooted tree of landmarks; the root is the start point.
struct NavMap {
    char root = 'A';
    std::vector<NavNode> nodes;  // sorted by id
    std::vector<NavEdge> edges;  // sorted by (parent, child)

    bool operator==(const NavMap&) const = default;

    const NavNode* find(char id) const;
    LandmarkKind kind_of(char id) const;
    std::vector<char> children_of(char id) const;
    void sort_canonical();
};

struct ExternalStory {
    std::string story;

    bool operator==(const ExternalStory&) const = default;
};

using Scene = std::variant<BrickScene, NlvrScene, NavMap, ExternalStory>;

// ---------------------------------------------------------------------------
// Structured questions
// ---------------------------------------------------------------------------

struct BrickQuery {
    char target = 'A';
    bool operator==(const BrickQuery&) const = default;
};

// Single property-value condition plus the destination box.
using NlvrValue = std::variant<ObjectSize, ObjectShape, ObjectColor>;

struct NlvrQuery {
    NlvrValue value;
    BoxPos target_box = BoxPos::Left;
    bool operator==(const NlvrQuery&) const = default;
};

struct NavQuery {
    LandmarkKind kind = LandmarkKind::Store;
    bool operator==(const NavQuery&) const = default;
};

struct ExternalQuery {
    std::vector<std::string> candidates;
    bool operator==(const ExternalQuery&) const = default;
};

using Query = std::variant<BrickQuery, NlvrQuery, NavQuery, ExternalQuery>;

// ---------------------------------------------------------------------------
// Gold answers
// ---------------------------------------------------------------------------

struct BrickGold {
    std::vector<char> sequence; // removals top-down, target last
    bool operator==(const BrickGold&) const = default;
};

struct NlvrMove {
    ObjectSize size = ObjectSize::Small;
    ObjectShape shape = ObjectShape::Square;
    ObjectColor color = ObjectColor::Yellow;
    BoxPos from = BoxPos::Left;
    int ordinal = 0; // keeps duplicate triplets distinguishable

    bool operator==(const NlvrMove&) const = default;
};

struct NlvrGold {
    std::vector<NlvrMove> moves; // a set; canonical order (from, size, ordinal)
    bool operator==(const NlvrGold&) const = default;
};

struct NavGold {
    std::vector<char> path; // node ids, root first
    int distance_m = 0;
    bool operator==(const NavGold&) const = default;
};

struct OptionGold {
    std::string option;
    bool operator==(const OptionGold&) const = default;
};

using GoldAnswer = std::variant<BrickGold, NlvrGold, NavGold, OptionGold>;

// ---------------------------------------------------------------------------
// Task instances
// ---------------------------------------------------------------------------

struct TaskInstance {
    std::string id; // content hash, see instance_id()
    Task task = Task::Brick1D;
    std::optional<ShuffleSetting> setting; // brick tasks only
    Scene scene;
    std::string description;
    std::string question;
    Query query;
    GoldAnswer gold;
    uint64_t seed = 0;
    std::map<std::string, std::string> meta; // generation metadata
};

/// Deterministic content hash over (task, setting, canonical scene, question).
/// Excludes seed and description so relabelled or re-rendered twins differ
/// exactly when their content differs.
std::string instance_id(const TaskInstance& inst);

// ---------------------------------------------------------------------------
// Prompt and model configuration
// ---------------------------------------------------------------------------

// Symbol vocabulary for chain-of-symbol rendering.
struct SymbolConfig {
    std::string on_top = "//";
    std::string in_front = "->";
    std::string path_sep = "/";
    std::string list_sep = ",";
    std::string triplet_open = "(";
    std::string triplet_close = ")";

    bool operator==(const SymbolConfig&) const = default;

    // All tokens non-empty and mutually distinct.
    void validate() const;
};

// Named symbol presets for the ablation study (the "no symbol" preset uses a
// plain space so chains degrade to label runs).
const std::map<std::string, SymbolConfig>& symbol_presets();

struct PromptConfig {
    PromptMode mode = PromptMode::FewShotCoS;
    int n_demos = 5;
    SymbolConfig symbols;
    uint64_t demo_seed = 0;

    void validate() const;
};

struct ModelParams {
    std::string model_name = "mock:perfect";
    double temperature = 0.0;
    int max_tokens = 1024;
    std::string endpoint_url = "https://api.openai.com/v1";

    void validate() const;
};

// ---------------------------------------------------------------------------
// Evaluation records and metric rows
// ---------------------------------------------------------------------------

struct EvalRecord {
    std::string instance_id;
    std::string condition; // "<task>/<setting>/<mode>"
    Task task = Task::Brick1D;
    std::optional<ShuffleSetting> setting;
    PromptMode mode = PromptMode::ZeroShotCoT;
    int run_index = 0;
    std::string prompt_text;
    std::string raw_completion;
    std::optional<GoldAnswer> parsed; // absent on parse failure
    int accuracy = 0;                 // 0 or 1
    double precision = 0.0;
    double recall = 0.0;
    int prompt_tokens = 0;     // whitespace count over the full prompt
    int demo_step_tokens = 0;  // whitespace count over demo intermediate steps
    double latency_ms = 0.0;
    std::optional<std::string> error; // model-call error kind, if any
};

struct MetricRow {
    std::string condition;
    Task task = Task::Brick1D;
    std::optional<ShuffleSetting> setting;
    PromptMode mode = PromptMode::ZeroShotCoT;
    int n = 0;        // scored instances per run
    int runs = 0;
    int errors = 0;   // records excluded due to model-call errors
    double accuracy_mean = 0.0;
    double precision_mean = 0.0;
    double recall_mean = 0.0;
    std::optional<double> accuracy_std;
    std::optional<double> precision_std;
    std::optional<double> recall_std;
    std::optional<int> demo_step_tokens; // absent for zero-shot
};

/// Thrown for invalid configuration (bad ranges, bad symbols, bad flags).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cosbench
