#pragma once

#include "cosbench/taskgen.hpp"
#include "cosbench/types.hpp"

#include <string>
#include <vector>

namespace cosbench {
namespace promptkit {

// Sentence skeletons for demonstration synthesis. Shipped as versioned data
// files (one per task x mode, see data/templates/) so wording is editable
// without code changes; these members carry the built-in defaults.
struct DemoTemplates {
    // Brick World 1D, chain-of-thought
    std::string b1_cot_stack = "The bricks from bottom to top is {labels}";
    std::string b1_cot_remove = "{index}. Remove brick {upper} from the top of brick {lower}.";
    std::string b1_cot_grab =
        "{index}. Now brick {target} is the topmost {color} brick and can be grabbed.";
    std::string b1_cot_final = "So we get the result as {answer}.";
    // Brick World 1D, chain-of-symbol
    std::string b1_cos_relation = "{upper}{on_top}{lower}";
    std::string b1_cos_sum = "In sum: {chain}";
    std::string b1_cos_final = "So we get the result as {answer}.";
    // Brick World 2D, chain-of-thought
    std::string b2_cot_intro = "Let's think step by step:";
    std::string b2_cot_found_first = "{index}. To get brick {target}, we find {upper} is on top of {target}.";
    std::string b2_cot_found_next = "{index}. We find {upper} is on top of {lower}.";
    std::string b2_cot_found_direct =
        "{index}. To get brick {target}, we find there is no brick on top of brick {target},";
    std::string b2_cot_remove = "{index}. We need to remove brick {upper}, as it is on top of brick {lower}.";
    std::string b2_cot_accessible = "{index}. Brick {target} is now accessible and can be grabbed.";
    std::string b2_cot_final = "So we get the result as {answer}.";
    std::string b2_cot_final_direct = "So we get the result as {target} directly.";
    // Brick World 2D, chain-of-symbol
    std::string b2_cos_intro = "We can get";
    std::string b2_cos_chain = "{chain},";
    std::string b2_cos_final = "So we get the result as {answer}.";
    std::string b2_cos_final_direct = "So we get the result as {target} directly.";
    // Navigation, chain-of-thought
    std::string nav_cot_intro = "Let's think step by step";
    std::string nav_cot_start = "1. Start at {root}.";
    std::string nav_cot_count = "2. There are {count} {kind}s on the map, {list}.";
    std::string nav_cot_count_single = "2. There is one {kind} on the map, {name}.";
    std::string nav_cot_route = "{index}. The road from {root} to {candidate} is from {stops} ({sums}).";
    std::string nav_cot_conclusion =
        "{index}. Therefore, the nearest {kind} from the start point ({root}) is {target}.";
    std::string nav_cot_final = "So the answer is {letters}";
    // Navigation, chain-of-symbol
    std::string nav_cos_count = "There are {count} {kind}s on the map, {list}.";
    std::string nav_cos_count_single = "There is one {kind} on the map, {name}.";
    std::string nav_cos_route = "- {route} ({sums})";
    std::string nav_cos_result = "So we get the result as {route}.";
    std::string nav_cos_final = "So the answer is {letters}";
    // Manipulation, chain-of-thought
    std::string nlvr_cot_identify_intro =
        "To move {condition} to the {box} box, we need to identify all the {value} objects in the "
        "three boxes. They are:";
    std::string nlvr_cot_identify = "- One {size} {shape} in {color} in the {frombox} box";
    std::string nlvr_cot_move_intro =
        "Then we can move the objects not in the {box} box to the {box} box one by one:";
    std::string nlvr_cot_move =
        "{index}. Move the {size} {shape} in {color} from the {from} box to the {to} box.";
    std::string nlvr_cot_outro = "Now all the {plural} are in the {box} box.";
    // Manipulation, chain-of-symbol
    std::string nlvr_cos_identify_intro =
        "To move {condition} to the {box} box, we need to identify all the {value} objects in the "
        "three boxes. They are:";
    std::string nlvr_cos_identify = "- {frombox} box: {triplets}";
    std::string nlvr_cos_move_intro =
        "Then we can move the objects not in the {box} box above to the {box} box:";
    std::string nlvr_cos_move = "{index}. {triplet} {from} - {to}";

    bool operator==(const DemoTemplates&) const = default;

    static const DemoTemplates& defaults();
    /// Reads <task>_<mode>.json files from `dir`; missing files or fields
    /// keep their defaults.
    static DemoTemplates load(const std::string& dir);
    void save(const std::string& dir) const;
};

/// "{name}" placeholder substitution.
std::string subst(const std::string& tpl,
                  const std::vector<std::pair<std::string, std::string>>& vars);

struct Demonstration {
    std::string steps;        // intermediate reasoning, token-accounted
    std::string final_answer; // canonical final line(s)

    std::string full() const { return steps + "\n" + final_answer; }
};

/// Natural-language step-by-step rationale ending in the canonical answer
/// sentence, instantiated directly from the oracle solution.
Demonstration synthesize_cot_demo(const TaskInstance& inst,
                                  const DemoTemplates& t = DemoTemplates::defaults());

/// Symbolic chain variant: relations become symbols, keeping only objects and
/// symbols in the intermediate steps.
Demonstration synthesize_cos_demo(const TaskInstance& inst, const SymbolConfig& symbols,
                                  const DemoTemplates& t = DemoTemplates::defaults());

/// Canonical final-answer text for a solved answer (shared by demonstrations
/// and the oracle-backed mock model).
std::string canonical_final_answer(Task task, const GoldAnswer& gold, const Query& query);
std::string canonical_final_answer(const TaskInstance& inst);

/// k demonstration instances from a seed namespace disjoint from evaluation
/// seeds. Deterministic per (task, setting, demo_seed).
std::vector<TaskInstance> sample_demo_set(Task task, std::optional<ShuffleSetting> setting, int k,
                                          uint64_t demo_seed,
                                          const taskgen::GenConfig& cfg = {});

struct PromptBundle {
    std::string text;
    int n_demos = 0;
    int demo_step_tokens_ws = 0;  // whitespace tokens over demo steps
    int demo_step_tokens_bpe = 0; // heuristic estimate over demo steps
};

/// Task-specific question framing for one instance, ending with "Answer:".
std::string query_block(const TaskInstance& inst);

PromptBundle build_zero_shot(const TaskInstance& inst);

PromptBundle build_few_shot(const std::vector<TaskInstance>& demos, const TaskInstance& inst,
                            PromptMode mode, const SymbolConfig& symbols,
                            const DemoTemplates& t = DemoTemplates::defaults());

} // namespace promptkit
} // namespace cosbench
