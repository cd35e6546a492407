#pragma once

#include "cosbench/types.hpp"

#include <string>
#include <vector>

namespace cosbench {
namespace adapter {

// One shipped spatial-QA demonstration. These are fixed golden texts (the
// symbolic variants use their own relation vocabulary), never synthesized.
struct ExternalDemo {
    std::string background;
    std::string question;
    std::vector<std::string> candidates;
    std::string body;       // intermediate reasoning, token-accounted
    std::string final_line; // 'So, the correct answer is: "..."'
};

/// Loads external spatial-QA JSONL: {"story","question","candidates","answer"}
/// per line, answer must be among candidates. Schema violations report the
/// line number.
std::vector<TaskInstance> load_external_qa(const std::string& path);

/// The five fixed demonstrations for the given few-shot mode.
const std::vector<ExternalDemo>& external_demo_set(PromptMode mode);

/// Few-shot prompt over the fixed demonstrations ("Example N:" framing).
/// Returns the prompt text plus whitespace/bpe token counts over the bodies.
struct ExternalPromptBundle {
    std::string text;
    int n_demos = 0;
    int demo_step_tokens_ws = 0;
    int demo_step_tokens_bpe = 0;
};
ExternalPromptBundle build_external_few_shot(const TaskInstance& inst, PromptMode mode);

} // namespace adapter
} // namespace cosbench
