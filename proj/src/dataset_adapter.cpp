#include "cosbench/dataset_adapter.hpp"

#include "cosbench/evalkit.hpp"
#include "cosbench/json_io.hpp"
#include "cosbench/promptkit.hpp"

#include <fstream>
#include <sstream>

namespace cosbench {
namespace adapter {

std::vector<TaskInstance> load_external_qa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open external QA file: " + path);

    std::vector<TaskInstance> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + why);
        };
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            fail(std::string("invalid JSON: ") + e.what());
        }
        if (!j.contains("story") || !j["story"].is_string() || j["story"].get<std::string>().empty())
            fail("missing or empty 'story'");
        if (!j.contains("question") || !j["question"].is_string() ||
            j["question"].get<std::string>().empty())
            fail("missing or empty 'question'");
        if (!j.contains("candidates") || !j["candidates"].is_array() || j["candidates"].empty())
            fail("missing or empty 'candidates'");
        if (!j.contains("answer") || !j["answer"].is_string()) fail("missing 'answer'");

        std::vector<std::string> candidates;
        for (const auto& c : j["candidates"]) {
            if (!c.is_string()) fail("candidates must be strings");
            candidates.push_back(c.get<std::string>());
        }
        std::string answer = j["answer"].get<std::string>();
        if (std::find(candidates.begin(), candidates.end(), answer) == candidates.end()) {
            fail("answer '" + answer + "' is not among the candidates");
        }

        TaskInstance inst;
        inst.task = Task::ExternalQA;
        inst.scene = ExternalStory{j["story"].get<std::string>()};
        inst.description = j["story"].get<std::string>();
        inst.question = j["question"].get<std::string>();
        inst.query = ExternalQuery{candidates};
        inst.gold = OptionGold{answer};
        inst.seed = 0;
        inst.id = instance_id(inst);
        out.push_back(std::move(inst));
    }
    return out;
}

ExternalPromptBundle build_external_few_shot(const TaskInstance& inst, PromptMode mode) {
    if (inst.task != Task::ExternalQA) {
        throw ConfigError("external few-shot prompts require external QA instances");
    }
    const auto& demos = external_demo_set(mode);
    ExternalPromptBundle b;
    std::ostringstream ss;
    int n = 1;
    for (const auto& d : demos) {
        json candidates = d.candidates;
        ss << "Example " << n++ << ":\n"
           << "Background: " << d.background << "\n"
           << "Question: " << d.question << "\n"
           << "Candidate Answers:" << candidates.dump() << "\n"
           << "Answer:\n"
           << d.body << "\n"
           << d.final_line << "\n\n";
        b.demo_step_tokens_ws += evalkit::count_tokens(d.body, evalkit::TokenMethod::Whitespace);
        b.demo_step_tokens_bpe += evalkit::count_tokens(d.body, evalkit::TokenMethod::BpeEstimate);
        b.n_demos++;
    }
    ss << promptkit::query_block(inst);
    b.text = ss.str();
    return b;
}

} // namespace adapter
} // namespace cosbench
