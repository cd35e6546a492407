#include "cosbench/runner.hpp"

#include "cosbench/dataset_adapter.hpp"
#include "cosbench/json_io.hpp"
#include "cosbench/promptkit.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

namespace cosbench {
namespace runner {

void RunConfig::validate() const {
    dataset.validate();
    model.validate();
    symbols.validate();
    if (runs < 1) throw ConfigError("runs must be >= 1");
    if (n_demos < 1) throw ConfigError("n_demos must be >= 1");
    if (conditions.empty()) throw ConfigError("no conditions configured");
    for (const auto& c : conditions) {
        if (task_is_brick(c.task) && !c.setting) {
            throw ConfigError("brick conditions need a shuffle setting");
        }
        if (c.task == Task::ExternalQA && external_qa_path.empty()) {
            throw ConfigError("external_qa conditions need external_qa_path");
        }
        if (c.task == Task::ExternalQA && c.mode == PromptMode::ZeroShotCoT) {
            throw ConfigError("external_qa supports few-shot modes only");
        }
        if (c.limit < 0) throw ConfigError("condition limit must be >= 0");
    }
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    RunConfig cfg;
    if (j.contains("dataset")) cfg.dataset = taskgen::gen_config_from_json(j.at("dataset"));
    if (j.contains("model")) cfg.model = model_params_from_json(j.at("model"));
    if (j.contains("runs")) cfg.runs = j.at("runs").get<int>();
    if (j.contains("n_demos")) cfg.n_demos = j.at("n_demos").get<int>();
    if (j.contains("demo_seed")) cfg.demo_seed = j.at("demo_seed").get<uint64_t>();
    if (j.contains("symbols")) cfg.symbols = symbol_config_from_json(j.at("symbols"));
    if (j.contains("accuracy")) {
        cfg.accuracy = evalkit::accuracy_mode_from_string(j.at("accuracy").get<std::string>());
    }
    if (j.contains("external_qa_path")) {
        cfg.external_qa_path = j.at("external_qa_path").get<std::string>();
    }
    if (j.contains("templates_dir")) cfg.templates_dir = j.at("templates_dir").get<std::string>();
    if (j.contains("conditions")) {
        for (const auto& c : j.at("conditions")) {
            ConditionSpec spec;
            spec.task = task_from_string(c.at("task").get<std::string>());
            if (c.contains("setting") && !c.at("setting").is_null()) {
                spec.setting = setting_from_string(c.at("setting").get<std::string>());
            }
            spec.mode = mode_from_string(c.at("mode").get<std::string>());
            if (c.contains("limit")) spec.limit = c.at("limit").get<int>();
            cfg.conditions.push_back(spec);
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return run_config_from_json(j);
}

std::string condition_key(Task task, std::optional<ShuffleSetting> setting, PromptMode mode) {
    std::string s = to_string(task);
    s += "/";
    s += setting ? to_string(*setting) : "-";
    s += "/";
    s += to_string(mode);
    return s;
}

namespace {

std::set<std::string> existing_keys(const std::string& path) {
    std::set<std::string> keys;
    std::ifstream in(path);
    if (!in) return keys;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            keys.insert(j.at("instance_id").get<std::string>() + "|" +
                        j.at("condition").get<std::string>() + "|" +
                        std::to_string(j.at("run_index").get<int>()));
        } catch (...) {
            // Truncated or foreign line; the record will be regenerated.
        }
    }
    return keys;
}

struct PromptInfo {
    std::string text;
    int demo_step_tokens = 0;
};

PromptInfo build_prompt(const RunConfig& cfg, const TaskInstance& inst, PromptMode mode,
                        const std::vector<TaskInstance>& demos,
                        const promptkit::DemoTemplates& templates) {
    PromptInfo info;
    if (inst.task == Task::ExternalQA) {
        auto b = adapter::build_external_few_shot(inst, mode);
        info.text = std::move(b.text);
        info.demo_step_tokens = b.demo_step_tokens_ws;
        return info;
    }
    if (mode == PromptMode::ZeroShotCoT) {
        auto b = promptkit::build_zero_shot(inst);
        info.text = std::move(b.text);
        return info;
    }
    auto b = promptkit::build_few_shot(demos, inst, mode, cfg.symbols, templates);
    info.text = std::move(b.text);
    info.demo_step_tokens = b.demo_step_tokens_ws;
    return info;
}

class Appender {
public:
    explicit Appender(const std::string& path) : out_(path, std::ios::binary | std::ios::app) {
        if (!out_) throw std::runtime_error("cannot open results file for append: " + path);
    }
    void write(const EvalRecord& r) {
        std::lock_guard<std::mutex> lock(mu_);
        out_ << dump_canonical(to_json(r)) << "\n";
        out_.flush();
    }

private:
    std::ofstream out_;
    std::mutex mu_;
};

} // namespace

RunStats run_experiment(const RunConfig& cfg, const std::string& dataset_dir,
                        const std::string& results_path, client::ChatModel& model, int parallel) {
    cfg.validate();
    if (parallel < 1) parallel = 1;

    promptkit::DemoTemplates templates = cfg.templates_dir.empty()
                                             ? promptkit::DemoTemplates::defaults()
                                             : promptkit::DemoTemplates::load(cfg.templates_dir);

    std::set<std::string> done = existing_keys(results_path);
    Appender appender(results_path);
    RunStats stats;
    std::mutex stats_mu;

    for (const auto& cond : cfg.conditions) {
        std::vector<TaskInstance> instances =
            cond.task == Task::ExternalQA
                ? adapter::load_external_qa(cfg.external_qa_path)
                : taskgen::load_instances(dataset_dir, cond.task, cond.setting);
        if (cond.limit > 0 && static_cast<int>(instances.size()) > cond.limit) {
            instances.resize(cond.limit);
        }
        const std::string key = condition_key(cond.task, cond.setting, cond.mode);

        for (int run = 0; run < cfg.runs; ++run) {
            std::vector<TaskInstance> demos;
            if (cond.mode != PromptMode::ZeroShotCoT && cond.task != Task::ExternalQA) {
                demos = promptkit::sample_demo_set(cond.task, cond.setting, cfg.n_demos,
                                                   cfg.demo_seed + run, cfg.dataset);
            }

            std::atomic<size_t> next{0};
            auto worker = [&] {
                for (size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1)) {
                    const TaskInstance& inst = instances[i];
                    const std::string record_key = inst.id + "|" + key + "|" + std::to_string(run);
                    if (done.count(record_key)) {
                        std::lock_guard<std::mutex> lock(stats_mu);
                        stats.skipped++;
                        continue;
                    }
                    EvalRecord r;
                    r.instance_id = inst.id;
                    r.condition = key;
                    r.task = cond.task;
                    r.setting = cond.setting;
                    r.mode = cond.mode;
                    r.run_index = run;
                    try {
                        PromptInfo prompt = build_prompt(cfg, inst, cond.mode, demos, templates);
                        r.prompt_text = prompt.text;
                        r.demo_step_tokens = prompt.demo_step_tokens;
                        r.prompt_tokens =
                            evalkit::count_tokens(prompt.text, evalkit::TokenMethod::Whitespace);
                        auto completion = model.complete(prompt.text, cfg.model);
                        r.raw_completion = completion.text;
                        r.latency_ms = completion.latency_ms;
                        r.parsed = evalkit::parse_answer(inst.task, completion.text);
                        auto score = evalkit::score_answer(inst, r.parsed, cfg.accuracy);
                        r.accuracy = score.accuracy;
                        r.precision = score.precision;
                        r.recall = score.recall;
                    } catch (const client::AuthError& e) {
                        r.error = std::string("auth: ") + e.what();
                    } catch (const client::RateLimitError& e) {
                        r.error = std::string("rate_limit: ") + e.what();
                    } catch (const client::MalformedResponseError& e) {
                        r.error = std::string("malformed_response: ") + e.what();
                    } catch (const client::NetworkError& e) {
                        r.error = std::string("network: ") + e.what();
                    } catch (const client::ClientError& e) {
                        r.error = std::string("client: ") + e.what();
                    }
                    appender.write(r);
                    {
                        std::lock_guard<std::mutex> lock(stats_mu);
                        stats.completed++;
                        if (r.error) stats.errors++;
                    }
                }
            };

            if (parallel == 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < parallel; ++w) pool.emplace_back(worker);
                for (auto& th : pool) th.join();
            }
        }
    }
    return stats;
}

std::vector<EvalRecord> load_records(const std::string& path, int* skipped_lines) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open results file: " + path);
    std::vector<EvalRecord> out;
    int skipped = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(json::parse(line)));
        } catch (...) {
            skipped++;
        }
    }
    if (skipped_lines) *skipped_lines = skipped;
    return out;
}

} // namespace runner
} // namespace cosbench
