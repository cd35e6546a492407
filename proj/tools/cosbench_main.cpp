#include "cosbench/dataset_adapter.hpp"
#include "cosbench/json_io.hpp"
#include "cosbench/model_client.hpp"
#include "cosbench/promptkit.hpp"
#include "cosbench/runner.hpp"
#include "cosbench/taskgen.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace cosbench;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitPartial = 2;

taskgen::GenConfig load_gen_config(const std::string& path) {
    if (path.empty()) return taskgen::GenConfig{};
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return taskgen::gen_config_from_json(json::parse(in));
}

int do_generate(const std::string& config_path, const std::string& out_dir) {
    taskgen::GenConfig cfg = load_gen_config(config_path);
    auto manifest = taskgen::build_dataset(cfg, out_dir);
    std::cout << "dataset written to " << out_dir << " (config hash " << manifest.config_hash
              << ")\n";
    for (const auto& f : manifest.files) {
        std::cout << "  " << f.file << ": " << f.count << " instances, " << f.digest << "\n";
    }
    std::cout << "total: " << manifest.total << " instances\n";
    return kExitOk;
}

struct RunFlags {
    std::string config_path;
    std::string dataset_dir = "dataset";
    std::string results_path = "results.jsonl";
    std::string model_name;
    std::string mock_fidelity;
    std::string cache_dir;
    std::string accuracy;
    std::string external_qa;
    std::string task, setting, mode;
    int runs = 0;
    int parallel = 1;
    int n_demos = 0;
    int limit = 0;
};

runner::RunConfig assemble_run_config(const RunFlags& flags) {
    runner::RunConfig cfg;
    if (!flags.config_path.empty()) {
        cfg = runner::load_run_config(flags.config_path);
    }
    if (!flags.task.empty()) {
        runner::ConditionSpec spec;
        spec.task = task_from_string(flags.task);
        if (!flags.setting.empty()) spec.setting = setting_from_string(flags.setting);
        spec.mode = flags.mode.empty() ? PromptMode::FewShotCoS : mode_from_string(flags.mode);
        spec.limit = flags.limit;
        cfg.conditions.push_back(spec);
    }
    if (!flags.model_name.empty()) cfg.model.model_name = flags.model_name;
    if (!flags.mock_fidelity.empty()) cfg.model.model_name = "mock:" + flags.mock_fidelity;
    if (flags.runs > 0) cfg.runs = flags.runs;
    if (flags.n_demos > 0) cfg.n_demos = flags.n_demos;
    if (!flags.accuracy.empty()) {
        cfg.accuracy = evalkit::accuracy_mode_from_string(flags.accuracy);
    }
    if (!flags.external_qa.empty()) cfg.external_qa_path = flags.external_qa;
    cfg.validate();
    return cfg;
}

int do_run(const RunFlags& flags) {
    runner::RunConfig cfg = assemble_run_config(flags);
    auto model = client::make_model(cfg.model, flags.cache_dir, flags.parallel);
    auto stats = runner::run_experiment(cfg, flags.dataset_dir, flags.results_path, *model,
                                        flags.parallel);
    std::cout << "completed " << stats.completed << " records (" << stats.skipped
              << " resumed, " << stats.errors << " errors) -> " << flags.results_path << "\n";
    return stats.errors > 0 ? kExitPartial : kExitOk;
}

int do_report(const std::string& results_path, const std::string& out_prefix) {
    int skipped = 0;
    auto records = runner::load_records(results_path, &skipped);
    if (skipped > 0) {
        std::cerr << "warning: skipped " << skipped << " unparseable result lines\n";
    }
    auto report = runner::make_report(records);
    std::cout << report.text;
    if (!out_prefix.empty()) {
        std::ofstream text(out_prefix + ".txt", std::ios::trunc);
        text << report.text;
        std::ofstream machine(out_prefix + ".json", std::ios::trunc);
        machine << report.machine.dump(2) << "\n";
        std::cout << "report written to " << out_prefix << ".txt / " << out_prefix << ".json\n";
    }
    return kExitOk;
}

// Elicit free-form zero-shot rationales from a live model for the sampled
// demonstration instances; raw material for hand-curated templates.
int do_bootstrap(const std::string& task_s, const std::string& setting_s, int count,
                 uint64_t demo_seed, const std::string& model_name, const std::string& mock,
                 const std::string& out_path) {
    Task task = task_from_string(task_s);
    std::optional<ShuffleSetting> setting;
    if (!setting_s.empty()) setting = setting_from_string(setting_s);

    ModelParams params;
    params.model_name = mock.empty() ? model_name : "mock:" + mock;
    auto model = client::make_model(params);

    auto demos = promptkit::sample_demo_set(task, setting, count, demo_seed);
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    int errors = 0;
    for (const auto& inst : demos) {
        auto prompt = promptkit::build_zero_shot(inst);
        json line = {{"instance_id", inst.id}, {"prompt", prompt.text}};
        try {
            auto completion = model->complete(prompt.text, params);
            line["completion"] = completion.text;
        } catch (const client::ClientError& e) {
            line["error"] = e.what();
            errors++;
        }
        out << line.dump() << "\n";
    }
    std::cout << "wrote " << demos.size() << " bootstrap completions to " << out_path << "\n";
    return errors > 0 ? kExitPartial : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatial-planning benchmark factory and evaluation harness"};
    app.require_subcommand(1);

    // generate
    std::string gen_config, gen_out = "dataset";
    auto* gen = app.add_subcommand("generate", "Generate the evaluation dataset");
    gen->add_option("--config", gen_config, "Generation config JSON");
    gen->add_option("--out", gen_out, "Output directory");

    // run
    RunFlags flags;
    auto* run = app.add_subcommand("run", "Run an experiment matrix");
    run->add_option("--config", flags.config_path, "Run config JSON");
    run->add_option("--dataset", flags.dataset_dir, "Dataset directory");
    run->add_option("--out", flags.results_path, "Results JSONL path");
    run->add_option("--model", flags.model_name, "Model name (e.g. gpt-3.5-turbo)");
    run->add_option("--mock", flags.mock_fidelity,
                    "Use the oracle mock: perfect, drop_last_step or wrong_target");
    run->add_option("--runs", flags.runs, "Run count (distinct demo sets)");
    run->add_option("--parallel", flags.parallel, "Concurrent instance executions");
    run->add_option("--cache-dir", flags.cache_dir, "Completion cache directory");
    run->add_option("--accuracy", flags.accuracy, "Accuracy criterion: exact or simulate");
    run->add_option("--external-qa", flags.external_qa, "External QA JSONL path");
    run->add_option("--task", flags.task, "Single condition: task");
    run->add_option("--setting", flags.setting, "Single condition: shuffle setting");
    run->add_option("--mode", flags.mode, "Single condition: prompt mode");
    run->add_option("--limit", flags.limit, "Single condition: instance limit");
    run->add_option("--demos", flags.n_demos, "Demonstrations per prompt");

    // report
    std::string rep_results = "results.jsonl", rep_out;
    auto* rep = app.add_subcommand("report", "Aggregate results into tables");
    rep->add_option("--results", rep_results, "Results JSONL path");
    rep->add_option("--out", rep_out, "Output prefix (.txt/.json)");

    // bootstrap-demos
    std::string bs_task = "brick_1d", bs_setting, bs_model = "gpt-3.5-turbo", bs_mock,
                bs_out = "bootstrap.jsonl";
    int bs_count = 5;
    uint64_t bs_seed = 1000;
    auto* bs = app.add_subcommand("bootstrap-demos",
                                  "Collect zero-shot rationales for demonstration instances");
    bs->add_option("--task", bs_task, "Task");
    bs->add_option("--setting", bs_setting, "Shuffle setting (brick tasks)");
    bs->add_option("--count", bs_count, "Demonstration count");
    bs->add_option("--demo-seed", bs_seed, "Demonstration seed");
    bs->add_option("--model", bs_model, "Model name");
    bs->add_option("--mock", bs_mock, "Mock fidelity instead of a live model");
    bs->add_option("--out", bs_out, "Output JSONL path");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return do_generate(gen_config, gen_out);
        if (run->parsed()) return do_run(flags);
        if (rep->parsed()) return do_report(rep_results, rep_out);
        if (bs->parsed()) {
            return do_bootstrap(bs_task, bs_setting, bs_count, bs_seed, bs_model, bs_mock, bs_out);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPartial;
    }
    return kExitOk;
}
