#include "cosbench/hash.hpp"
#include "cosbench/json_io.hpp"
#include "cosbench/rng.hpp"
#include "cosbench/taskgen.hpp"
#include "taskgen_detail.hpp"

#include <filesystem>
#include <fstream>

namespace cosbench {
namespace taskgen {

using namespace detail;
namespace fs = std::filesystem;

json gen_config_to_json(const GenConfig& cfg) {
    return {{"seed", cfg.seed},
            {"counts",
             {{"brick_per_condition", cfg.brick_per_condition},
              {"nlvr", cfg.nlvr_count},
              {"nav", cfg.nav_count}}},
            {"brick_count_range", {cfg.brick_min, cfg.brick_max}},
            {"nav_node_range", {cfg.nav_min_nodes, cfg.nav_max_nodes}}};
}

GenConfig gen_config_from_json(const json& j) {
    GenConfig cfg;
    if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
    if (j.contains("counts")) {
        const auto& c = j.at("counts");
        if (c.contains("brick_per_condition"))
            cfg.brick_per_condition = c.at("brick_per_condition").get<int>();
        if (c.contains("nlvr")) cfg.nlvr_count = c.at("nlvr").get<int>();
        if (c.contains("nav")) cfg.nav_count = c.at("nav").get<int>();
    }
    if (j.contains("brick_count_range")) {
        cfg.brick_min = j.at("brick_count_range")[0].get<int>();
        cfg.brick_max = j.at("brick_count_range")[1].get<int>();
    }
    if (j.contains("nav_node_range")) {
        cfg.nav_min_nodes = j.at("nav_node_range")[0].get<int>();
        cfg.nav_max_nodes = j.at("nav_node_range")[1].get<int>();
    }
    cfg.validate();
    return cfg;
}

namespace {

void write_instances(const std::string& path, const std::vector<TaskInstance>& instances) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    for (const auto& inst : instances) out << dump_canonical(cosbench::to_json(inst)) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

struct ConditionPlan {
    Task task;
    std::optional<ShuffleSetting> setting;
    int count = 0;
};

std::vector<ConditionPlan> plan(const GenConfig& cfg) {
    std::vector<ConditionPlan> out;
    for (Task task : {Task::Brick1D, Task::Brick2D}) {
        for (ShuffleSetting setting :
             {ShuffleSetting::NoShuffle, ShuffleSetting::ShuffleDescription,
              ShuffleSetting::ShuffleLabel, ShuffleSetting::ShuffleBoth}) {
            out.push_back({task, setting, cfg.brick_per_condition});
        }
    }
    out.push_back({Task::Nlvr, std::nullopt, cfg.nlvr_count});
    out.push_back({Task::Nav, std::nullopt, cfg.nav_count});
    return out;
}

} // namespace

std::string condition_file_name(Task task, std::optional<ShuffleSetting> setting) {
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D:
            if (!setting) throw ConfigError("brick conditions need a shuffle setting");
            return std::string(to_string(task)) + "_" + to_string(*setting) + ".jsonl";
        case Task::Nlvr: return "nlvr.jsonl";
        case Task::Nav: return "nav.jsonl";
        case Task::ExternalQA: throw ConfigError("external QA instances are not dataset files");
    }
    throw std::logic_error("bad task");
}

TaskInstance generate_for(Task task, std::optional<ShuffleSetting> setting, uint64_t seed,
                          const GenConfig& cfg) {
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D: {
            Dimension dim = task == Task::Brick2D ? Dimension::D2 : Dimension::D1;
            auto [lo, hi] = brick_range(cfg, dim);
            Rng rng(mix_seed(seed, kTagSize));
            int n = rng.range(lo, hi);
            return gen_brick(seed, n, dim, *setting, cfg);
        }
        case Task::Nlvr: return gen_nlvr(seed, cfg);
        case Task::Nav: return gen_nav(seed, cfg);
        case Task::ExternalQA: throw ConfigError("external QA instances are loaded, not generated");
    }
    throw std::logic_error("bad task");
}

Manifest build_dataset(const GenConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output dir " + out_dir + ": " + ec.message());

    Manifest manifest;
    manifest.config = cfg;
    manifest.config_hash = short_hash(dump_canonical(gen_config_to_json(cfg)));

    for (const auto& cond : plan(cfg)) {
        std::vector<TaskInstance> instances;
        instances.reserve(cond.count);
        int tag = cond.setting ? static_cast<int>(*cond.setting) : 15;
        for (int i = 0; i < cond.count; ++i) {
            uint64_t seed = eval_instance_seed(cfg.seed, cond.task, tag, i);
            instances.push_back(generate_for(cond.task, cond.setting, seed, cfg));
        }
        std::string file = condition_file_name(cond.task, cond.setting);
        std::string path = (fs::path(out_dir) / file).string();
        write_instances(path, instances);
        manifest.files.push_back({file, cond.task, cond.setting, cond.count, file_digest(path)});
        manifest.total += cond.count;
    }

    json files = json::array();
    for (const auto& f : manifest.files) {
        json entry = {{"file", f.file},
                      {"task", to_string(f.task)},
                      {"count", f.count},
                      {"digest", f.digest}};
        entry["setting"] = f.setting ? json(to_string(*f.setting)) : json(nullptr);
        files.push_back(entry);
    }
    json j = {{"schema_version", 1},
              {"config", gen_config_to_json(cfg)},
              {"config_hash", manifest.config_hash},
              {"total", manifest.total},
              {"files", files}};
    std::ofstream out(fs::path(out_dir) / "manifest.json", std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write manifest in " + out_dir);
    out << j.dump(2) << "\n";
    return manifest;
}

Manifest read_manifest(const std::string& dataset_dir) {
    std::ifstream in(fs::path(dataset_dir) / "manifest.json");
    if (!in) throw std::runtime_error("no manifest.json in " + dataset_dir);
    json j = json::parse(in);
    Manifest m;
    m.config = gen_config_from_json(j.at("config"));
    m.config_hash = j.at("config_hash").get<std::string>();
    m.total = j.at("total").get<int>();
    for (const auto& f : j.at("files")) {
        ManifestFile mf;
        mf.file = f.at("file").get<std::string>();
        mf.task = task_from_string(f.at("task").get<std::string>());
        if (!f.at("setting").is_null()) {
            mf.setting = setting_from_string(f.at("setting").get<std::string>());
        }
        mf.count = f.at("count").get<int>();
        mf.digest = f.at("digest").get<std::string>();
        m.files.push_back(mf);
    }
    return m;
}

std::vector<TaskInstance> load_instances(const std::string& dataset_dir, Task task,
                                         std::optional<ShuffleSetting> setting) {
    std::string path = (fs::path(dataset_dir) / condition_file_name(task, setting)).string();
    std::vector<TaskInstance> out;
    for (const auto& j : read_jsonl(path)) out.push_back(instance_from_json(j));
    return out;
}

} // namespace taskgen
} // namespace cosbench
