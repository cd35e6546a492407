#include "cosbench/json_io.hpp"

#include "cosbench/hash.hpp"

#include <fstream>
#include <stdexcept>

namespace cosbench {

namespace {

std::string letter(char c) { return std::string(1, c); }

char letter_from(const json& j) {
    const auto s = j.get<std::string>();
    if (s.size() != 1) throw std::runtime_error("expected single-letter id, got '" + s + "'");
    return s[0];
}

} // namespace

json to_json(const BrickScene& s) {
    BrickScene c = s;
    c.sort_canonical();
    json bricks = json::array();
    for (const auto& b : c.bricks) {
        bricks.push_back({{"label", letter(b.label)}, {"color", to_string(b.color)}});
    }
    json on_top = json::array();
    for (const auto& [u, l] : c.on_top) on_top.push_back({letter(u), letter(l)});
    json in_front = json::array();
    for (const auto& [f, b] : c.in_front) in_front.push_back({letter(f), letter(b)});
    return {{"dimension", to_string(c.dimension)},
            {"bricks", bricks},
            {"on_top", on_top},
            {"in_front", in_front}};
}

BrickScene brick_scene_from_json(const json& j) {
    BrickScene s;
    s.dimension = dimension_from_string(j.at("dimension").get<std::string>());
    for (const auto& b : j.at("bricks")) {
        s.bricks.push_back(
            {letter_from(b.at("label")), brick_color_from_string(b.at("color").get<std::string>())});
    }
    for (const auto& e : j.at("on_top")) s.on_top.emplace_back(letter_from(e[0]), letter_from(e[1]));
    for (const auto& e : j.at("in_front")) s.in_front.emplace_back(letter_from(e[0]), letter_from(e[1]));
    s.sort_canonical();
    return s;
}

json to_json(const NlvrScene& s) {
    NlvrScene c = s;
    c.sort_canonical();
    json objects = json::array();
    for (const auto& o : c.objects) {
        objects.push_back({{"size", to_string(o.size)},
                           {"shape", to_string(o.shape)},
                           {"color", to_string(o.color)},
                           {"box", to_string(o.box)},
                           {"ordinal", o.ordinal}});
    }
    return {{"objects", objects}};
}

NlvrScene nlvr_scene_from_json(const json& j) {
    NlvrScene s;
    for (const auto& o : j.at("objects")) {
        s.objects.push_back({size_from_string(o.at("size").get<std::string>()),
                             shape_from_string(o.at("shape").get<std::string>()),
                             object_color_from_string(o.at("color").get<std::string>()),
                             box_from_string(o.at("box").get<std::string>()),
                             o.at("ordinal").get<int>()});
    }
    s.sort_canonical();
    return s;
}

json to_json(const NavMap& m) {
    NavMap c = m;
    c.sort_canonical();
    json nodes = json::array();
    for (const auto& n : c.nodes) {
        nodes.push_back({{"id", letter(n.id)}, {"kind", to_string(n.kind)}});
    }
    json edges = json::array();
    for (const auto& e : c.edges) {
        edges.push_back(
            {{"from", letter(e.parent)}, {"to", letter(e.child)}, {"distance_m", e.distance_m}});
    }
    return {{"root", letter(c.root)}, {"nodes", nodes}, {"edges", edges}};
}

NavMap nav_map_from_json(const json& j) {
    NavMap m;
    m.root = letter_from(j.at("root"));
    for (const auto& n : j.at("nodes")) {
        m.nodes.push_back({letter_from(n.at("id")), kind_from_string(n.at("kind").get<std::string>())});
    }
    for (const auto& e : j.at("edges")) {
        m.edges.push_back(
            {letter_from(e.at("from")), letter_from(e.at("to")), e.at("distance_m").get<int>()});
    }
    m.sort_canonical();
    return m;
}

json to_json(const Scene& s) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ExternalStory>) {
                return {{"story", v.story}};
            } else {
                return to_json(v);
            }
        },
        s);
}

Scene scene_from_json(Task task, const json& j) {
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D: return brick_scene_from_json(j);
        case Task::Nlvr: return nlvr_scene_from_json(j);
        case Task::Nav: return nav_map_from_json(j);
        case Task::ExternalQA: return ExternalStory{j.at("story").get<std::string>()};
    }
    throw std::runtime_error("bad task");
}

json to_json(const Query& q) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BrickQuery>) {
                return {{"target", letter(v.target)}};
            } else if constexpr (std::is_same_v<T, NlvrQuery>) {
                json cond;
                std::visit(
                    [&](const auto& val) {
                        using V = std::decay_t<decltype(val)>;
                        if constexpr (std::is_same_v<V, ObjectSize>) cond = {{"size", to_string(val)}};
                        if constexpr (std::is_same_v<V, ObjectShape>) cond = {{"shape", to_string(val)}};
                        if constexpr (std::is_same_v<V, ObjectColor>) cond = {{"color", to_string(val)}};
                    },
                    v.value);
                cond["target_box"] = to_string(v.target_box);
                return cond;
            } else if constexpr (std::is_same_v<T, NavQuery>) {
                return {{"kind", to_string(v.kind)}};
            } else {
                return {{"candidates", v.candidates}};
            }
        },
        q);
}

Query query_from_json(Task task, const json& j) {
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D: return BrickQuery{letter_from(j.at("target"))};
        case Task::Nlvr: {
            NlvrQuery q;
            if (j.contains("size")) q.value = size_from_string(j.at("size").get<std::string>());
            else if (j.contains("shape")) q.value = shape_from_string(j.at("shape").get<std::string>());
            else if (j.contains("color"))
                q.value = object_color_from_string(j.at("color").get<std::string>());
            else throw std::runtime_error("nlvr query missing condition");
            q.target_box = box_from_string(j.at("target_box").get<std::string>());
            return q;
        }
        case Task::Nav: return NavQuery{kind_from_string(j.at("kind").get<std::string>())};
        case Task::ExternalQA: {
            ExternalQuery q;
            q.candidates = j.at("candidates").get<std::vector<std::string>>();
            return q;
        }
    }
    throw std::runtime_error("bad task");
}

json to_json(const GoldAnswer& g) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BrickGold>) {
                json seq = json::array();
                for (char c : v.sequence) seq.push_back(letter(c));
                return {{"sequence", seq}};
            } else if constexpr (std::is_same_v<T, NlvrGold>) {
                json moves = json::array();
                for (const auto& m : v.moves) {
                    moves.push_back({{"size", to_string(m.size)},
                                     {"shape", to_string(m.shape)},
                                     {"color", to_string(m.color)},
                                     {"from", to_string(m.from)},
                                     {"ordinal", m.ordinal}});
                }
                return {{"moves", moves}};
            } else if constexpr (std::is_same_v<T, NavGold>) {
                json path = json::array();
                for (char c : v.path) path.push_back(letter(c));
                return {{"path", path}, {"distance_m", v.distance_m}};
            } else {
                return {{"option", v.option}};
            }
        },
        g);
}

GoldAnswer gold_from_json(Task task, const json& j) {
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D: {
            BrickGold g;
            for (const auto& c : j.at("sequence")) g.sequence.push_back(letter_from(c));
            return g;
        }
        case Task::Nlvr: {
            NlvrGold g;
            for (const auto& m : j.at("moves")) {
                g.moves.push_back({size_from_string(m.at("size").get<std::string>()),
                                   shape_from_string(m.at("shape").get<std::string>()),
                                   object_color_from_string(m.at("color").get<std::string>()),
                                   box_from_string(m.at("from").get<std::string>()),
                                   m.at("ordinal").get<int>()});
            }
            return g;
        }
        case Task::Nav: {
            NavGold g;
            for (const auto& c : j.at("path")) g.path.push_back(letter_from(c));
            g.distance_m = j.at("distance_m").get<int>();
            return g;
        }
        case Task::ExternalQA: return OptionGold{j.at("option").get<std::string>()};
    }
    throw std::runtime_error("bad task");
}

json to_json(const TaskInstance& inst) {
    json j = {{"schema_version", 1},
              {"id", inst.id},
              {"task", to_string(inst.task)},
              {"scene", to_json(inst.scene)},
              {"description", inst.description},
              {"question", inst.question},
              {"query", to_json(inst.query)},
              {"gold", to_json(inst.gold)},
              {"seed", inst.seed}};
    j["setting"] = inst.setting ? json(to_string(*inst.setting)) : json(nullptr);
    if (!inst.meta.empty()) j["meta"] = inst.meta;
    return j;
}

TaskInstance instance_from_json(const json& j) {
    TaskInstance inst;
    inst.id = j.at("id").get<std::string>();
    inst.task = task_from_string(j.at("task").get<std::string>());
    if (j.contains("setting") && !j.at("setting").is_null()) {
        inst.setting = setting_from_string(j.at("setting").get<std::string>());
    }
    inst.scene = scene_from_json(inst.task, j.at("scene"));
    inst.description = j.at("description").get<std::string>();
    inst.question = j.at("question").get<std::string>();
    inst.query = query_from_json(inst.task, j.at("query"));
    inst.gold = gold_from_json(inst.task, j.at("gold"));
    inst.seed = j.at("seed").get<uint64_t>();
    if (j.contains("meta")) inst.meta = j.at("meta").get<std::map<std::string, std::string>>();
    return inst;
}

json to_json(const SymbolConfig& s) {
    return {{"on_top", s.on_top},           {"in_front", s.in_front},
            {"path_sep", s.path_sep},       {"list_sep", s.list_sep},
            {"triplet_open", s.triplet_open}, {"triplet_close", s.triplet_close}};
}

SymbolConfig symbol_config_from_json(const json& j) {
    SymbolConfig s;
    if (j.contains("on_top")) s.on_top = j.at("on_top").get<std::string>();
    if (j.contains("in_front")) s.in_front = j.at("in_front").get<std::string>();
    if (j.contains("path_sep")) s.path_sep = j.at("path_sep").get<std::string>();
    if (j.contains("list_sep")) s.list_sep = j.at("list_sep").get<std::string>();
    if (j.contains("triplet_open")) s.triplet_open = j.at("triplet_open").get<std::string>();
    if (j.contains("triplet_close")) s.triplet_close = j.at("triplet_close").get<std::string>();
    s.validate();
    return s;
}

json to_json(const ModelParams& p) {
    return {{"model_name", p.model_name},
            {"temperature", p.temperature},
            {"max_tokens", p.max_tokens},
            {"endpoint_url", p.endpoint_url}};
}

ModelParams model_params_from_json(const json& j) {
    ModelParams p;
    if (j.contains("model_name")) p.model_name = j.at("model_name").get<std::string>();
    if (j.contains("temperature")) p.temperature = j.at("temperature").get<double>();
    if (j.contains("max_tokens")) p.max_tokens = j.at("max_tokens").get<int>();
    if (j.contains("endpoint_url")) p.endpoint_url = j.at("endpoint_url").get<std::string>();
    p.validate();
    return p;
}

json to_json(const EvalRecord& r) {
    json j = {{"schema_version", 1},
              {"instance_id", r.instance_id},
              {"condition", r.condition},
              {"task", to_string(r.task)},
              {"mode", to_string(r.mode)},
              {"run_index", r.run_index},
              {"prompt_text", r.prompt_text},
              {"raw_completion", r.raw_completion},
              {"accuracy", r.accuracy},
              {"precision", r.precision},
              {"recall", r.recall},
              {"prompt_tokens", r.prompt_tokens},
              {"demo_step_tokens", r.demo_step_tokens},
              {"latency_ms", r.latency_ms}};
    j["setting"] = r.setting ? json(to_string(*r.setting)) : json(nullptr);
    j["parsed"] = r.parsed ? to_json(*r.parsed) : json(nullptr);
    j["error"] = r.error ? json(*r.error) : json(nullptr);
    return j;
}

EvalRecord record_from_json(const json& j) {
    EvalRecord r;
    r.instance_id = j.at("instance_id").get<std::string>();
    r.condition = j.at("condition").get<std::string>();
    r.task = task_from_string(j.at("task").get<std::string>());
    if (!j.at("setting").is_null()) r.setting = setting_from_string(j.at("setting").get<std::string>());
    r.mode = mode_from_string(j.at("mode").get<std::string>());
    r.run_index = j.at("run_index").get<int>();
    r.prompt_text = j.at("prompt_text").get<std::string>();
    r.raw_completion = j.at("raw_completion").get<std::string>();
    if (!j.at("parsed").is_null()) r.parsed = gold_from_json(r.task, j.at("parsed"));
    r.accuracy = j.at("accuracy").get<int>();
    r.precision = j.at("precision").get<double>();
    r.recall = j.at("recall").get<double>();
    r.prompt_tokens = j.at("prompt_tokens").get<int>();
    r.demo_step_tokens = j.at("demo_step_tokens").get<int>();
    r.latency_ms = j.at("latency_ms").get<double>();
    if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
    return r;
}

json to_json(const MetricRow& row) {
    json j = {{"condition", row.condition},
              {"task", to_string(row.task)},
              {"mode", to_string(row.mode)},
              {"n", row.n},
              {"runs", row.runs},
              {"errors", row.errors},
              {"accuracy_mean", row.accuracy_mean},
              {"precision_mean", row.precision_mean},
              {"recall_mean", row.recall_mean}};
    j["setting"] = row.setting ? json(to_string(*row.setting)) : json(nullptr);
    j["accuracy_std"] = row.accuracy_std ? json(*row.accuracy_std) : json(nullptr);
    j["precision_std"] = row.precision_std ? json(*row.precision_std) : json(nullptr);
    j["recall_std"] = row.recall_std ? json(*row.recall_std) : json(nullptr);
    j["demo_step_tokens"] = row.demo_step_tokens ? json(*row.demo_step_tokens) : json(nullptr);
    return j;
}

std::string instance_identity_json(const TaskInstance& inst) {
    json j = {{"task", to_string(inst.task)},
              {"setting", inst.setting ? json(to_string(*inst.setting)) : json(nullptr)},
              {"scene", to_json(inst.scene)},
              {"question", inst.question}};
    return dump_canonical(j);
}

std::string dump_canonical(const json& j) { return j.dump(); }

std::vector<json> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<json> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(json::parse(line));
        } catch (const json::parse_error& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void write_jsonl(const std::string& path, const std::vector<json>& lines) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& j : lines) out << dump_canonical(j) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace cosbench
