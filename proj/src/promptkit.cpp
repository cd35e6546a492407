#include "cosbench/promptkit.hpp"

#include "cosbench/evalkit.hpp"
#include "cosbench/json_io.hpp"
#include "cosbench/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cosbench {
namespace promptkit {

std::string subst(const std::string& tpl,
                  const std::vector<std::pair<std::string, std::string>>& vars) {
    std::string out = tpl;
    for (const auto& [name, value] : vars) {
        const std::string needle = "{" + name + "}";
        size_t pos = 0;
        while ((pos = out.find(needle, pos)) != std::string::npos) {
            out.replace(pos, needle.size(), value);
            pos += value.size();
        }
    }
    return out;
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::ostringstream ss;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) ss << sep;
        ss << parts[i];
    }
    return ss.str();
}

std::string join_lines(const std::vector<std::string>& lines) { return join(lines, "\n"); }

std::string label_list(const std::vector<char>& labels, const std::string& sep = ", ") {
    std::vector<std::string> parts;
    for (char c : labels) parts.emplace_back(1, c);
    return join(parts, sep);
}

// "store B and store G" / "store B, store D and store G"
std::string name_list(const std::vector<std::string>& names) {
    if (names.empty()) return "";
    if (names.size() == 1) return names[0];
    std::vector<std::string> head(names.begin(), names.end() - 1);
    return join(head, ", ") + " and " + names.back();
}

const char* number_word(size_t n) {
    static const char* words[] = {"zero", "one", "two",   "three", "four",
                                  "five", "six", "seven", "eight", "nine"};
    return n < 10 ? words[n] : "many";
}

std::string answer_list(const std::vector<char>& seq, const SymbolConfig* symbols) {
    std::string sep = symbols ? symbols->list_sep + " " : ", ";
    return label_list(seq, sep);
}

// ---------------------------------------------------------------------------
// Brick demonstrations
// ---------------------------------------------------------------------------

Demonstration brick1d_cot(const TaskInstance& inst, const DemoTemplates& t) {
    const auto& scene = std::get<BrickScene>(inst.scene);
    const auto& gold = std::get<BrickGold>(inst.gold).sequence;
    char target = std::get<BrickQuery>(inst.query).target;

    std::vector<char> stack = taskgen::brick_stack(scene, taskgen::brick_base_chain(scene)[0]);
    std::vector<std::string> lines;
    lines.push_back(subst(t.b1_cot_stack, {{"labels", label_list(stack)}}));
    int index = 1;
    for (size_t i = 0; i + 1 < gold.size(); ++i) {
        lines.push_back(subst(t.b1_cot_remove, {{"index", std::to_string(index++)},
                                                {"upper", std::string(1, gold[i])},
                                                {"lower", std::string(1, gold[i + 1])}}));
    }
    lines.push_back(subst(t.b1_cot_grab, {{"index", std::to_string(index)},
                                          {"target", std::string(1, target)},
                                          {"color", to_string(scene.color_of(target))}}));
    Demonstration d;
    d.steps = join_lines(lines);
    d.final_answer = subst(t.b1_cot_final, {{"answer", answer_list(gold, nullptr)}});
    return d;
}

Demonstration brick1d_cos(const TaskInstance& inst, const SymbolConfig& sym,
                          const DemoTemplates& t) {
    const auto& scene = std::get<BrickScene>(inst.scene);
    const auto& gold = std::get<BrickGold>(inst.gold).sequence;

    std::vector<char> stack = taskgen::brick_stack(scene, taskgen::brick_base_chain(scene)[0]);
    std::vector<char> top_down(stack.rbegin(), stack.rend());
    std::vector<std::string> lines;
    for (size_t i = 0; i + 1 < top_down.size(); ++i) {
        lines.push_back(subst(t.b1_cos_relation, {{"upper", std::string(1, top_down[i])},
                                                  {"on_top", sym.on_top},
                                                  {"lower", std::string(1, top_down[i + 1])}}));
    }
    lines.push_back(subst(t.b1_cos_sum, {{"chain", label_list(top_down, sym.on_top)}}));
    Demonstration d;
    d.steps = join_lines(lines);
    d.final_answer = subst(t.b1_cos_final, {{"answer", answer_list(gold, &sym)}});
    return d;
}

Demonstration brick2d_cot(const TaskInstance& inst, const DemoTemplates& t) {
    const auto& scene = std::get<BrickScene>(inst.scene);
    const auto& gold = std::get<BrickGold>(inst.gold).sequence;
    char target = std::get<BrickQuery>(inst.query).target;

    std::vector<std::string> lines;
    lines.push_back(t.b2_cot_intro);
    Demonstration d;
    if (gold.size() == 1) {
        lines.push_back(subst(t.b2_cot_found_direct,
                              {{"index", "1"}, {"target", std::string(1, target)}}));
        d.steps = join_lines(lines);
        d.final_answer = subst(t.b2_cot_final_direct, {{"target", std::string(1, target)}});
        return d;
    }
    // Bottom-up discovery from the target, then top-down removals.
    std::vector<char> removals(gold.begin(), gold.end() - 1);
    int index = 1;
    for (size_t i = removals.size(); i-- > 0;) {
        char upper = removals[i];
        char lower = i + 1 < removals.size() ? removals[i + 1] : target;
        if (i + 1 == removals.size()) {
            lines.push_back(subst(t.b2_cot_found_first, {{"index", std::to_string(index++)},
                                                         {"target", std::string(1, target)},
                                                         {"upper", std::string(1, upper)}}));
        } else {
            lines.push_back(subst(t.b2_cot_found_next, {{"index", std::to_string(index++)},
                                                        {"upper", std::string(1, upper)},
                                                        {"lower", std::string(1, lower)}}));
        }
    }
    for (size_t i = 0; i < removals.size(); ++i) {
        char lower = i + 1 < removals.size() ? removals[i + 1] : target;
        lines.push_back(subst(t.b2_cot_remove, {{"index", std::to_string(index++)},
                                                {"upper", std::string(1, removals[i])},
                                                {"lower", std::string(1, lower)}}));
    }
    lines.push_back(subst(t.b2_cot_accessible,
                          {{"index", std::to_string(index)}, {"target", std::string(1, target)}}));
    d.steps = join_lines(lines);
    d.final_answer = subst(t.b2_cot_final, {{"answer", answer_list(gold, nullptr)}});
    return d;
}

Demonstration brick2d_cos(const TaskInstance& inst, const SymbolConfig& sym,
                          const DemoTemplates& t) {
    const auto& scene = std::get<BrickScene>(inst.scene);
    const auto& gold = std::get<BrickGold>(inst.gold).sequence;
    char target = std::get<BrickQuery>(inst.query).target;

    std::vector<std::string> lines;
    lines.push_back(t.b2_cos_intro);
    std::vector<char> base = taskgen::brick_base_chain(scene);
    if (base.size() > 1) {
        std::vector<char> front_first(base.rbegin(), base.rend());
        lines.push_back(subst(t.b2_cos_chain, {{"chain", label_list(front_first, sym.in_front)}}));
    }
    for (char b : base) {
        std::vector<char> stack = taskgen::brick_stack(scene, b);
        if (stack.size() < 2) continue;
        lines.push_back(subst(t.b2_cos_chain, {{"chain", label_list(stack, sym.on_top)}}));
    }
    Demonstration d;
    d.steps = join_lines(lines);
    if (gold.size() == 1) {
        d.final_answer = subst(t.b2_cos_final_direct, {{"target", std::string(1, target)}});
    } else {
        d.final_answer = subst(t.b2_cos_final, {{"answer", answer_list(gold, &sym)}});
    }
    return d;
}

// ---------------------------------------------------------------------------
// Navigation demonstrations
// ---------------------------------------------------------------------------

struct NavCandidate {
    char node;
    std::vector<char> path;
    int distance = 0;
};

// Candidates of the queried kind in depth-first (description) order.
std::vector<NavCandidate> nav_candidates(const NavMap& map, LandmarkKind kind) {
    std::vector<NavCandidate> out;
    struct Walker {
        const NavMap& map;
        LandmarkKind kind;
        std::vector<NavCandidate>& out;
        std::vector<char> path;
        void walk(char node, int dist) {
            if (node != map.root && map.kind_of(node) == kind) out.push_back({node, path, dist});
            for (const auto& e : map.edges) {
                if (e.parent != node) continue;
                path.push_back(e.child);
                walk(e.child, dist + e.distance_m);
                path.pop_back();
            }
        }
    };
    Walker w{map, kind, out, {map.root}};
    w.walk(map.root, 0);
    return out;
}

std::string route_names(const NavMap& map, const std::vector<char>& path, const std::string& sep) {
    std::vector<std::string> names;
    for (char c : path) names.push_back(taskgen::landmark_name(map, c));
    return join(names, sep);
}

std::string plain_sum(const NavMap& map, const std::vector<char>& path, int total) {
    std::vector<std::string> parts;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        for (const auto& e : map.edges) {
            if (e.parent == path[i] && e.child == path[i + 1]) {
                parts.push_back(std::to_string(e.distance_m));
            }
        }
    }
    if (parts.size() == 1) return parts[0];
    return join(parts, " + ") + " = " + std::to_string(total);
}

std::string meters_sum(const NavMap& map, const std::vector<char>& path, int total) {
    std::vector<std::string> parts;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        for (const auto& e : map.edges) {
            if (e.parent == path[i] && e.child == path[i + 1]) {
                parts.push_back(std::to_string(e.distance_m) + " meters");
            }
        }
    }
    if (parts.size() == 1) return parts[0];
    return join(parts, " + ") + " = " + std::to_string(total) + " meters";
}

Demonstration nav_cos(const TaskInstance& inst, const SymbolConfig& sym, const DemoTemplates& t) {
    const auto& map = std::get<NavMap>(inst.scene);
    const auto& gold = std::get<NavGold>(inst.gold);
    LandmarkKind kind = std::get<NavQuery>(inst.query).kind;

    auto candidates = nav_candidates(map, kind);
    std::vector<std::string> lines;
    std::vector<std::string> names;
    for (const auto& c : candidates) names.push_back(taskgen::landmark_name(map, c.node));
    if (candidates.size() == 1) {
        lines.push_back(subst(t.nav_cos_count_single, {{"kind", to_string(kind)},
                                                       {"name", names[0]}}));
    } else {
        lines.push_back(subst(t.nav_cos_count, {{"count", number_word(candidates.size())},
                                                {"kind", to_string(kind)},
                                                {"list", name_list(names)}}));
    }
    const std::string sep = " " + sym.path_sep + " ";
    for (const auto& c : candidates) {
        lines.push_back(subst(t.nav_cos_route, {{"route", route_names(map, c.path, sep)},
                                                {"sums", plain_sum(map, c.path, c.distance)}}));
    }
    lines.push_back(subst(t.nav_cos_result, {{"route", route_names(map, gold.path, sep)}}));

    Demonstration d;
    d.steps = join_lines(lines);
    d.final_answer = subst(t.nav_cos_final,
                           {{"letters", std::string(gold.path.begin(), gold.path.end())}});
    return d;
}

Demonstration nav_cot(const TaskInstance& inst, const DemoTemplates& t) {
    const auto& map = std::get<NavMap>(inst.scene);
    const auto& gold = std::get<NavGold>(inst.gold);
    LandmarkKind kind = std::get<NavQuery>(inst.query).kind;

    auto candidates = nav_candidates(map, kind);
    std::string root = taskgen::landmark_name(map, map.root);
    std::vector<std::string> lines;
    lines.push_back(t.nav_cot_intro);
    lines.push_back(subst(t.nav_cot_start, {{"root", root}}));
    std::vector<std::string> names;
    for (const auto& c : candidates) names.push_back(taskgen::landmark_name(map, c.node));
    if (candidates.size() == 1) {
        lines.push_back(subst(t.nav_cot_count_single, {{"kind", to_string(kind)},
                                                       {"name", names[0]}}));
    } else {
        lines.push_back(subst(t.nav_cot_count, {{"count", number_word(candidates.size())},
                                                {"kind", to_string(kind)},
                                                {"list", name_list(names)}}));
    }
    int index = 3;
    for (const auto& c : candidates) {
        lines.push_back(subst(t.nav_cot_route,
                              {{"index", std::to_string(index++)},
                               {"root", root},
                               {"candidate", taskgen::landmark_name(map, c.node)},
                               {"stops", route_names(map, c.path, " to ")},
                               {"sums", meters_sum(map, c.path, c.distance)}}));
    }
    lines.push_back(subst(t.nav_cot_conclusion,
                          {{"index", std::to_string(index)},
                           {"kind", to_string(kind)},
                           {"root", root},
                           {"target", taskgen::landmark_name(map, gold.path.back())}}));
    Demonstration d;
    d.steps = join_lines(lines);
    d.final_answer = subst(t.nav_cot_final,
                           {{"letters", std::string(gold.path.begin(), gold.path.end())}});
    return d;
}

// ---------------------------------------------------------------------------
// Manipulation demonstrations
// ---------------------------------------------------------------------------

std::string triplet(const NlvrMove& m, const SymbolConfig& sym) {
    const std::string sep = sym.list_sep + " ";
    return sym.triplet_open + to_string(m.size) + sep + to_string(m.shape) + sep +
           to_string(m.color) + sym.triplet_close;
}

std::vector<NlvrMove> nlvr_matches(const NlvrScene& scene, const NlvrValue& value) {
    auto matches = [&](const NlvrObject& o) {
        return std::visit(
            [&](const auto& v) {
                using V = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<V, ObjectSize>) return o.size == v;
                else if constexpr (std::is_same_v<V, ObjectShape>) return o.shape == v;
                else return o.color == v;
            },
            value);
    };
    std::vector<NlvrMove> out;
    for (const auto& o : scene.objects) {
        if (matches(o)) out.push_back({o.size, o.shape, o.color, o.box, o.ordinal});
    }
    std::sort(out.begin(), out.end(), [](const NlvrMove& a, const NlvrMove& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.size != b.size) return a.size < b.size;
        return a.ordinal < b.ordinal;
    });
    return out;
}

std::string nlvr_plural(const NlvrValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ObjectShape>) return std::string(to_string(x)) + "s";
            else return std::string(to_string(x)) + " objects";
        },
        v);
}

Demonstration nlvr_cos(const TaskInstance& inst, const SymbolConfig& sym, const DemoTemplates& t) {
    const auto& scene = std::get<NlvrScene>(inst.scene);
    const auto& gold = std::get<NlvrGold>(inst.gold);
    const auto& query = std::get<NlvrQuery>(inst.query);
    const std::string box = to_string(query.target_box);

    std::vector<std::string> lines;
    lines.push_back(subst(t.nlvr_cos_identify_intro,
                          {{"condition", taskgen::nlvr_condition_phrase(query.value)},
                           {"box", box},
                           {"value", taskgen::nlvr_value_word(query.value)}}));
    auto matches = nlvr_matches(scene, query.value);
    for (BoxPos b : {BoxPos::Left, BoxPos::Middle, BoxPos::Right}) {
        std::vector<std::string> triplets;
        for (const auto& m : matches) {
            if (m.from == b) triplets.push_back(triplet(m, sym));
        }
        if (triplets.empty()) continue;
        lines.push_back(subst(t.nlvr_cos_identify,
                              {{"frombox", to_string(b)}, {"triplets", join(triplets, ", ")}}));
    }
    lines.push_back(subst(t.nlvr_cos_move_intro, {{"box", box}}));

    std::vector<std::string> moves;
    int index = 1;
    for (const auto& m : gold.moves) {
        moves.push_back(subst(t.nlvr_cos_move, {{"index", std::to_string(index++)},
                                                {"triplet", triplet(m, sym)},
                                                {"from", to_string(m.from)},
                                                {"to", box}}));
    }
    Demonstration d;
    d.steps = join_lines(lines);
    d.final_answer = join_lines(moves);
    return d;
}

Demonstration nlvr_cot(const TaskInstance& inst, const DemoTemplates& t) {
    const auto& scene = std::get<NlvrScene>(inst.scene);
    const auto& gold = std::get<NlvrGold>(inst.gold);
    const auto& query = std::get<NlvrQuery>(inst.query);
    const std::string box = to_string(query.target_box);

    std::vector<std::string> lines;
    lines.push_back(subst(t.nlvr_cot_identify_intro,
                          {{"condition", taskgen::nlvr_condition_phrase(query.value)},
                           {"box", box},
                           {"value", taskgen::nlvr_value_word(query.value)}}));
    for (const auto& m : nlvr_matches(scene, query.value)) {
        lines.push_back(subst(t.nlvr_cot_identify, {{"size", to_string(m.size)},
                                                    {"shape", to_string(m.shape)},
                                                    {"color", to_string(m.color)},
                                                    {"frombox", to_string(m.from)}}));
    }
    lines.push_back(subst(t.nlvr_cot_move_intro, {{"box", box}}));

    std::vector<std::string> moves;
    int index = 1;
    for (const auto& m : gold.moves) {
        moves.push_back(subst(t.nlvr_cot_move, {{"index", std::to_string(index++)},
                                                {"size", to_string(m.size)},
                                                {"shape", to_string(m.shape)},
                                                {"color", to_string(m.color)},
                                                {"from", to_string(m.from)},
                                                {"to", box}}));
    }
    moves.push_back(subst(t.nlvr_cot_outro,
                          {{"plural", nlvr_plural(query.value)}, {"box", box}}));
    Demonstration d;
    d.steps = join_lines(lines);
    d.final_answer = join_lines(moves);
    return d;
}

} // namespace

Demonstration synthesize_cot_demo(const TaskInstance& inst, const DemoTemplates& t) {
    switch (inst.task) {
        case Task::Brick1D: return brick1d_cot(inst, t);
        case Task::Brick2D: return brick2d_cot(inst, t);
        case Task::Nav: return nav_cot(inst, t);
        case Task::Nlvr: return nlvr_cot(inst, t);
        case Task::ExternalQA:
            throw ConfigError("external QA demonstrations are shipped, not synthesized");
    }
    throw std::logic_error("bad task");
}

Demonstration synthesize_cos_demo(const TaskInstance& inst, const SymbolConfig& symbols,
                                  const DemoTemplates& t) {
    symbols.validate();
    switch (inst.task) {
        case Task::Brick1D: return brick1d_cos(inst, symbols, t);
        case Task::Brick2D: return brick2d_cos(inst, symbols, t);
        case Task::Nav: return nav_cos(inst, symbols, t);
        case Task::Nlvr: return nlvr_cos(inst, symbols, t);
        case Task::ExternalQA:
            throw ConfigError("external QA demonstrations are shipped, not synthesized");
    }
    throw std::logic_error("bad task");
}

std::string canonical_final_answer(Task task, const GoldAnswer& gold, const Query& query) {
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D: {
            const auto& g = std::get<BrickGold>(gold);
            return "So we get the result as " + label_list(g.sequence) + ".";
        }
        case Task::Nav: {
            const auto& g = std::get<NavGold>(gold);
            return "So the answer is " + std::string(g.path.begin(), g.path.end());
        }
        case Task::Nlvr: {
            const auto& g = std::get<NlvrGold>(gold);
            const std::string to = to_string(std::get<NlvrQuery>(query).target_box);
            SymbolConfig sym;
            std::vector<std::string> moves;
            int index = 1;
            for (const auto& m : g.moves) {
                moves.push_back(std::to_string(index++) + ". " + triplet(m, sym) + " " +
                                to_string(m.from) + " - " + to);
            }
            return join_lines(moves);
        }
        case Task::ExternalQA: {
            const auto& g = std::get<OptionGold>(gold);
            return "So, the correct answer is: \"" + g.option + "\".";
        }
    }
    throw std::logic_error("bad task");
}

std::string canonical_final_answer(const TaskInstance& inst) {
    return canonical_final_answer(inst.task, inst.gold, inst.query);
}

std::vector<TaskInstance> sample_demo_set(Task task, std::optional<ShuffleSetting> setting, int k,
                                          uint64_t demo_seed, const taskgen::GenConfig& cfg) {
    if (k < 1) throw ConfigError("demonstration count must be >= 1");
    int tag = setting ? static_cast<int>(*setting) : 15;
    std::vector<TaskInstance> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        uint64_t seed = taskgen::demo_instance_seed(demo_seed, task, tag, i);
        out.push_back(taskgen::generate_for(task, setting, seed, cfg));
    }
    return out;
}

std::string query_block(const TaskInstance& inst) {
    switch (inst.task) {
        case Task::Brick1D:
        case Task::Brick2D:
            return "Question: " + inst.description + " " + inst.question + "\nAnswer:";
        case Task::Nav:
            return "Question: " + inst.description + "\n" + inst.question + "\nAnswer:";
        case Task::Nlvr:
            return "Story: " + inst.description + "\nQuestion:" + inst.question + "\nAnswer:";
        case Task::ExternalQA: {
            const auto& q = std::get<ExternalQuery>(inst.query);
            json candidates = q.candidates;
            return "Background: " + inst.description + "\nQuestion: " + inst.question +
                   "\nCandidate Answers:" + candidates.dump() + "\nAnswer:";
        }
    }
    throw std::logic_error("bad task");
}

namespace {

std::string zero_shot_instruction(Task task) {
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D:
            return "Please give the final result by separating the bricks with commas.";
        case Task::Nav:
            return "Please give the final answer by separating the landmarks with commas.";
        case Task::Nlvr:
            return "Please list each object to move with its source and target box, separated by "
                   "commas.";
        case Task::ExternalQA:
            return "Please answer with exactly one of the candidate answers.";
    }
    throw std::logic_error("bad task");
}

} // namespace

PromptBundle build_zero_shot(const TaskInstance& inst) {
    if (inst.question.empty()) throw ConfigError("instance has an empty question");
    std::string block = query_block(inst);
    // Drop the trailing "Answer:"; the trigger phrase closes the prompt.
    const std::string tail = "\nAnswer:";
    block.resize(block.size() - tail.size());
    PromptBundle b;
    b.text = block + "\n" + zero_shot_instruction(inst.task) + "\nLet's think step by step.";
    return b;
}

PromptBundle build_few_shot(const std::vector<TaskInstance>& demos, const TaskInstance& inst,
                            PromptMode mode, const SymbolConfig& symbols, const DemoTemplates& t) {
    if (demos.empty()) throw ConfigError("few-shot prompt needs at least one demonstration");
    if (mode != PromptMode::FewShotCoT && mode != PromptMode::FewShotCoS) {
        throw ConfigError("few-shot prompt mode must be few_shot_cot or few_shot_cos");
    }
    symbols.validate();
    if (inst.question.empty()) throw ConfigError("instance has an empty question");

    PromptBundle b;
    std::ostringstream ss;
    for (const auto& demo : demos) {
        if (demo.task != inst.task) {
            throw ConfigError("demonstration task does not match the evaluation instance");
        }
        Demonstration d = mode == PromptMode::FewShotCoS ? synthesize_cos_demo(demo, symbols, t)
                                                         : synthesize_cot_demo(demo, t);
        ss << query_block(demo) << "\n" << d.steps << "\n" << d.final_answer << "\n\n";
        b.demo_step_tokens_ws += evalkit::count_tokens(d.steps, evalkit::TokenMethod::Whitespace);
        b.demo_step_tokens_bpe += evalkit::count_tokens(d.steps, evalkit::TokenMethod::BpeEstimate);
        b.n_demos++;
    }
    ss << query_block(inst);
    b.text = ss.str();
    return b;
}

} // namespace promptkit
} // namespace cosbench
