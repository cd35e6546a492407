#include "cosbench/rng.hpp"
#include "cosbench/taskgen.hpp"
#include "taskgen_detail.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cosbench {
namespace taskgen {

using namespace detail;

std::string nlvr_value_word(const NlvrValue& v) {
    return std::visit([](const auto& x) { return std::string(to_string(x)); }, v);
}

std::string nlvr_condition_phrase(const NlvrValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ObjectShape>) {
                return std::string("all ") + to_string(x) + "s";
            } else {
                return std::string("all ") + to_string(x) + " objects";
            }
        },
        v);
}

std::string landmark_name(const NavMap& m, char id) {
    return std::string(to_string(m.kind_of(id))) + " " + std::string(1, id);
}

std::vector<char> brick_base_chain(const BrickScene& s) {
    // Stack bottoms are bricks that never appear as an upper; the rear base
    // brick additionally never appears as a front.
    std::set<char> uppers, fronts;
    for (const auto& [u, l] : s.on_top) uppers.insert(u);
    for (const auto& [f, b] : s.in_front) fronts.insert(f);

    if (s.in_front.empty()) {
        for (const auto& b : s.bricks) {
            if (!uppers.count(b.label)) return {b.label};
        }
        throw std::logic_error("stack has no bottom brick");
    }
    char rear = 0;
    std::set<char> base;
    for (const auto& [f, b] : s.in_front) {
        base.insert(f);
        base.insert(b);
    }
    for (char c : base) {
        if (!fronts.count(c)) rear = c;
    }
    if (!rear) throw std::logic_error("base row has no rear brick");
    std::vector<char> chain{rear};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [f, b] : s.in_front) {
            if (b == chain.back()) {
                chain.push_back(f);
                grew = true;
                break;
            }
        }
    }
    return chain;
}

std::vector<char> brick_stack(const BrickScene& s, char base) {
    std::vector<char> stack{base};
    char cur = base;
    while (char up = s.above(cur)) {
        stack.push_back(up);
        cur = up;
    }
    return stack;
}

namespace {

std::vector<std::string> brick_sentences(const BrickScene& s) {
    std::vector<std::string> out;
    std::vector<char> base = brick_base_chain(s);

    out.push_back(std::string("For the brick ") + base.front() + ", the color is " +
                  to_string(s.color_of(base.front())) + ".");
    for (size_t i = 1; i < base.size(); ++i) {
        out.push_back(std::string("The ") + to_string(s.color_of(base[i])) + " brick " + base[i] +
                      " is in front of the brick " + base[i - 1] + ".");
    }
    for (char b : base) {
        std::vector<char> stack = brick_stack(s, b);
        for (size_t h = 1; h < stack.size(); ++h) {
            out.push_back(std::string("The ") + to_string(s.color_of(stack[h])) + " brick " +
                          stack[h] + " is on top of the brick " + stack[h - 1] + " .");
        }
    }
    return out;
}

std::string join_sentences(const std::string& intro, const std::vector<std::string>& sentences) {
    std::ostringstream ss;
    ss << intro;
    for (const auto& s : sentences) ss << " " << s;
    return ss.str();
}

std::string render_brick(const TaskInstance& inst) {
    const auto& scene = std::get<BrickScene>(inst.scene);
    std::vector<std::string> sentences = brick_sentences(scene);
    ShuffleSetting setting = inst.setting.value_or(ShuffleSetting::NoShuffle);
    if (setting == ShuffleSetting::ShuffleDescription || setting == ShuffleSetting::ShuffleBoth) {
        Rng rng(mix_seed(inst.seed, kTagDescription));
        rng.shuffle(sentences);
    }
    return join_sentences("There is a set of bricks.", sentences);
}

std::string render_nlvr(const TaskInstance& inst) {
    const auto& scene = std::get<NlvrScene>(inst.scene);
    std::vector<std::string> sentences;
    for (BoxPos box : {BoxPos::Left, BoxPos::Middle, BoxPos::Right}) {
        std::ostringstream ss;
        ss << "In the " << to_string(box) << " box, there are ";
        bool first = true;
        for (const auto& o : scene.in_box(box)) {
            if (!first) ss << ", ";
            first = false;
            ss << "one " << to_string(o.size) << " " << to_string(o.shape) << " in "
               << to_string(o.color);
        }
        ss << ".";
        sentences.push_back(ss.str());
    }
    return join_sentences("There are three boxes.", sentences);
}

std::string render_nav(const TaskInstance& inst) {
    const auto& map = std::get<NavMap>(inst.scene);
    std::vector<std::string> sentences;
    sentences.push_back("The start point is " + landmark_name(map, map.root) + ".");
    // Depth-first over the canonical edge order, matching route enumeration.
    struct Walker {
        const NavMap& map;
        std::vector<std::string>& out;
        void walk(char node) {
            for (const auto& e : map.edges) {
                if (e.parent != node) continue;
                out.push_back("There is a road which is " + std::to_string(e.distance_m) +
                              " meters long from " + landmark_name(map, e.parent) + " to " +
                              landmark_name(map, e.child) + ".");
                walk(e.child);
            }
        }
    };
    Walker{map, sentences}.walk(map.root);
    return join_sentences("There is a set of roads and a set of landmarks.", sentences);
}

} // namespace

std::string render_description(const TaskInstance& inst) {
    switch (inst.task) {
        case Task::Brick1D:
        case Task::Brick2D: return render_brick(inst);
        case Task::Nlvr: return render_nlvr(inst);
        case Task::Nav: return render_nav(inst);
        case Task::ExternalQA: return std::get<ExternalStory>(inst.scene).story;
    }
    throw std::logic_error("bad task");
}

std::string render_question(const TaskInstance& inst) {
    switch (inst.task) {
        case Task::Brick1D:
        case Task::Brick2D: {
            const auto& q = std::get<BrickQuery>(inst.query);
            return std::string("Now we have to get a specific brick. The bricks must now be "
                               "grabbed from top to bottom, and if the lower brick is to be "
                               "grabbed, the upper brick must be removed first. How to get brick ") +
                   q.target + "?";
        }
        case Task::Nlvr: {
            const auto& q = std::get<NlvrQuery>(inst.query);
            return "How to move " + nlvr_condition_phrase(q.value) + " to the " +
                   to_string(q.target_box) + " box?";
        }
        case Task::Nav: {
            const auto& q = std::get<NavQuery>(inst.query);
            return std::string("From the start point, how to reach the nearest ") +
                   to_string(q.kind) + "?";
        }
        case Task::ExternalQA: return inst.question;
    }
    throw std::logic_error("bad task");
}

} // namespace taskgen
} // namespace cosbench
