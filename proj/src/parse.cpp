#include "cosbench/taskgen.hpp"

#include <map>
#include <regex>
#include <set>

namespace cosbench {
namespace taskgen {

namespace {

std::string collapse_ws(const std::string& s) {
    std::string out;
    bool in_space = true; // also trims leading spaces
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(c);
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

// Splits on sentence terminators; keeps fragments without one.
std::vector<std::string> split_sentences(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '.' || c == '?' || c == '\n') {
            std::string s = collapse_ws(cur);
            if (!s.empty()) out.push_back(s);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    std::string s = collapse_ws(cur);
    if (!s.empty()) out.push_back(s);
    return out;
}

std::string strip_markers(std::string s) {
    for (const char* marker : {"Question:", "Story:", "Background:", "Answer:"}) {
        if (s.rfind(marker, 0) == 0) {
            s = collapse_ws(s.substr(std::string(marker).size()));
        }
    }
    return s;
}

// Prompt boilerplate that may travel with a description; never an error.
bool is_ignorable(const std::string& s) {
    static const std::vector<std::regex> skip = {
        std::regex(R"(^There (is|are) a set of bricks$)"),
        std::regex(R"(^There are three boxes$)"),
        std::regex(R"(^There is a set of roads and a set of landmarks$)"),
        std::regex(R"(^Now we have to get a specific brick$)"),
        std::regex(R"(^The bricks must now be grabbed from top to bottom, and if the lower brick is to be grabbed, the upper brick must be removed first$)"),
        std::regex(R"(^How to get brick [A-Z]$)"),
        std::regex(R"(^How to move all .+ to the (left|middle|right) box$)"),
        std::regex(R"(^From the start point, how to reach the nearest \w+$)"),
        std::regex(R"(^Please .+$)"),
        std::regex(R"(^Let's think step by step$)"),
        std::regex(R"(^Answer$)"),
    };
    for (const auto& re : skip) {
        if (std::regex_match(s, re)) return true;
    }
    return s.empty();
}

const std::regex kOnTop(R"(^The (?:(yellow|white|blue) )?brick ([A-Z]) is on top of the brick ([A-Z])$)");
const std::regex kInFront(R"(^The (?:(yellow|white|blue) )?brick ([A-Z]) is in front of the brick ([A-Z])$)");
const std::regex kColorOf(R"(^For (?:the )?brick ([A-Z]), the color is (yellow|white|blue)$)");
const std::regex kBareBrick(R"(^There is a brick ([A-Z])$)");
const std::regex kBox(R"(^In the (left|middle|right) box, there are (.+)$)");
const std::regex kObject(R"(^one (small|middle|large) (square|round|triangle) in (yellow|black|blue)$)");
const std::regex kStart(R"(^The start point is (store|bank|house|cinema|garden|school) ([A-Z])$)");
const std::regex kRoad(R"(^There is a road which is (100|200) meters long from (store|bank|house|cinema|garden|school) ([A-Z]) to (store|bank|house|cinema|garden|school) ([A-Z])$)");

BrickScene parse_brick(const std::vector<std::string>& sentences, Task task) {
    BrickScene scene;
    scene.dimension = task == Task::Brick2D ? Dimension::D2 : Dimension::D1;
    std::set<char> labels;
    std::map<char, BrickColor> colors;
    std::smatch m;
    for (const auto& s : sentences) {
        if (std::regex_match(s, m, kOnTop)) {
            char upper = m[2].str()[0], lower = m[3].str()[0];
            labels.insert(upper);
            labels.insert(lower);
            if (m[1].matched) colors[upper] = brick_color_from_string(m[1].str());
            scene.on_top.emplace_back(upper, lower);
        } else if (std::regex_match(s, m, kInFront)) {
            char front = m[2].str()[0], back = m[3].str()[0];
            labels.insert(front);
            labels.insert(back);
            if (m[1].matched) colors[front] = brick_color_from_string(m[1].str());
            scene.in_front.emplace_back(front, back);
        } else if (std::regex_match(s, m, kColorOf)) {
            char label = m[1].str()[0];
            labels.insert(label);
            colors[label] = brick_color_from_string(m[2].str());
        } else if (std::regex_match(s, m, kBareBrick)) {
            labels.insert(m[1].str()[0]);
        } else if (!is_ignorable(s)) {
            throw ParseError(s, "not a brick-scene sentence");
        }
    }
    if (labels.empty()) throw ParseError("", "no brick sentences found");
    for (char l : labels) {
        auto it = colors.find(l);
        scene.bricks.push_back({l, it == colors.end() ? BrickColor::Yellow : it->second});
    }
    if (!scene.in_front.empty()) scene.dimension = Dimension::D2;
    scene.sort_canonical();
    return scene;
}

NlvrScene parse_nlvr(const std::vector<std::string>& sentences) {
    NlvrScene scene;
    std::smatch m;
    bool any = false;
    for (const auto& s : sentences) {
        if (std::regex_match(s, m, kBox)) {
            any = true;
            BoxPos box = box_from_string(m[1].str());
            std::string items = m[2].str();
            int ordinal = 0;
            size_t pos = 0;
            while (pos <= items.size()) {
                size_t comma = items.find(", ", pos);
                std::string item =
                    items.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                std::smatch om;
                std::string trimmed = collapse_ws(item);
                if (!std::regex_match(trimmed, om, kObject)) {
                    throw ParseError(trimmed, "not an object phrase");
                }
                scene.objects.push_back({size_from_string(om[1].str()),
                                         shape_from_string(om[2].str()),
                                         object_color_from_string(om[3].str()), box, ordinal++});
                if (comma == std::string::npos) break;
                pos = comma + 2;
            }
        } else if (!is_ignorable(s)) {
            throw ParseError(s, "not an nlvr-scene sentence");
        }
    }
    if (!any) throw ParseError("", "no box sentences found");
    scene.sort_canonical();
    return scene;
}

NavMap parse_nav(const std::vector<std::string>& sentences) {
    NavMap map;
    std::map<char, LandmarkKind> kinds;
    bool have_root = false;
    std::smatch m;
    for (const auto& s : sentences) {
        if (std::regex_match(s, m, kStart)) {
            map.root = m[2].str()[0];
            kinds[map.root] = kind_from_string(m[1].str());
            have_root = true;
        } else if (std::regex_match(s, m, kRoad)) {
            char parent = m[3].str()[0], child = m[5].str()[0];
            kinds[parent] = kind_from_string(m[2].str());
            kinds[child] = kind_from_string(m[4].str());
            map.edges.push_back({parent, child, std::stoi(m[1].str())});
        } else if (!is_ignorable(s)) {
            throw ParseError(s, "not a navigation sentence");
        }
    }
    if (!have_root) throw ParseError("", "no start-point sentence found");
    for (const auto& [id, kind] : kinds) map.nodes.push_back({id, kind});
    map.sort_canonical();
    return map;
}

} // namespace

Scene parse_description(const std::string& text, Task task) {
    std::vector<std::string> sentences;
    for (auto& s : split_sentences(text)) {
        sentences.push_back(strip_markers(s));
    }
    if (sentences.empty()) throw ParseError("", "empty description");
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D: return parse_brick(sentences, task);
        case Task::Nlvr: return parse_nlvr(sentences);
        case Task::Nav: return parse_nav(sentences);
        case Task::ExternalQA: return ExternalStory{text};
    }
    throw std::logic_error("bad task");
}

Query parse_question(const std::string& text, Task task) {
    std::smatch m;
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D: {
            static const std::regex re(R"(How to get brick ([A-Z]))");
            std::string last;
            for (auto it = std::sregex_iterator(text.begin(), text.end(), re);
                 it != std::sregex_iterator(); ++it) {
                last = (*it)[1].str();
            }
            if (last.empty()) throw ParseError(text, "no brick question found");
            return BrickQuery{last[0]};
        }
        case Task::Nlvr: {
            static const std::regex re(
                R"(How to move all (\w+)( objects)? to the (left|middle|right) box)");
            std::smatch found;
            for (auto it = std::sregex_iterator(text.begin(), text.end(), re);
                 it != std::sregex_iterator(); ++it) {
                found = *it;
            }
            if (found.empty()) throw ParseError(text, "no move question found");
            std::string word = found[1].str();
            NlvrQuery q;
            q.target_box = box_from_string(found[3].str());
            if (found[2].matched) {
                // "all <color> objects" or "all <size> objects"
                try {
                    q.value = object_color_from_string(word);
                } catch (const ConfigError&) {
                    q.value = size_from_string(word);
                }
            } else {
                // "all <shape>s"
                if (word.size() < 2 || word.back() != 's') {
                    throw ParseError(word, "not a plural shape");
                }
                q.value = shape_from_string(word.substr(0, word.size() - 1));
            }
            return q;
        }
        case Task::Nav: {
            static const std::regex re(
                R"(how to reach the nearest (store|bank|house|cinema|garden|school))",
                std::regex::icase);
            std::smatch found;
            for (auto it = std::sregex_iterator(text.begin(), text.end(), re);
                 it != std::sregex_iterator(); ++it) {
                found = *it;
            }
            if (found.empty()) throw ParseError(text, "no navigation question found");
            std::string kind = found[1].str();
            for (auto& c : kind) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return NavQuery{kind_from_string(kind)};
        }
        case Task::ExternalQA: throw ParseError(text, "external questions are opaque");
    }
    throw std::logic_error("bad task");
}

} // namespace taskgen
} // namespace cosbench
