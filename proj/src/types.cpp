#include "cosbench/types.hpp"

#include "cosbench/hash.hpp"
#include "cosbench/json_io.hpp"

#include <algorithm>

namespace cosbench {

namespace {

template <typename E>
E from_string_impl(const std::string& s, std::initializer_list<std::pair<const char*, E>> table,
                   const char* what) {
    for (const auto& [name, value] : table) {
        if (s == name) return value;
    }
    throw ConfigError(std::string("unknown ") + what + ": '" + s + "'");
}

} // namespace

const char* to_string(Task t) {
    switch (t) {
        case Task::Brick1D: return "brick_1d";
        case Task::Brick2D: return "brick_2d";
        case Task::Nlvr: return "nlvr";
        case Task::Nav: return "nav";
        case Task::ExternalQA: return "external_qa";
    }
    return "?";
}

const char* to_string(ShuffleSetting s) {
    switch (s) {
        case ShuffleSetting::NoShuffle: return "no_shuffle";
        case ShuffleSetting::ShuffleDescription: return "shuffle_description";
        case ShuffleSetting::ShuffleLabel: return "shuffle_label";
        case ShuffleSetting::ShuffleBoth: return "shuffle_both";
    }
    return "?";
}

const char* to_string(PromptMode m) {
    switch (m) {
        case PromptMode::ZeroShotCoT: return "zero_shot_cot";
        case PromptMode::FewShotCoT: return "few_shot_cot";
        case PromptMode::FewShotCoS: return "few_shot_cos";
    }
    return "?";
}

const char* to_string(BrickColor c) {
    switch (c) {
        case BrickColor::Yellow: return "yellow";
        case BrickColor::White: return "white";
        case BrickColor::Blue: return "blue";
    }
    return "?";
}

const char* to_string(Dimension d) { return d == Dimension::D1 ? "1d" : "2d"; }

const char* to_string(ObjectSize s) {
    switch (s) {
        case ObjectSize::Small: return "small";
        case ObjectSize::Middle: return "middle";
        case ObjectSize::Large: return "large";
    }
    return "?";
}

const char* to_string(ObjectShape s) {
    switch (s) {
        case ObjectShape::Square: return "square";
        case ObjectShape::Round: return "round";
        case ObjectShape::Triangle: return "triangle";
    }
    return "?";
}

const char* to_string(ObjectColor c) {
    switch (c) {
        case ObjectColor::Yellow: return "yellow";
        case ObjectColor::Black: return "black";
        case ObjectColor::Blue: return "blue";
    }
    return "?";
}

const char* to_string(BoxPos b) {
    switch (b) {
        case BoxPos::Left: return "left";
        case BoxPos::Middle: return "middle";
        case BoxPos::Right: return "right";
    }
    return "?";
}

const char* to_string(LandmarkKind k) {
    switch (k) {
        case LandmarkKind::Store: return "store";
        case LandmarkKind::Bank: return "bank";
        case LandmarkKind::House: return "house";
        case LandmarkKind::Cinema: return "cinema";
        case LandmarkKind::Garden: return "garden";
        case LandmarkKind::School: return "school";
    }
    return "?";
}

Task task_from_string(const std::string& s) {
    return from_string_impl<Task>(s,
                                  {{"brick_1d", Task::Brick1D},
                                   {"brick_2d", Task::Brick2D},
                                   {"nlvr", Task::Nlvr},
                                   {"nav", Task::Nav},
                                   {"external_qa", Task::ExternalQA}},
                                  "task");
}

ShuffleSetting setting_from_string(const std::string& s) {
    return from_string_impl<ShuffleSetting>(
        s,
        {{"no_shuffle", ShuffleSetting::NoShuffle},
         {"shuffle_description", ShuffleSetting::ShuffleDescription},
         {"shuffle_label", ShuffleSetting::ShuffleLabel},
         {"shuffle_both", ShuffleSetting::ShuffleBoth}},
        "setting");
}

PromptMode mode_from_string(const std::string& s) {
    return from_string_impl<PromptMode>(s,
                                        {{"zero_shot_cot", PromptMode::ZeroShotCoT},
                                         {"few_shot_cot", PromptMode::FewShotCoT},
                                         {"few_shot_cos", PromptMode::FewShotCoS}},
                                        "prompt mode");
}

BrickColor brick_color_from_string(const std::string& s) {
    return from_string_impl<BrickColor>(
        s, {{"yellow", BrickColor::Yellow}, {"white", BrickColor::White}, {"blue", BrickColor::Blue}},
        "brick color");
}

Dimension dimension_from_string(const std::string& s) {
    return from_string_impl<Dimension>(s, {{"1d", Dimension::D1}, {"2d", Dimension::D2}}, "dimension");
}

ObjectSize size_from_string(const std::string& s) {
    return from_string_impl<ObjectSize>(
        s, {{"small", ObjectSize::Small}, {"middle", ObjectSize::Middle}, {"large", ObjectSize::Large}},
        "object size");
}

ObjectShape shape_from_string(const std::string& s) {
    return from_string_impl<ObjectShape>(s,
                                         {{"square", ObjectShape::Square},
                                          {"round", ObjectShape::Round},
                                          {"triangle", ObjectShape::Triangle}},
                                         "object shape");
}

ObjectColor object_color_from_string(const std::string& s) {
    return from_string_impl<ObjectColor>(
        s, {{"yellow", ObjectColor::Yellow}, {"black", ObjectColor::Black}, {"blue", ObjectColor::Blue}},
        "object color");
}

BoxPos box_from_string(const std::string& s) {
    return from_string_impl<BoxPos>(
        s, {{"left", BoxPos::Left}, {"middle", BoxPos::Middle}, {"right", BoxPos::Right}}, "box");
}

LandmarkKind kind_from_string(const std::string& s) {
    return from_string_impl<LandmarkKind>(s,
                                          {{"store", LandmarkKind::Store},
                                           {"bank", LandmarkKind::Bank},
                                           {"house", LandmarkKind::House},
                                           {"cinema", LandmarkKind::Cinema},
                                           {"garden", LandmarkKind::Garden},
                                           {"school", LandmarkKind::School}},
                                          "landmark kind");
}

bool task_is_brick(Task t) { return t == Task::Brick1D || t == Task::Brick2D; }

// ---------------------------------------------------------------------------
// BrickScene helpers
// ---------------------------------------------------------------------------

const Brick* BrickScene::find(char label) const {
    for (const auto& b : bricks) {
        if (b.label == label) return &b;
    }
    return nullptr;
}

BrickColor BrickScene::color_of(char label) const {
    const Brick* b = find(label);
    if (!b) throw std::out_of_range(std::string("no brick ") + label);
    return b->color;
}

char BrickScene::below(char label) const {
    for (const auto& [upper, lower] : on_top) {
        if (upper == label) return lower;
    }
    return 0;
}

char BrickScene::above(char label) const {
    for (const auto& [upper, lower] : on_top) {
        if (lower == label) return upper;
    }
    return 0;
}

void BrickScene::sort_canonical() {
    std::sort(bricks.begin(), bricks.end(),
              [](const Brick& a, const Brick& b) { return a.label < b.label; });
    std::sort(on_top.begin(), on_top.end());
    std::sort(in_front.begin(), in_front.end());
}

// ---------------------------------------------------------------------------
// NlvrScene helpers
// ---------------------------------------------------------------------------

std::vector<NlvrObject> NlvrScene::in_box(BoxPos box) const {
    std::vector<NlvrObject> out;
    for (const auto& o : objects) {
        if (o.box == box) out.push_back(o);
    }
    return out;
}

void NlvrScene::sort_canonical() {
    std::sort(objects.begin(), objects.end(), [](const NlvrObject& a, const NlvrObject& b) {
        if (a.box != b.box) return a.box < b.box;
        return a.ordinal < b.ordinal;
    });
}

// ---------------------------------------------------------------------------
// NavMap helpers
// ---------------------------------------------------------------------------

const NavNode* NavMap::find(char id) const {
    for (const auto& n : nodes) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

LandmarkKind NavMap::kind_of(char id) const {
    const NavNode* n = find(id);
    if (!n) throw std::out_of_range(std::string("no landmark ") + id);
    return n->kind;
}

std::vector<char> NavMap::children_of(char id) const {
    std::vector<char> out;
    for (const auto& e : edges) {
        if (e.parent == id) out.push_back(e.child);
    }
    return out;
}

void NavMap::sort_canonical() {
    std::sort(nodes.begin(), nodes.end(),
              [](const NavNode& a, const NavNode& b) { return a.id < b.id; });
    std::sort(edges.begin(), edges.end(), [](const NavEdge& a, const NavEdge& b) {
        if (a.parent != b.parent) return a.parent < b.parent;
        return a.child < b.child;
    });
}

// ---------------------------------------------------------------------------
// Config validation
// ---------------------------------------------------------------------------

void SymbolConfig::validate() const {
    const std::vector<std::pair<const char*, const std::string*>> tokens = {
        {"on_top", &on_top},           {"in_front", &in_front},
        {"path_sep", &path_sep},       {"list_sep", &list_sep},
        {"triplet_open", &triplet_open}, {"triplet_close", &triplet_close}};
    for (const auto& [name, tok] : tokens) {
        if (tok->empty()) throw ConfigError(std::string("symbol token '") + name + "' is empty");
    }
    for (size_t i = 0; i < tokens.size(); ++i) {
        for (size_t j = i + 1; j < tokens.size(); ++j) {
            if (*tokens[i].second == *tokens[j].second) {
                throw ConfigError(std::string("symbol tokens '") + tokens[i].first + "' and '" +
                                  tokens[j].first + "' are both \"" + *tokens[i].second + "\"");
            }
        }
    }
}

const std::map<std::string, SymbolConfig>& symbol_presets() {
    static const std::map<std::string, SymbolConfig> presets = [] {
        std::map<std::string, SymbolConfig> p;
        p["default"] = SymbolConfig{};
        SymbolConfig slash;
        slash.on_top = "/";
        slash.path_sep = "|";
        p["slash"] = slash;
        SymbolConfig comma;
        comma.on_top = ",";
        comma.list_sep = ";";
        p["comma"] = comma;
        SymbolConfig period;
        period.on_top = ".";
        p["period"] = period;
        SymbolConfig amp;
        amp.on_top = "&";
        p["ampersand"] = amp;
        SymbolConfig space;
        space.on_top = " ";
        p["no_symbol"] = space;
        for (auto& [name, cfg] : p) cfg.validate();
        return p;
    }();
    return presets;
}

void PromptConfig::validate() const {
    if (mode != PromptMode::ZeroShotCoT && n_demos < 1) {
        throw ConfigError("n_demos must be >= 1 for few-shot modes");
    }
    symbols.validate();
}

void ModelParams::validate() const {
    if (temperature < 0.0) throw ConfigError("temperature must be >= 0");
    if (max_tokens <= 0) throw ConfigError("max_tokens must be positive");
    if (model_name.empty()) throw ConfigError("model_name is empty");
}

std::string instance_id(const TaskInstance& inst) {
    return short_hash(instance_identity_json(inst));
}

} // namespace cosbench
