#include "cosbench/taskgen.hpp"

#include "cosbench/oracle.hpp"
#include "cosbench/rng.hpp"
#include "cosbench/validate.hpp"
#include "taskgen_detail.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosbench {
namespace taskgen {

// Each generation concern draws from its own RNG sub-stream, so the physical
// structure stays identical across shuffle settings for a fixed seed; only
// the label/description permutations differ.
using namespace detail;

void GenConfig::validate() const {
    if (brick_per_condition < 0 || nlvr_count < 0 || nav_count < 0) {
        throw ConfigError("instance counts must be non-negative");
    }
    if (brick_min < 1 || brick_min > brick_max) {
        throw ConfigError("brick count range is empty");
    }
    if (nav_min_nodes < 2 || nav_min_nodes > nav_max_nodes) {
        throw ConfigError("nav node range is empty");
    }
}

std::pair<int, int> brick_range(const GenConfig& cfg, Dimension dim) {
    if (dim == Dimension::D1) return {cfg.brick_min, cfg.brick_max};
    return {cfg.brick_min + 1, cfg.brick_max + 1};
}

uint64_t eval_instance_seed(uint64_t config_seed, Task task, int setting_tag, int index) {
    return mix_seed(config_seed, kEvalStream, static_cast<uint64_t>(task) * 16 + setting_tag,
                    static_cast<uint64_t>(index));
}

uint64_t demo_instance_seed(uint64_t demo_seed, Task task, int setting_tag, int index) {
    return mix_seed(demo_seed, kDemoStream, static_cast<uint64_t>(task) * 16 + setting_tag,
                    static_cast<uint64_t>(index));
}

// ---------------------------------------------------------------------------
// Brick World
// ---------------------------------------------------------------------------

namespace {

struct BrickLayout {
    int base_len = 1;
    std::vector<int> stack_height;          // per base index, >= 1
    std::vector<std::pair<int, int>> slots; // (base, height) in level order
};

BrickLayout draw_layout(Rng& rng, int n, Dimension dim) {
    BrickLayout layout;
    if (dim == Dimension::D1) {
        layout.base_len = 1;
        layout.stack_height = {n};
    } else {
        layout.base_len = std::min(rng.range(2, 3), n);
        layout.stack_height.assign(layout.base_len, 1);
        for (int extra = 0; extra < n - layout.base_len; ++extra) {
            layout.stack_height[rng.below(layout.base_len)]++;
        }
    }
    int max_height = *std::max_element(layout.stack_height.begin(), layout.stack_height.end());
    for (int h = 0; h < max_height; ++h) {
        for (int b = 0; b < layout.base_len; ++b) {
            if (h < layout.stack_height[b]) layout.slots.emplace_back(b, h);
        }
    }
    return layout;
}

} // namespace

TaskInstance gen_brick(uint64_t seed, int n_bricks, Dimension dim, ShuffleSetting setting,
                       const GenConfig& cfg) {
    cfg.validate();
    auto [lo, hi] = brick_range(cfg, dim);
    if (n_bricks < lo || n_bricks > hi) {
        throw ConfigError("n_bricks " + std::to_string(n_bricks) + " outside range " +
                          std::to_string(lo) + ".." + std::to_string(hi) + " for " +
                          to_string(dim));
    }
    if (dim == Dimension::D2 && n_bricks < 3) {
        throw ConfigError("2d scenes need at least 3 bricks");
    }

    Rng rng_struct(mix_seed(seed, kTagStructure));
    BrickLayout layout = draw_layout(rng_struct, n_bricks, dim);

    Rng rng_colors(mix_seed(seed, kTagColors));
    std::vector<BrickColor> colors;
    colors.reserve(n_bricks);
    for (int i = 0; i < n_bricks; ++i) {
        colors.push_back(static_cast<BrickColor>(rng_colors.below(3)));
    }

    // Slot i gets label letters[i]; shuffle-label settings permute the map.
    std::vector<char> letters(n_bricks);
    for (int i = 0; i < n_bricks; ++i) letters[i] = static_cast<char>('A' + i);
    if (setting == ShuffleSetting::ShuffleLabel || setting == ShuffleSetting::ShuffleBoth) {
        Rng rng_labels(mix_seed(seed, kTagLabels));
        rng_labels.shuffle(letters);
    }
    auto slot_index = [&](int base, int height) {
        for (size_t i = 0; i < layout.slots.size(); ++i) {
            if (layout.slots[i] == std::make_pair(base, height)) return static_cast<int>(i);
        }
        throw std::logic_error("slot not found");
    };
    auto label_at = [&](int base, int height) { return letters[slot_index(base, height)]; };

    BrickScene scene;
    scene.dimension = dim;
    for (int i = 0; i < n_bricks; ++i) {
        scene.bricks.push_back({letters[i], colors[i]});
    }
    for (int b = 0; b < layout.base_len; ++b) {
        for (int h = 1; h < layout.stack_height[b]; ++h) {
            scene.on_top.emplace_back(label_at(b, h), label_at(b, h - 1));
        }
    }
    for (int b = 1; b < layout.base_len; ++b) {
        scene.in_front.emplace_back(label_at(b, 0), label_at(b - 1, 0));
    }
    scene.sort_canonical();
    if (auto err = validate(scene)) {
        throw std::logic_error("generated invalid brick scene: " + *err);
    }

    // Non-top targets; 2D additionally allows bare base bricks (grabbed
    // "directly" through the front row).
    std::vector<std::pair<int, int>> candidates;
    if (n_bricks == 1) {
        candidates.emplace_back(0, 0);
    } else {
        for (int b = 0; b < layout.base_len; ++b) {
            if (dim == Dimension::D2 && layout.stack_height[b] == 1) {
                candidates.emplace_back(b, 0);
                continue;
            }
            for (int h = 0; h + 1 < layout.stack_height[b]; ++h) {
                candidates.emplace_back(b, h);
            }
        }
    }
    Rng rng_target(mix_seed(seed, kTagTarget));
    auto [tb, th] = candidates[rng_target.below(candidates.size())];
    char target = label_at(tb, th);

    TaskInstance inst;
    inst.task = dim == Dimension::D1 ? Task::Brick1D : Task::Brick2D;
    inst.setting = setting;
    inst.scene = scene;
    inst.query = BrickQuery{target};
    inst.gold = BrickGold{oracle::solve_brick(scene, target)};
    inst.seed = seed;
    inst.meta["label_permutation"] = std::string(letters.begin(), letters.end());
    inst.description = render_description(inst);
    inst.question = render_question(inst);
    inst.id = instance_id(inst);
    return inst;
}

// ---------------------------------------------------------------------------
// NLVR-based Manipulation
// ---------------------------------------------------------------------------

TaskInstance gen_nlvr(uint64_t seed, const GenConfig& cfg) {
    cfg.validate();
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        Rng rng(mix_seed(seed, kTagNlvr, static_cast<uint64_t>(attempt)));
        NlvrScene scene;
        for (BoxPos box : {BoxPos::Left, BoxPos::Middle, BoxPos::Right}) {
            int count = rng.range(1, 6);
            for (int i = 0; i < count; ++i) {
                NlvrObject o;
                o.size = static_cast<ObjectSize>(rng.below(3));
                o.shape = static_cast<ObjectShape>(rng.below(3));
                o.color = static_cast<ObjectColor>(rng.below(3));
                o.box = box;
                o.ordinal = i;
                scene.objects.push_back(o);
            }
        }
        NlvrValue value;
        switch (rng.below(3)) {
            case 0: value = static_cast<ObjectSize>(rng.below(3)); break;
            case 1: value = static_cast<ObjectShape>(rng.below(3)); break;
            default: value = static_cast<ObjectColor>(rng.below(3)); break;
        }
        BoxPos target_box = static_cast<BoxPos>(rng.below(3));

        auto moves = oracle::solve_nlvr(scene, value, target_box);
        if (moves.empty()) continue; // every match already home; resample

        if (auto err = validate(scene)) {
            throw std::logic_error("generated invalid nlvr scene: " + *err);
        }
        TaskInstance inst;
        inst.task = Task::Nlvr;
        inst.scene = scene;
        inst.query = NlvrQuery{value, target_box};
        inst.gold = NlvrGold{std::move(moves)};
        inst.seed = seed;
        inst.description = render_description(inst);
        inst.question = render_question(inst);
        inst.id = instance_id(inst);
        return inst;
    }
    throw std::logic_error("nlvr generation failed to converge");
}

// ---------------------------------------------------------------------------
// Natural Language Navigation
// ---------------------------------------------------------------------------

TaskInstance gen_nav(uint64_t seed, const GenConfig& cfg) {
    cfg.validate();
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        Rng rng(mix_seed(seed, kTagNav, static_cast<uint64_t>(attempt)));
        int n = rng.range(cfg.nav_min_nodes, cfg.nav_max_nodes);

        std::vector<char> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = static_cast<char>('A' + i);
        rng.shuffle(ids);

        NavMap map;
        map.root = ids[0];
        std::vector<int> child_count(n, 0);
        for (int i = 0; i < n; ++i) {
            map.nodes.push_back({ids[i], static_cast<LandmarkKind>(rng.below(6))});
        }
        for (int i = 1; i < n; ++i) {
            std::vector<int> open;
            for (int j = 0; j < i; ++j) {
                if (child_count[j] < 2) open.push_back(j);
            }
            int parent = open[rng.below(open.size())];
            child_count[parent]++;
            int dist = rng.coin() ? 100 : 200;
            map.edges.push_back({ids[parent], ids[i], dist});
        }
        map.sort_canonical();
        if (auto err = validate(map)) {
            throw std::logic_error("generated invalid nav map: " + *err);
        }

        // Prefer kinds with at least two non-root occurrences so the route
        // comparison in demonstrations is non-trivial.
        LandmarkKind root_kind = map.kind_of(map.root);
        std::vector<int> count(6, 0);
        for (const auto& node : map.nodes) {
            if (node.id != map.root) count[static_cast<int>(node.kind)]++;
        }
        std::vector<LandmarkKind> preferred, fallback;
        for (int k = 0; k < 6; ++k) {
            auto kind = static_cast<LandmarkKind>(k);
            if (kind == root_kind) continue;
            if (count[k] >= 2) preferred.push_back(kind);
            if (count[k] >= 1) fallback.push_back(kind);
        }
        const auto& pool = preferred.empty() ? fallback : preferred;
        if (pool.empty()) continue;
        LandmarkKind kind = pool[rng.below(pool.size())];

        oracle::NavSolution sol;
        try {
            sol = oracle::solve_nav(map, kind);
        } catch (const oracle::AmbiguityError&) {
            continue; // tie between nearest candidates; resample
        }

        TaskInstance inst;
        inst.task = Task::Nav;
        inst.scene = map;
        inst.query = NavQuery{kind};
        inst.gold = NavGold{sol.path, sol.distance_m};
        inst.seed = seed;
        inst.description = render_description(inst);
        inst.question = render_question(inst);
        inst.id = instance_id(inst);
        return inst;
    }
    throw std::logic_error("nav generation failed to converge");
}

} // namespace taskgen
} // namespace cosbench
