#include "cosbench/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cosbench {
namespace oracle {

std::vector<char> solve_brick(const BrickScene& scene, char target) {
    if (!scene.find(target)) {
        throw std::invalid_argument(std::string("unknown target brick: ") + target);
    }
    std::vector<char> chain{target};
    char cur = target;
    while (char up = scene.above(cur)) {
        chain.push_back(up);
        cur = up;
    }
    std::reverse(chain.begin(), chain.end()); // top-down, target last
    return chain;
}

SimulationResult simulate_grabs(const BrickScene& scene, const std::vector<char>& sequence) {
    std::set<char> remaining;
    for (const auto& b : scene.bricks) remaining.insert(b.label);
    for (char grab : sequence) {
        if (!remaining.count(grab)) {
            return {false, std::string("brick ") + grab + " is not available to grab"};
        }
        char up = scene.above(grab);
        if (up && remaining.count(up)) {
            return {false, std::string("brick ") + up + " is still on top of brick " + grab};
        }
        remaining.erase(grab);
    }
    return {true, ""};
}

std::vector<NlvrMove> solve_nlvr(const NlvrScene& scene, const NlvrValue& condition,
                                 BoxPos target_box) {
    auto matches = [&](const NlvrObject& o) {
        return std::visit(
            [&](const auto& v) {
                using V = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<V, ObjectSize>) return o.size == v;
                else if constexpr (std::is_same_v<V, ObjectShape>) return o.shape == v;
                else return o.color == v;
            },
            condition);
    };
    std::vector<NlvrMove> moves;
    for (const auto& o : scene.objects) {
        if (o.box != target_box && matches(o)) {
            moves.push_back({o.size, o.shape, o.color, o.box, o.ordinal});
        }
    }
    std::sort(moves.begin(), moves.end(), [](const NlvrMove& a, const NlvrMove& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.size != b.size) return a.size < b.size;
        return a.ordinal < b.ordinal;
    });
    return moves;
}

namespace {

// Path from root to `goal` in a tree, with summed distance.
NavSolution tree_path(const NavMap& map, char goal) {
    // Parent pointers.
    NavSolution out;
    std::vector<char> rev{goal};
    char cur = goal;
    int dist = 0;
    while (cur != map.root) {
        bool found = false;
        for (const auto& e : map.edges) {
            if (e.child == cur) {
                dist += e.distance_m;
                cur = e.parent;
                rev.push_back(cur);
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error(std::string("node unreachable from root: ") + goal);
    }
    out.path.assign(rev.rbegin(), rev.rend());
    out.distance_m = dist;
    return out;
}

} // namespace

NavSolution solve_nav(const NavMap& map, LandmarkKind kind) {
    std::vector<std::pair<int, char>> candidates; // (distance, node)
    for (const auto& n : map.nodes) {
        if (n.id == map.root || n.kind != kind) continue;
        candidates.emplace_back(tree_path(map, n.id).distance_m, n.id);
    }
    if (candidates.empty()) {
        throw UnsolvableError(std::string("no landmark of kind '") + to_string(kind) + "' in map");
    }
    std::sort(candidates.begin(), candidates.end());
    if (candidates.size() > 1 && candidates[0].first == candidates[1].first) {
        throw AmbiguityError(std::string("nearest '") + to_string(kind) + "' is ambiguous: " +
                             candidates[0].second + " and " + candidates[1].second + " both at " +
                             std::to_string(candidates[0].first) + " m");
    }
    return tree_path(map, candidates[0].second);
}

namespace testsupport {

std::vector<NavPathEntry> enumerate_nav_paths(const NavMap& map) {
    std::vector<NavPathEntry> out;
    std::vector<char> path{map.root};
    // Depth-first over children in canonical order.
    struct Walker {
        const NavMap& map;
        std::vector<NavPathEntry>& out;
        std::vector<char>& path;
        void walk(char node, int dist) {
            if (node != map.root) out.push_back({node, path, dist});
            for (const auto& e : map.edges) {
                if (e.parent != node) continue;
                path.push_back(e.child);
                walk(e.child, dist + e.distance_m);
                path.pop_back();
            }
        }
    };
    Walker{map, out, path}.walk(map.root, 0);
    return out;
}

std::vector<std::vector<char>> enumerate_grab_sequences(const BrickScene& scene, char target) {
    std::vector<std::vector<char>> results;
    std::set<char> remaining;
    for (const auto& b : scene.bricks) remaining.insert(b.label);
    std::vector<char> seq;

    struct Search {
        const BrickScene& scene;
        char target;
        std::vector<std::vector<char>>& results;
        std::set<char>& remaining;
        std::vector<char>& seq;

        void step() {
            std::vector<char> exposed;
            for (char c : remaining) {
                char up = scene.above(c);
                if (!up || !remaining.count(up)) exposed.push_back(c);
            }
            for (char c : exposed) {
                seq.push_back(c);
                remaining.erase(c);
                if (c == target) {
                    results.push_back(seq);
                } else {
                    step();
                }
                remaining.insert(c);
                seq.pop_back();
            }
        }
    };
    Search{scene, target, results, remaining, seq}.step();
    return results;
}

} // namespace testsupport

} // namespace oracle
} // namespace cosbench
