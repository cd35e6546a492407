#include "cosbench/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cosbench {

namespace {

std::optional<std::string> check_acyclic(const BrickScene& s) {
    // Kahn's algorithm over on_top ∪ in_front, edges pointing upper->lower
    // and front->back.
    std::map<char, std::vector<char>> out;
    std::map<char, int> indeg;
    for (const auto& b : s.bricks) indeg[b.label] = 0;
    auto add_edge = [&](char a, char b) {
        out[a].push_back(b);
        indeg[b]++;
    };
    for (const auto& [u, l] : s.on_top) add_edge(u, l);
    for (const auto& [f, b] : s.in_front) add_edge(f, b);
    std::vector<char> queue;
    for (const auto& [label, d] : indeg) {
        if (d == 0) queue.push_back(label);
    }
    size_t seen = 0;
    while (!queue.empty()) {
        char c = queue.back();
        queue.pop_back();
        ++seen;
        for (char n : out[c]) {
            if (--indeg[n] == 0) queue.push_back(n);
        }
    }
    if (seen != s.bricks.size()) return "relation graph has a cycle";
    return std::nullopt;
}

} // namespace

std::optional<std::string> validate(const BrickScene& s) {
    if (s.bricks.empty()) return "scene has no bricks";

    std::set<char> labels;
    for (const auto& b : s.bricks) {
        if (b.label < 'A' || b.label > 'Z') return std::string("label out of range: ") + b.label;
        if (!labels.insert(b.label).second) return std::string("duplicate label: ") + b.label;
    }
    // Contiguous alphabet prefix A..?
    char expect = 'A';
    for (char l : labels) {
        if (l != expect) return "labels are not a contiguous alphabet prefix";
        ++expect;
    }

    std::set<char> uppers, lowers;
    for (const auto& [u, l] : s.on_top) {
        if (!labels.count(u) || !labels.count(l)) return "on_top references unknown brick";
        if (u == l) return "brick on top of itself";
        if (!uppers.insert(u).second) return std::string("brick appears twice as upper: ") + u;
        if (!lowers.insert(l).second) return std::string("brick appears twice as lower: ") + l;
    }
    if (auto err = check_acyclic(s)) return err;

    std::set<char> fronts, backs;
    for (const auto& [f, b] : s.in_front) {
        if (!labels.count(f) || !labels.count(b)) return "in_front references unknown brick";
        if (f == b) return "brick in front of itself";
        if (!fronts.insert(f).second) return std::string("brick appears twice as front: ") + f;
        if (!backs.insert(b).second) return std::string("brick appears twice as back: ") + b;
    }

    if (s.dimension == Dimension::D1) {
        if (!s.in_front.empty()) return "1d scene has in_front relations";
        // One stack containing every brick: exactly n-1 on_top edges and a
        // single chain.
        if (s.on_top.size() + 1 != s.bricks.size()) return "1d scene is not a single stack";
    } else {
        if (s.in_front.empty()) return "2d scene has no in_front relations";
        // Stack-bottom bricks are those never appearing as an upper.
        std::set<char> bottoms;
        for (char l : labels) {
            if (!uppers.count(l)) bottoms.insert(l);
        }
        for (const auto& [f, b] : s.in_front) {
            if (!bottoms.count(f) || !bottoms.count(b)) {
                return "in_front links a brick that is not a stack bottom";
            }
        }
        // Single chain over the base row: every base brick participates and
        // exactly one has no front-neighbour behind it.
        std::set<char> base;
        for (const auto& [f, b] : s.in_front) {
            base.insert(f);
            base.insert(b);
        }
        if (base != bottoms) return "base row chain does not cover all stack bottoms";
        int chain_heads = 0;
        for (char l : base) {
            if (!fronts.count(l)) ++chain_heads;
        }
        if (chain_heads != 1) return "in_front edges do not form a single chain";
    }
    return std::nullopt;
}

std::optional<std::string> validate(const NlvrScene& s) {
    std::map<BoxPos, std::set<int>> ordinals;
    for (const auto& o : s.objects) {
        if (!ordinals[o.box].insert(o.ordinal).second) {
            return "duplicate (box, ordinal) pair";
        }
    }
    for (BoxPos box : {BoxPos::Left, BoxPos::Middle, BoxPos::Right}) {
        const auto& set = ordinals[box];
        if (set.empty() || set.size() > 6) {
            return std::string("box '") + to_string(box) + "' must hold 1..6 objects";
        }
        if (*set.begin() != 0 || *set.rbegin() != static_cast<int>(set.size()) - 1) {
            return "ordinals are not contiguous from 0";
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate(const NavMap& m) {
    if (m.nodes.size() < 7 || m.nodes.size() > 10) return "node count outside 7..10";
    std::set<char> ids;
    for (const auto& n : m.nodes) {
        if (n.id < 'A' || n.id > 'Z') return "node id out of range";
        if (!ids.insert(n.id).second) return std::string("duplicate node id: ") + n.id;
    }
    if (!ids.count(m.root)) return "root is not a node";

    std::map<char, int> parent_count, child_count;
    for (const auto& e : m.edges) {
        if (!ids.count(e.parent) || !ids.count(e.child)) return "edge references unknown node";
        if (e.distance_m != 100 && e.distance_m != 200) return "edge distance must be 100 or 200";
        parent_count[e.child]++;
        child_count[e.parent]++;
    }
    if (m.edges.size() != m.nodes.size() - 1) return "edge count is not n-1";
    for (const auto& n : m.nodes) {
        if (n.id == m.root) {
            if (parent_count[n.id] != 0) return "root has a parent";
        } else if (parent_count[n.id] != 1) {
            return std::string("node has no unique parent: ") + n.id;
        }
        if (child_count[n.id] > 2) return std::string("node has more than two children: ") + n.id;
    }
    // Reachability from root (tree connectivity).
    std::set<char> seen{m.root};
    std::vector<char> queue{m.root};
    while (!queue.empty()) {
        char c = queue.back();
        queue.pop_back();
        for (char child : m.children_of(c)) {
            if (seen.insert(child).second) queue.push_back(child);
        }
    }
    if (seen.size() != m.nodes.size()) return "tree is not connected from root";
    return std::nullopt;
}

std::optional<std::string> validate_scene(const Scene& s) {
    return std::visit(
        [](const auto& v) -> std::optional<std::string> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ExternalStory>) {
                if (v.story.empty()) return "empty story";
                return std::nullopt;
            } else {
                return validate(v);
            }
        },
        s);
}

} // namespace cosbench
