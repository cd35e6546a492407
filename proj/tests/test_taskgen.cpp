#include "cosbench/hash.hpp"
#include "cosbench/json_io.hpp"
#include "cosbench/oracle.hpp"
#include "cosbench/taskgen.hpp"
#include "cosbench/validate.hpp"

#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

using namespace cosbench;
using namespace cosbench::taskgen;

namespace fs = std::filesystem;

namespace {

std::multiset<std::pair<char, char>> relabel(const std::vector<std::pair<char, char>>& edges,
                                             const std::map<char, char>& perm) {
    std::multiset<std::pair<char, char>> out;
    for (auto [a, b] : edges) out.insert({perm.at(a), perm.at(b)});
    return out;
}

} // namespace

TEST_CASE("gen_brick rejects out-of-range sizes") {
    CHECK_THROWS_AS(gen_brick(1, 2, Dimension::D1, ShuffleSetting::NoShuffle), ConfigError);
    CHECK_THROWS_AS(gen_brick(1, 9, Dimension::D1, ShuffleSetting::NoShuffle), ConfigError);
    CHECK_NOTHROW(gen_brick(1, 9, Dimension::D2, ShuffleSetting::NoShuffle));
}

TEST_CASE("single-brick instance targets the only brick") {
    GenConfig cfg;
    cfg.brick_min = 1;
    auto inst = gen_brick(5, 1, Dimension::D1, ShuffleSetting::NoShuffle, cfg);
    CHECK(std::get<BrickQuery>(inst.query).target == 'A');
    CHECK(std::get<BrickGold>(inst.gold).sequence == std::vector<char>{'A'});
}

TEST_CASE("no-shuffle labels run alphabetically bottom-to-top and sentences bottom-to-top") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        auto inst = gen_brick(seed, 3 + seed % 6, Dimension::D1, ShuffleSetting::NoShuffle);
        const auto& scene = std::get<BrickScene>(inst.scene);

        // Height-sorted labels must be alphabetical.
        std::vector<char> stack = brick_stack(scene, brick_base_chain(scene)[0]);
        CHECK(std::is_sorted(stack.begin(), stack.end()));

        // Sentences list relations bottom-to-top: "on top of" lines appear in
        // stack order.
        size_t prev = 0;
        bool ordered = true;
        for (size_t h = 1; h < stack.size(); ++h) {
            std::string sentence = std::string("brick ") + stack[h] + " is on top of the brick " +
                                   stack[h - 1];
            size_t pos = inst.description.find(sentence);
            if (pos == std::string::npos || pos < prev) ordered = false;
            prev = pos;
        }
        CHECK(ordered);
    }
}

TEST_CASE("shuffle-label scenes are a relabelling of the unshuffled scene") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        int n = 4 + static_cast<int>(seed % 5);
        auto plain = gen_brick(seed, n, Dimension::D2, ShuffleSetting::NoShuffle);
        auto shuffled = gen_brick(seed, n, Dimension::D2, ShuffleSetting::ShuffleLabel);

        const auto& ps = std::get<BrickScene>(plain.scene);
        const auto& ss = std::get<BrickScene>(shuffled.scene);

        const std::string& plain_perm = plain.meta.at("label_permutation");
        const std::string& shuf_perm = shuffled.meta.at("label_permutation");
        std::map<char, char> perm; // plain label -> shuffled label
        for (size_t i = 0; i < plain_perm.size(); ++i) perm[plain_perm[i]] = shuf_perm[i];

        CHECK(relabel(ps.on_top, perm) ==
              std::multiset<std::pair<char, char>>(ss.on_top.begin(), ss.on_top.end()));
        CHECK(relabel(ps.in_front, perm) ==
              std::multiset<std::pair<char, char>>(ss.in_front.begin(), ss.in_front.end()));
    }
}

TEST_CASE("shuffle-description keeps the scene but permutes sentences") {
    auto plain = gen_brick(11, 7, Dimension::D1, ShuffleSetting::NoShuffle);
    auto shuffled = gen_brick(11, 7, Dimension::D1, ShuffleSetting::ShuffleDescription);
    CHECK(plain.scene == shuffled.scene);
    CHECK(plain.description != shuffled.description);
    // Round-trip agrees on the scene regardless of sentence order.
    CHECK(parse_description(shuffled.description, Task::Brick1D) == plain.scene);
}

TEST_CASE("generators only emit valid scenes with oracle-consistent gold") {
    GenConfig cfg;
    for (uint64_t seed = 100; seed < 160; ++seed) {
        auto brick = generate_for(Task::Brick2D, ShuffleSetting::ShuffleBoth, seed, cfg);
        CHECK(!validate_scene(brick.scene));
        const auto& scene = std::get<BrickScene>(brick.scene);
        CHECK(std::get<BrickGold>(brick.gold).sequence ==
              oracle::solve_brick(scene, std::get<BrickQuery>(brick.query).target));

        auto nlvr = gen_nlvr(seed);
        CHECK(!validate_scene(nlvr.scene));
        const auto& nq = std::get<NlvrQuery>(nlvr.query);
        auto expected = oracle::solve_nlvr(std::get<NlvrScene>(nlvr.scene), nq.value, nq.target_box);
        CHECK(std::get<NlvrGold>(nlvr.gold).moves == expected);
        CHECK(!expected.empty()); // non-empty-gold rule

        auto nav = gen_nav(seed);
        CHECK(!validate_scene(nav.scene));
        auto sol = oracle::solve_nav(std::get<NavMap>(nav.scene), std::get<NavQuery>(nav.query).kind);
        CHECK(std::get<NavGold>(nav.gold).path == sol.path);
        CHECK(std::get<NavGold>(nav.gold).distance_m == sol.distance_m);
    }
}

TEST_CASE("nav questions avoid the root kind and prefer duplicated kinds") {
    int preferred = 0, total = 0;
    for (uint64_t seed = 0; seed < 80; ++seed) {
        auto inst = gen_nav(seed);
        const auto& map = std::get<NavMap>(inst.scene);
        auto kind = std::get<NavQuery>(inst.query).kind;
        CHECK(kind != map.kind_of(map.root));
        int count = 0;
        for (const auto& n : map.nodes) {
            if (n.id != map.root && n.kind == kind) count++;
        }
        CHECK(count >= 1);
        if (count >= 2) preferred++;
        total++;
    }
    // Duplicated kinds exist in almost every 7-10 node map, so the preference
    // should dominate.
    CHECK(preferred > total * 3 / 4);
}

TEST_CASE("round-trip: parse(render(scene)) reconstructs the scene") {
    GenConfig cfg;
    for (uint64_t seed = 0; seed < 250; ++seed) {
        ShuffleSetting setting = static_cast<ShuffleSetting>(seed % 4);
        auto b1 = generate_for(Task::Brick1D, setting, seed, cfg);
        CHECK(parse_description(b1.description, Task::Brick1D) == b1.scene);
        auto b2 = generate_for(Task::Brick2D, setting, seed, cfg);
        CHECK(parse_description(b2.description, Task::Brick2D) == b2.scene);
        auto nl = gen_nlvr(seed);
        CHECK(parse_description(nl.description, Task::Nlvr) == nl.scene);
        auto nv = gen_nav(seed);
        CHECK(parse_description(nv.description, Task::Nav) == nv.scene);
    }
}

TEST_CASE("render matches the fixed sentence templates") {
    GenConfig cfg;
    cfg.brick_min = 1;
    auto one = gen_brick(3, 1, Dimension::D1, ShuffleSetting::NoShuffle, cfg);
    CHECK(one.description.rfind("There is a set of bricks. For the brick A, the color is ", 0) ==
          0);

    auto nav = gen_nav(9);
    CHECK(nav.description.rfind("There is a set of roads and a set of landmarks. The start point "
                                "is ",
                                0) == 0);
    CHECK(nav.description.find(" meters long from ") != std::string::npos);
    CHECK(nav.question.rfind("From the start point, how to reach the nearest ", 0) == 0);

    auto nlvr = gen_nlvr(9);
    CHECK(nlvr.description.rfind("There are three boxes. In the left box, there are one ", 0) == 0);
    CHECK(nlvr.question.rfind("How to move all ", 0) == 0);
}

TEST_CASE("parse_description failures carry the offending sentence") {
    CHECK_THROWS_AS(parse_description("", Task::Brick1D), ParseError);
    try {
        parse_description("There is a set of bricks. The purple brick Q hums quietly.",
                          Task::Brick1D);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.sentence.find("purple brick Q") != std::string::npos);
    }
}

TEST_CASE("parse_question pulls the last structured question") {
    auto q = parse_question("How to get brick A? ... How to get brick F?", Task::Brick1D);
    CHECK(std::get<BrickQuery>(q).target == 'F');

    auto nq = parse_question("How to move all rounds to the middle box?", Task::Nlvr);
    CHECK(std::get<NlvrQuery>(nq).value == NlvrValue{ObjectShape::Round});
    CHECK(std::get<NlvrQuery>(nq).target_box == BoxPos::Middle);

    auto cq = parse_question("How to move all black objects to the left box?", Task::Nlvr);
    CHECK(std::get<NlvrQuery>(cq).value == NlvrValue{ObjectColor::Black});

    auto sq = parse_question("How to move all middle objects to the right box?", Task::Nlvr);
    CHECK(std::get<NlvrQuery>(sq).value == NlvrValue{ObjectSize::Middle});

    auto vq = parse_question("From the start point, how to reach the nearest school?", Task::Nav);
    CHECK(std::get<NavQuery>(vq).kind == LandmarkKind::School);
}

TEST_CASE("dataset build is deterministic and correctly sized") {
    GenConfig cfg;
    cfg.brick_per_condition = 4;
    cfg.nlvr_count = 6;
    cfg.nav_count = 5;

    fs::path dir1 = fs::temp_directory_path() / "cosbench_ds_a";
    fs::path dir2 = fs::temp_directory_path() / "cosbench_ds_b";
    fs::remove_all(dir1);
    fs::remove_all(dir2);

    auto m1 = build_dataset(cfg, dir1.string());
    auto m2 = build_dataset(cfg, dir2.string());

    CHECK(m1.total == 8 * 4 + 6 + 5);
    CHECK(m1.files.size() == 10);
    REQUIRE(m1.files.size() == m2.files.size());
    for (size_t i = 0; i < m1.files.size(); ++i) {
        CHECK(m1.files[i].digest == m2.files[i].digest);
        CHECK(file_digest((dir1 / m1.files[i].file).string()) == m1.files[i].digest);
    }

    auto manifest = read_manifest(dir1.string());
    CHECK(manifest.total == m1.total);
    CHECK(manifest.config_hash == m1.config_hash);

    auto loaded = load_instances(dir1.string(), Task::Brick1D, ShuffleSetting::ShuffleLabel);
    CHECK(loaded.size() == 4);
    for (const auto& inst : loaded) {
        CHECK(inst.task == Task::Brick1D);
        CHECK(inst.setting == ShuffleSetting::ShuffleLabel);
        CHECK(inst.id == instance_id(inst));
    }

    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("zero-count config writes empty files and a valid manifest") {
    GenConfig cfg;
    cfg.brick_per_condition = 0;
    cfg.nlvr_count = 0;
    cfg.nav_count = 0;
    fs::path dir = fs::temp_directory_path() / "cosbench_ds_empty";
    fs::remove_all(dir);
    auto m = build_dataset(cfg, dir.string());
    CHECK(m.total == 0);
    for (const auto& f : m.files) {
        CHECK(f.count == 0);
        CHECK(fs::file_size(dir / f.file) == 0);
    }
    fs::remove_all(dir);
}

TEST_CASE("instance ids do not collide across a large sample") {
    GenConfig cfg;
    std::set<std::string> ids;
    int total = 0;
    for (uint64_t seed = 0; seed < 2000; ++seed) {
        ids.insert(generate_for(Task::Brick1D, ShuffleSetting::ShuffleBoth, seed, cfg).id);
        ids.insert(generate_for(Task::Nav, std::nullopt, seed, cfg).id);
        total += 2;
    }
    CHECK(static_cast<int>(ids.size()) == total);
}
