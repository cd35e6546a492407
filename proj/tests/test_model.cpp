#include "cosbench/hash.hpp"
#include "cosbench/json_io.hpp"
#include "cosbench/rng.hpp"
#include "cosbench/taskgen.hpp"
#include "cosbench/validate.hpp"

#include "doctest.h"

#include <set>

using namespace cosbench;

namespace {

BrickScene small_stack() {
    // B yellow at the bottom, C on B, A on C.
    BrickScene s;
    s.dimension = Dimension::D1;
    s.bricks = {{'A', BrickColor::Yellow}, {'B', BrickColor::Yellow}, {'C', BrickColor::Yellow}};
    s.on_top = {{'C', 'B'}, {'A', 'C'}};
    s.sort_canonical();
    return s;
}

} // namespace

TEST_CASE("rng is deterministic and unbiased enough to trust") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng r(7);
    std::vector<int> counts(6, 0);
    for (int i = 0; i < 60000; ++i) counts[r.range(0, 5)]++;
    for (int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
}

TEST_CASE("rng shuffle is a permutation") {
    Rng r(3);
    std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
    r.shuffle(v);
    std::set<int> seen(v.begin(), v.end());
    CHECK(seen.size() == 8);
}

TEST_CASE("sha256 matches a known vector") {
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(short_hash("abc") == "ba7816bf8f01cfea");
}

TEST_CASE("scene validators accept generated shapes and reject broken ones") {
    BrickScene s = small_stack();
    CHECK(!validate(s));

    SUBCASE("duplicate upper") {
        s.on_top.push_back({'A', 'B'});
        CHECK(validate(s));
    }
    SUBCASE("cycle") {
        s.on_top = {{'A', 'B'}, {'B', 'C'}, {'C', 'A'}};
        CHECK(validate(s));
    }
    SUBCASE("gap in labels") {
        s.bricks[2].label = 'Z';
        CHECK(validate(s));
    }
    SUBCASE("1d must be a single stack") {
        s.on_top.pop_back();
        CHECK(validate(s));
    }
}

TEST_CASE("nav validator checks tree shape") {
    NavMap m;
    m.root = 'A';
    for (int i = 0; i < 7; ++i) m.nodes.push_back({static_cast<char>('A' + i), LandmarkKind::Bank});
    for (int i = 1; i < 7; ++i) {
        m.edges.push_back({'A', static_cast<char>('A' + i), 100});
    }
    // Root with six children violates the binary-tree constraint.
    CHECK(validate(m));

    m.edges = {{'A', 'B', 100}, {'A', 'C', 200}, {'B', 'D', 100},
               {'B', 'E', 100}, {'C', 'F', 200}, {'C', 'G', 100}};
    m.sort_canonical();
    CHECK(!validate(m));

    SUBCASE("bad distance") {
        m.edges[0].distance_m = 150;
        CHECK(validate(m));
    }
}

TEST_CASE("canonical serialization round-trips byte-identically") {
    auto check_roundtrip = [](const TaskInstance& inst) {
        std::string once = dump_canonical(to_json(inst));
        TaskInstance back = instance_from_json(json::parse(once));
        std::string twice = dump_canonical(to_json(back));
        CHECK(once == twice);
        CHECK(back.id == inst.id);
        CHECK(back.gold == inst.gold);
        CHECK(back.scene == inst.scene);
    };
    check_roundtrip(taskgen::gen_brick(1, 5, Dimension::D1, ShuffleSetting::NoShuffle));
    check_roundtrip(taskgen::gen_brick(2, 6, Dimension::D2, ShuffleSetting::ShuffleBoth));
    check_roundtrip(taskgen::gen_nlvr(3));
    check_roundtrip(taskgen::gen_nav(4));
}

TEST_CASE("instance id hashes content, not seed or rendering") {
    TaskInstance a = taskgen::gen_brick(10, 5, Dimension::D1, ShuffleSetting::NoShuffle);

    SUBCASE("hashing twice is stable") { CHECK(instance_id(a) == a.id); }

    SUBCASE("seed alone does not change the id") {
        TaskInstance b = a;
        b.seed = a.seed + 999;
        CHECK(instance_id(b) == a.id);
    }

    SUBCASE("a relabelled brick changes the id") {
        TaskInstance b = a;
        auto scene = std::get<BrickScene>(b.scene);
        // Swap the colors of two bricks to change content.
        scene.bricks[0].color = scene.bricks[0].color == BrickColor::Blue ? BrickColor::White
                                                                          : BrickColor::Blue;
        b.scene = scene;
        CHECK(instance_id(b) != a.id);
    }
}

TEST_CASE("symbol config rejects empty and colliding tokens") {
    SymbolConfig ok;
    CHECK_NOTHROW(ok.validate());

    SymbolConfig empty;
    empty.on_top = "";
    CHECK_THROWS_AS(empty.validate(), ConfigError);

    SymbolConfig clash;
    clash.on_top = ",";
    CHECK_THROWS_AS(clash.validate(), ConfigError); // collides with list_sep

    for (const auto& [name, preset] : symbol_presets()) {
        CAPTURE(name);
        CHECK_NOTHROW(preset.validate());
    }
    CHECK(symbol_presets().at("comma").on_top == ",");
}

TEST_CASE("model params validation") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    p.temperature = -0.1;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}
