#include "cosbench/oracle.hpp"
#include "cosbench/taskgen.hpp"

#include "doctest.h"

#include <algorithm>

using namespace cosbench;
using namespace cosbench::oracle;

namespace {

// Six bricks in one stack, bottom to top: B, C, F, D, A, E.
const char* kSixBrickText =
    "There is a set of bricks. The white brick F is on top of the brick C . The white brick C is "
    "on top of the brick B . The yellow brick E is on top of the brick A . For the brick B, the "
    "color is white. The white brick D is on top of the brick F . The blue brick A is on top of "
    "the brick D .";

// Ten landmarks rooted at bank A; two stores at 600 m and 700 m.
const char* kTenNodeMapText =
    "There is a set of roads and a set of landmarks. The start point is bank A. There is a road "
    "which is 200 meters long from bank A to bank C. There is a road which is 100 meters long "
    "from bank C to house H. There is a road which is 100 meters long from house H to cinema F. "
    "There is a road which is 200 meters long from cinema F to store B. There is a road which is "
    "100 meters long from store B to store G. There is a road which is 200 meters long from bank "
    "C to house D. There is a road which is 200 meters long from house D to garden J. There is a "
    "road which is 100 meters long from bank A to cinema I. There is a road which is 100 meters "
    "long from cinema I to house E.";

// Start bank H; schools at 500 m (via store E) and 200 m (direct).
const char* kBankHMapText =
    "There is a set of roads and a set of landmarks. The start point is bank H. There is a road "
    "which is 100 meters long from bank H to store E. There is a road which is 200 meters long "
    "from store E to bank C. There is a road which is 100 meters long from bank C to house A. "
    "There is a road which is 100 meters long from house A to house F. There is a road which is "
    "200 meters long from bank C to garden I. There is a road which is 200 meters long from store "
    "E to cinema G. There is a road which is 200 meters long from cinema G to school J. There is "
    "a road which is 200 meters long from bank H to school D. There is a road which is 100 meters "
    "long from school D to store B.";

const char* kBlackObjectsStory =
    "There are three boxes. In the left box, there are one large round in black, one small square "
    "in blue, one small square in blue, one small triangle in yellow, one middle square in "
    "yellow. In the middle box, there are one large square in yellow, one middle triangle in "
    "blue, one large round in black. In the right box, there are one large square in blue, one "
    "large triangle in black, one middle triangle in black.";

const char* kRoundsStory =
    "There are three boxes. In the left box, there are one middle square in yellow, one middle "
    "square in black, one small square in blue, one middle square in blue. In the middle box, "
    "there are one large square in blue, one middle square in blue, one middle square in black, "
    "one large triangle in black, one middle round in blue, one small square in yellow. In the "
    "right box, there are one large round in blue, one small triangle in yellow, one large "
    "triangle in blue.";

std::vector<char> seq(const char* s) { return {s, s + std::string(s).size()}; }

} // namespace

TEST_CASE("solve_brick lists the covering bricks top-down then the target") {
    auto scene = std::get<BrickScene>(taskgen::parse_description(kSixBrickText, Task::Brick1D));
    CHECK(solve_brick(scene, 'F') == seq("EADF"));
    CHECK(solve_brick(scene, 'E') == seq("E"));
    CHECK(solve_brick(scene, 'B') == seq("EADFCB"));
    CHECK_THROWS_AS(solve_brick(scene, 'Z'), std::invalid_argument);
}

TEST_CASE("simulate_grabs legality") {
    auto scene = std::get<BrickScene>(taskgen::parse_description(kSixBrickText, Task::Brick1D));

    CHECK(simulate_grabs(scene, seq("EADF")).valid);
    CHECK(simulate_grabs(scene, {}).valid); // vacuous

    auto covered = simulate_grabs(scene, seq("F"));
    CHECK(!covered.valid);
    CHECK(covered.reason.find('D') != std::string::npos);

    CHECK(!simulate_grabs(scene, seq("EE")).valid); // double grab
}

TEST_CASE("solve_nlvr filters matches outside the target box") {
    auto scene = std::get<NlvrScene>(taskgen::parse_description(kBlackObjectsStory, Task::Nlvr));
    auto moves = solve_nlvr(scene, ObjectColor::Black, BoxPos::Left);
    REQUIRE(moves.size() == 3);
    CHECK(moves[0].from == BoxPos::Middle);
    CHECK(moves[0].shape == ObjectShape::Round);
    CHECK(moves[0].size == ObjectSize::Large);
    CHECK(moves[1].from == BoxPos::Right);
    CHECK(moves[1].size == ObjectSize::Middle);
    CHECK(moves[1].shape == ObjectShape::Triangle);
    CHECK(moves[2].from == BoxPos::Right);
    CHECK(moves[2].size == ObjectSize::Large);
    CHECK(moves[2].shape == ObjectShape::Triangle);

    auto rounds = std::get<NlvrScene>(taskgen::parse_description(kRoundsStory, Task::Nlvr));
    auto round_moves = solve_nlvr(rounds, ObjectShape::Round, BoxPos::Middle);
    REQUIRE(round_moves.size() == 1);
    CHECK(round_moves[0].size == ObjectSize::Large);
    CHECK(round_moves[0].color == ObjectColor::Blue);
    CHECK(round_moves[0].from == BoxPos::Right);

    CHECK(solve_nlvr(rounds, ObjectShape::Round, BoxPos::Left).size() == 2);
    // Condition matching nothing outside the target box.
    NlvrScene empty_case = rounds;
    CHECK(solve_nlvr(empty_case, ObjectColor::Black, BoxPos::Left).size() == 3);
}

TEST_CASE("solve_nav picks the unique nearest landmark of the kind") {
    auto map = std::get<NavMap>(taskgen::parse_description(kTenNodeMapText, Task::Nav));
    REQUIRE(map.nodes.size() == 10);
    auto sol = solve_nav(map, LandmarkKind::Store);
    CHECK(sol.path == seq("ACHFB"));
    CHECK(sol.distance_m == 600);

    auto map2 = std::get<NavMap>(taskgen::parse_description(kBankHMapText, Task::Nav));
    auto school = solve_nav(map2, LandmarkKind::School);
    CHECK(school.path == seq("HD"));
    CHECK(school.distance_m == 200);

    CHECK_THROWS_AS(solve_nav(map2, LandmarkKind::Cinema), std::exception); // one cinema exists
}

TEST_CASE("solve_nav error kinds") {
    NavMap m;
    m.root = 'A';
    m.nodes = {{'A', LandmarkKind::Bank}, {'B', LandmarkKind::Store}, {'C', LandmarkKind::Store}};
    m.edges = {{'A', 'B', 100}, {'A', 'C', 100}};
    m.sort_canonical();
    CHECK_THROWS_AS(solve_nav(m, LandmarkKind::Garden), UnsolvableError);
    CHECK_THROWS_AS(solve_nav(m, LandmarkKind::Store), AmbiguityError);

    m.edges[1].distance_m = 200;
    auto sol = solve_nav(m, LandmarkKind::Store);
    CHECK(sol.path == seq("AB"));
    CHECK(sol.distance_m == 100);
}

TEST_CASE("enumerate_nav_paths is a faithful brute force") {
    auto map = std::get<NavMap>(taskgen::parse_description(kTenNodeMapText, Task::Nav));
    auto entries = testsupport::enumerate_nav_paths(map);
    CHECK(entries.size() == 9); // all non-root nodes

    for (const auto& e : entries) {
        CHECK(e.path.front() == map.root);
        CHECK(e.path.back() == e.node);
        // Telescoping: parent distance + edge = child distance.
        int sum = 0;
        for (size_t i = 0; i + 1 < e.path.size(); ++i) {
            for (const auto& edge : map.edges) {
                if (edge.parent == e.path[i] && edge.child == e.path[i + 1]) sum += edge.distance_m;
            }
        }
        CHECK(sum == e.distance_m);
    }

    // Minimum over enumerated stores equals the solver's answer.
    int best = 1 << 30;
    for (const auto& e : entries) {
        if (map.kind_of(e.node) == LandmarkKind::Store) best = std::min(best, e.distance_m);
    }
    CHECK(best == solve_nav(map, LandmarkKind::Store).distance_m);
}

TEST_CASE("solver output is the unique minimal grab sequence ending at the target") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Dimension dim = seed % 2 ? Dimension::D2 : Dimension::D1;
        int n = 3 + static_cast<int>(seed % 5);
        auto inst = taskgen::gen_brick(seed, dim == Dimension::D2 ? n + 1 : n, dim,
                                       ShuffleSetting::ShuffleBoth);
        const auto& scene = std::get<BrickScene>(inst.scene);
        char target = std::get<BrickQuery>(inst.query).target;
        auto expected = solve_brick(scene, target);

        CHECK(simulate_grabs(scene, expected).valid);
        CHECK(expected.back() == target);

        auto all = testsupport::enumerate_grab_sequences(scene, target);
        REQUIRE(!all.empty());
        auto shortest = *std::min_element(
            all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
        size_t min_len = shortest.size();
        int with_min = 0;
        for (const auto& s : all) {
            if (s.size() == min_len) {
                ++with_min;
                CHECK(s == expected);
            }
        }
        CHECK(with_min == 1);
    }
}
