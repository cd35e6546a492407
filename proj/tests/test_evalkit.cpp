#include "cosbench/evalkit.hpp"
#include "cosbench/rng.hpp"
#include "cosbench/taskgen.hpp"

#include "doctest.h"

#include <algorithm>

using namespace cosbench;
using namespace cosbench::evalkit;

namespace {

std::vector<char> seq(const char* s) { return {s, s + std::string(s).size()}; }

// Exhaustive LCS by subset enumeration; test-only oracle.
int lcs_brute(const std::vector<char>& a, const std::vector<char>& b) {
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
        std::vector<char> sub;
        for (size_t i = 0; i < a.size(); ++i) {
            if (mask & (1u << i)) sub.push_back(a[i]);
        }
        // Is sub a subsequence of b?
        size_t j = 0;
        for (char c : b) {
            if (j < sub.size() && c == sub[j]) ++j;
        }
        if (j == sub.size()) best = std::max<int>(best, sub.size());
    }
    return best;
}

} // namespace

TEST_CASE("count_tokens whitespace and estimate") {
    CHECK(count_tokens("", TokenMethod::Whitespace) == 0);
    CHECK(count_tokens("", TokenMethod::BpeEstimate) == 0);
    CHECK(count_tokens("A//C//B", TokenMethod::Whitespace) == 1);
    CHECK(count_tokens("  a  b\nc\t d ", TokenMethod::Whitespace) == 4);
    CHECK(count_tokens("hello world", TokenMethod::BpeEstimate) > 0);
}

TEST_CASE("lcs_len matches brute force and has the standard properties") {
    CHECK(lcs_len(seq("ACHFB"), seq("ACB")) == 3);
    CHECK(lcs_len(seq("EACBD"), seq("EABD")) == 4);
    CHECK(lcs_len(seq("ABC"), seq("ABC")) == 3);
    CHECK(lcs_len(seq("ABC"), std::vector<char>{}) == 0);

    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<char> a, b;
        int na = rng.range(0, 10), nb = rng.range(0, 10);
        for (int i = 0; i < na; ++i) a.push_back(static_cast<char>('A' + rng.range(0, 4)));
        for (int i = 0; i < nb; ++i) b.push_back(static_cast<char>('A' + rng.range(0, 4)));
        int dp = lcs_len(a, b);
        CHECK(dp == lcs_brute(a, b));
        CHECK(dp == lcs_len(b, a));
        CHECK(dp <= static_cast<int>(std::min(a.size(), b.size())));
        // Appending a shared element never decreases the LCS.
        auto a2 = a;
        auto b2 = b;
        a2.push_back('Z');
        b2.push_back('Z');
        CHECK(lcs_len(a2, b2) >= dp + 1);
    }
}

TEST_CASE("score_sequence per the LCS definition") {
    auto exact = score_sequence(seq("ACB"), seq("ACB"));
    CHECK(exact.accuracy == 1);
    CHECK(exact.precision == doctest::Approx(1.0));
    CHECK(exact.recall == doctest::Approx(1.0));

    auto near = score_sequence(seq("EABD"), seq("EACBD"));
    CHECK(near.accuracy == 0);
    CHECK(near.precision == doctest::Approx(1.0));
    CHECK(near.recall == doctest::Approx(0.8));

    auto empty = score_sequence({}, seq("AB"));
    CHECK(empty.accuracy == 0);
    CHECK(empty.precision == doctest::Approx(0.0));
    CHECK(empty.recall == doctest::Approx(0.0));

    CHECK_THROWS_AS(score_sequence(seq("A"), {}), std::invalid_argument);
}

TEST_CASE("score_set uses multiset intersection") {
    auto exact = score_set({"a", "b"}, {"b", "a"});
    CHECK(exact.accuracy == 1);
    CHECK(exact.precision == doctest::Approx(1.0));

    auto partial = score_set({"a", "b", "x"}, {"a", "b", "c"});
    CHECK(partial.accuracy == 0);
    CHECK(partial.precision == doctest::Approx(2.0 / 3.0));
    CHECK(partial.recall == doctest::Approx(2.0 / 3.0));

    auto dup = score_set({"a"}, {"a", "a"});
    CHECK(dup.accuracy == 0);
    CHECK(dup.precision == doctest::Approx(1.0));
    CHECK(dup.recall == doctest::Approx(0.5));

    auto empty = score_set({}, {"a"});
    CHECK(empty.accuracy == 0);
    CHECK(empty.precision == doctest::Approx(0.0));
    CHECK(empty.recall == doctest::Approx(0.0));
}

TEST_CASE("parse_answer extracts canonical brick answers") {
    auto a = parse_answer(Task::Brick1D, "steps...\nSo we get the result as E, A, D, F.");
    REQUIRE(a);
    CHECK(std::get<BrickGold>(*a).sequence == seq("EADF"));

    auto direct = parse_answer(Task::Brick2D, "So we get the result as M directly.");
    REQUIRE(direct);
    CHECK(std::get<BrickGold>(*direct).sequence == seq("M"));

    auto last = parse_answer(Task::Brick1D,
                             "So we get the result as A, B.\nSo we get the result as C, B.");
    REQUIRE(last);
    CHECK(std::get<BrickGold>(*last).sequence == seq("CB"));

    auto lowercase = parse_answer(Task::Brick1D, "the result as e, a, d, f");
    REQUIRE(lowercase);
    CHECK(std::get<BrickGold>(*lowercase).sequence == seq("EADF"));

    CHECK(!parse_answer(Task::Brick1D, ""));
    CHECK(!parse_answer(Task::Brick1D, "I cannot parse this prompt."));
}

TEST_CASE("parse_answer extracts navigation answers in both forms") {
    auto letters = parse_answer(Task::Nav, "...\nSo the answer is ACHFB");
    REQUIRE(letters);
    CHECK(std::get<NavGold>(*letters).path == seq("ACHFB"));

    auto commas = parse_answer(Task::Nav, "So the answer is bank A, bank C, house H");
    REQUIRE(commas);
    CHECK(std::get<NavGold>(*commas).path == seq("ACH"));

    auto result_as = parse_answer(
        Task::Nav, "So we get the result as bank A / bank C / house H / cinema F / store B.");
    REQUIRE(result_as);
    CHECK(std::get<NavGold>(*result_as).path == seq("ACHFB"));

    CHECK(!parse_answer(Task::Nav, "no clue"));
}

TEST_CASE("parse_answer extracts move lines in symbolic and prose form") {
    auto cos = parse_answer(Task::Nlvr,
                            "identify...\n- middle box: (large, round, black)\n"
                            "moves:\n1. (large, round, black) middle - left\n"
                            "2. (middle, triangle, black) right - left\n");
    REQUIRE(cos);
    REQUIRE(std::get<NlvrGold>(*cos).moves.size() == 2);
    CHECK(std::get<NlvrGold>(*cos).moves[0].from == BoxPos::Middle);
    CHECK(std::get<NlvrGold>(*cos).moves[1].size == ObjectSize::Middle);

    auto cot = parse_answer(
        Task::Nlvr, "1. Move the large round in blue from the right box to the middle box.");
    REQUIRE(cot);
    REQUIRE(std::get<NlvrGold>(*cot).moves.size() == 1);
    CHECK(std::get<NlvrGold>(*cot).moves[0].from == BoxPos::Right);

    CHECK(!parse_answer(Task::Nlvr, "nothing to report"));
}

TEST_CASE("parse_answer extracts quoted multiple-choice options") {
    auto a = parse_answer(Task::ExternalQA, "reasoning...\nSo, the correct answer is: \"Yes\".");
    REQUIRE(a);
    CHECK(std::get<OptionGold>(*a).option == "yes");

    auto b = parse_answer(Task::ExternalQA, "The answer is: both of them");
    REQUIRE(b);
    CHECK(std::get<OptionGold>(*b).option == "both of them");
}

TEST_CASE("score_answer ties parsing to instance gold") {
    auto inst = taskgen::gen_brick(77, 6, Dimension::D1, ShuffleSetting::ShuffleLabel);
    auto gold = std::get<BrickGold>(inst.gold).sequence;

    std::string canonical = "So we get the result as ";
    for (size_t i = 0; i < gold.size(); ++i) {
        canonical += std::string(1, gold[i]) + (i + 1 < gold.size() ? ", " : ".");
    }
    auto parsed = parse_answer(Task::Brick1D, canonical);
    auto score = score_answer(inst, parsed);
    CHECK(score.accuracy == 1);
    CHECK(score.precision == doctest::Approx(1.0));
    CHECK(score.recall == doctest::Approx(1.0));

    auto failure = score_answer(inst, std::nullopt);
    CHECK(failure.accuracy == 0);
    CHECK(failure.precision == doctest::Approx(0.0));
}

TEST_CASE("simulate accuracy accepts longer valid sequences, exact does not") {
    // Two stacks: A with E on top; target A. Grabbing the unrelated F first is
    // valid but non-minimal.
    const char* text =
        "There is a set of bricks. For the brick A, the color is yellow. The yellow brick B is in "
        "front of the brick A. The blue brick E is on top of the brick A . The white brick F is "
        "on top of the brick B .";
    TaskInstance inst;
    inst.task = Task::Brick2D;
    inst.scene = taskgen::parse_description(text, Task::Brick2D);
    inst.query = BrickQuery{'A'};
    inst.gold = BrickGold{{'E', 'A'}};

    auto longer = parse_answer(Task::Brick2D, "So we get the result as F, E, A.");
    auto exact = score_answer(inst, longer, AccuracyMode::Exact);
    CHECK(exact.accuracy == 0);
    auto sim = score_answer(inst, longer, AccuracyMode::Simulate);
    CHECK(sim.accuracy == 1);

    auto illegal = parse_answer(Task::Brick2D, "So we get the result as A.");
    CHECK(score_answer(inst, illegal, AccuracyMode::Simulate).accuracy == 0);
}

namespace {

EvalRecord make_record(const std::string& condition, Task task, PromptMode mode, int run,
                       const std::string& id, int acc, double prec, double rec) {
    EvalRecord r;
    r.instance_id = id;
    r.condition = condition;
    r.task = task;
    r.mode = mode;
    r.run_index = run;
    r.accuracy = acc;
    r.precision = prec;
    r.recall = rec;
    r.demo_step_tokens = 100;
    return r;
}

} // namespace

TEST_CASE("aggregate averages per run then across runs") {
    std::vector<EvalRecord> records;
    // Three runs with per-run accuracies 0.8, 0.9, 1.0 over 10 instances.
    for (int run = 0; run < 3; ++run) {
        for (int i = 0; i < 10; ++i) {
            int acc = i < 8 + run ? 1 : 0;
            records.push_back(make_record("nav/-/few_shot_cos", Task::Nav, PromptMode::FewShotCoS,
                                          run, "inst" + std::to_string(i), acc, acc, acc));
        }
    }
    auto rows = evalkit::aggregate(records);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].n == 10);
    CHECK(rows[0].runs == 3);
    CHECK(rows[0].accuracy_mean == doctest::Approx(0.9));
    REQUIRE(rows[0].accuracy_std);
    CHECK(*rows[0].accuracy_std == doctest::Approx(0.1));
    CHECK(rows[0].demo_step_tokens == 100);
}

TEST_CASE("aggregate reports no std for a single run and flags mixed conditions") {
    std::vector<EvalRecord> one_run = {
        make_record("nav/-/zero_shot_cot", Task::Nav, PromptMode::ZeroShotCoT, 0, "a", 1, 1, 1)};
    auto rows = evalkit::aggregate(one_run);
    REQUIRE(rows.size() == 1);
    CHECK(!rows[0].accuracy_std);
    CHECK(!rows[0].demo_step_tokens); // zero-shot has no demos

    std::vector<EvalRecord> mixed = {
        make_record("same/key", Task::Nav, PromptMode::FewShotCoS, 0, "a", 1, 1, 1),
        make_record("same/key", Task::Nlvr, PromptMode::FewShotCoS, 0, "b", 1, 1, 1)};
    CHECK_THROWS_AS(evalkit::aggregate(mixed), AggregationError);
}

TEST_CASE("error records are excluded from means") {
    std::vector<EvalRecord> records = {
        make_record("nav/-/few_shot_cos", Task::Nav, PromptMode::FewShotCoS, 0, "a", 1, 1, 1),
        make_record("nav/-/few_shot_cos", Task::Nav, PromptMode::FewShotCoS, 0, "b", 0, 0, 0)};
    records[1].error = "network: boom";
    auto rows = evalkit::aggregate(records);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].accuracy_mean == doctest::Approx(1.0));
    CHECK(rows[0].errors == 1);
    CHECK(rows[0].n == 1);
}
