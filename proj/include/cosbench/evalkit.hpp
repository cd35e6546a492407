#pragma once

#include "cosbench/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cosbench {
namespace evalkit {

enum class TokenMethod { Whitespace, BpeEstimate };

/// Whitespace: number of maximal non-whitespace runs. BpeEstimate: a rough
/// byte-pair figure for cross-report comparability, the rounded mean of
/// chars/4 and words*4/3.
int count_tokens(const std::string& text, TokenMethod method);

/// Longest common subsequence length, standard dynamic program.
int lcs_len(const std::vector<char>& a, const std::vector<char>& b);
int lcs_len(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct Score {
    int accuracy = 0; // 0 or 1
    double precision = 0.0;
    double recall = 0.0;
};

/// accuracy: exact match; precision: LCS/|pred|; recall: LCS/|gold|.
Score score_sequence(const std::vector<char>& pred, const std::vector<char>& gold);

/// Multiset scoring so duplicate elements stay distinguishable.
/// accuracy: multiset equality; precision: |pred ∩ gold| / |pred|;
/// recall: |pred ∩ gold| / |gold|.
Score score_set(const std::vector<std::string>& pred, const std::vector<std::string>& gold);

/// Extracts the final answer from a model completion. Returns nullopt on
/// parse failure (scored 0/0/0 by callers).
std::optional<GoldAnswer> parse_answer(Task task, const std::string& completion);

enum class AccuracyMode { Exact, Simulate };
AccuracyMode accuracy_mode_from_string(const std::string& s);

/// Scores a parsed answer against the instance gold. Simulate mode accepts
/// any simulate_grabs-valid brick sequence ending at the target; other tasks
/// are unaffected by the mode.
Score score_answer(const TaskInstance& inst, const std::optional<GoldAnswer>& parsed,
                   AccuracyMode mode = AccuracyMode::Exact);

struct AggregationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Groups scored records by condition, averaging per run and then across
/// runs (sample std, reported only with >= 2 runs). Error records are
/// excluded from means and counted separately.
std::vector<MetricRow> aggregate(const std::vector<EvalRecord>& records);

} // namespace evalkit
} // namespace cosbench
