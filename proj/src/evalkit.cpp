#include "cosbench/evalkit.hpp"

#include "cosbench/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace cosbench {
namespace evalkit {

namespace {

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::string last_nonempty_line(const std::string& text) {
    auto lines = lines_of(text);
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        std::string t = trim(*it);
        if (!t.empty()) return t;
    }
    return "";
}

// Segment after the last occurrence of `marker` (case-insensitive), up to the
// end of that line.
std::optional<std::string> after_last_marker(const std::string& text, const std::string& marker) {
    std::string haystack = lower(text);
    size_t pos = haystack.rfind(lower(marker));
    if (pos == std::string::npos) return std::nullopt;
    size_t start = pos + marker.size();
    size_t end = text.find('\n', start);
    return text.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

// Single uppercase letters from a list like "E, A, D, F." or "E A D F",
// ignoring filler words.
std::vector<char> letters_from_list(const std::string& segment) {
    static const std::set<std::string> filler = {"and", "then", "directly", "the", "brick",
                                                 "bricks", "landmark", "landmarks"};
    std::vector<char> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::string t = token;
        while (!t.empty() && (t.back() == '.' || t.back() == ',')) t.pop_back();
        if (t.size() == 1 && std::isalpha(static_cast<unsigned char>(t[0]))) {
            out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(t[0]))));
        } else if (!filler.count(lower(t))) {
            // Names like "bank A" arrive as two tokens; other words are noise.
        }
        token.clear();
    };
    for (char c : segment) {
        if (c == ' ' || c == ',' || c == '/' || c == '\t') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return out;
}

std::optional<GoldAnswer> parse_brick_answer(const std::string& completion) {
    auto segment = after_last_marker(completion, "result as");
    if (!segment) segment = after_last_marker(completion, "answer is");
    std::vector<char> seq;
    if (segment) seq = letters_from_list(*segment);
    if (seq.empty()) seq = letters_from_list(last_nonempty_line(completion));
    if (seq.empty()) return std::nullopt;
    return BrickGold{seq};
}

std::optional<GoldAnswer> parse_nav_answer(const std::string& completion) {
    auto segment = after_last_marker(completion, "answer is");
    if (!segment) segment = after_last_marker(completion, "result as");
    std::vector<char> path;
    if (segment) {
        std::string t = trim(*segment);
        while (!t.empty() && (t.back() == '.' || t.back() == ',')) t.pop_back();
        // A bare letter string like "ACHFB" is the canonical form; otherwise
        // fall back to a separated landmark list.
        if (!t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) {
                return std::isupper(c);
            })) {
            path.assign(t.begin(), t.end());
        } else {
            path = letters_from_list(*segment);
        }
    }
    if (path.empty()) path = letters_from_list(last_nonempty_line(completion));
    if (path.empty()) return std::nullopt;
    NavGold g;
    g.path = path;
    g.distance_m = 0; // not recoverable from the completion; scoring uses the path
    return g;
}

std::optional<GoldAnswer> parse_nlvr_answer(const std::string& completion) {
    // Symbolic move lines: "1. (large, round, blue) right - middle" (also "-"
    // bullets and an optional trailing "box").
    static const std::regex cos_move(
        R"((?:-|\d+\.)\s*\(\s*(small|middle|large)\s*,\s*(square|round|triangle)\s*,\s*(yellow|black|blue)\s*\)\s*(left|middle|right)(?:\s+box)?\s*(?:-|to)\s*(left|middle|right)(?:\s+box)?)");
    // Prose move lines: "1. Move the large round in blue from the right box to
    // the middle box."
    static const std::regex cot_move(
        R"(Move the (small|middle|large) (square|round|triangle) in (yellow|black|blue) from the (left|middle|right) box to the (left|middle|right) box)");

    NlvrGold g;
    for (auto it = std::sregex_iterator(completion.begin(), completion.end(), cos_move);
         it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        g.moves.push_back({size_from_string(m[1].str()), shape_from_string(m[2].str()),
                           object_color_from_string(m[3].str()), box_from_string(m[4].str()), -1});
    }
    if (g.moves.empty()) {
        for (auto it = std::sregex_iterator(completion.begin(), completion.end(), cot_move);
             it != std::sregex_iterator(); ++it) {
            const auto& m = *it;
            g.moves.push_back({size_from_string(m[1].str()), shape_from_string(m[2].str()),
                               object_color_from_string(m[3].str()), box_from_string(m[4].str()),
                               -1});
        }
    }
    if (g.moves.empty()) return std::nullopt;
    return g;
}

std::string normalize_option(const std::string& s) {
    std::string t = trim(s);
    while (!t.empty() && (t.back() == '.' || t.back() == ',')) t.pop_back();
    return lower(trim(t));
}

std::optional<GoldAnswer> parse_external_answer(const std::string& completion) {
    // Last double-quoted span wins; fall back to the last non-empty line.
    static const std::regex quoted(R"("([^"]+)")");
    std::string found;
    for (auto it = std::sregex_iterator(completion.begin(), completion.end(), quoted);
         it != std::sregex_iterator(); ++it) {
        found = (*it)[1].str();
    }
    if (found.empty()) {
        found = last_nonempty_line(completion);
        // Strip a leading "So, the correct answer is:" style preamble.
        size_t colon = found.rfind(':');
        if (colon != std::string::npos) found = found.substr(colon + 1);
    }
    std::string norm = normalize_option(found);
    if (norm.empty()) return std::nullopt;
    return OptionGold{norm};
}

} // namespace

int count_tokens(const std::string& text, TokenMethod method) {
    int words = 0;
    bool in_token = false;
    for (char c : text) {
        bool ws = c == ' ' || c == '\t' || c == '\r' || c == '\n';
        if (!ws && !in_token) ++words;
        in_token = !ws;
    }
    if (method == TokenMethod::Whitespace) return words;
    if (text.empty()) return 0;
    double chars = static_cast<double>(text.size());
    double blended = 0.5 * (chars / 4.0) + 0.5 * (words * 4.0 / 3.0);
    return static_cast<int>(std::lround(blended));
}

namespace {

template <typename T>
int lcs_len_impl(const std::vector<T>& a, const std::vector<T>& b) {
    const size_t n = a.size(), m = b.size();
    if (n == 0 || m == 0) return 0;
    std::vector<int> prev(m + 1, 0), cur(m + 1, 0);
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= m; ++j) {
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

} // namespace

int lcs_len(const std::vector<char>& a, const std::vector<char>& b) { return lcs_len_impl(a, b); }
int lcs_len(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return lcs_len_impl(a, b);
}

Score score_sequence(const std::vector<char>& pred, const std::vector<char>& gold) {
    if (gold.empty()) throw std::invalid_argument("gold sequence is empty");
    Score s;
    int lcs = lcs_len(pred, gold);
    s.accuracy = pred == gold ? 1 : 0;
    s.precision = pred.empty() ? 0.0 : static_cast<double>(lcs) / pred.size();
    s.recall = static_cast<double>(lcs) / gold.size();
    return s;
}

Score score_set(const std::vector<std::string>& pred, const std::vector<std::string>& gold) {
    if (gold.empty()) throw std::invalid_argument("gold set is empty");
    std::map<std::string, int> pc, gc;
    for (const auto& k : pred) pc[k]++;
    for (const auto& k : gold) gc[k]++;
    int inter = 0;
    for (const auto& [k, c] : pc) {
        auto it = gc.find(k);
        if (it != gc.end()) inter += std::min(c, it->second);
    }
    Score s;
    s.accuracy = pc == gc ? 1 : 0;
    s.precision = pred.empty() ? 0.0 : static_cast<double>(inter) / pred.size();
    s.recall = static_cast<double>(inter) / gold.size();
    return s;
}

std::optional<GoldAnswer> parse_answer(Task task, const std::string& completion) {
    if (trim(completion).empty()) return std::nullopt;
    switch (task) {
        case Task::Brick1D:
        case Task::Brick2D: return parse_brick_answer(completion);
        case Task::Nav: return parse_nav_answer(completion);
        case Task::Nlvr: return parse_nlvr_answer(completion);
        case Task::ExternalQA: return parse_external_answer(completion);
    }
    return std::nullopt;
}

AccuracyMode accuracy_mode_from_string(const std::string& s) {
    if (s == "exact") return AccuracyMode::Exact;
    if (s == "simulate") return AccuracyMode::Simulate;
    throw ConfigError("unknown accuracy mode: '" + s + "' (expected exact or simulate)");
}

namespace {

std::string move_key(const NlvrMove& m) {
    return std::string(to_string(m.size)) + "|" + to_string(m.shape) + "|" + to_string(m.color) +
           "|" + to_string(m.from);
}

} // namespace

Score score_answer(const TaskInstance& inst, const std::optional<GoldAnswer>& parsed,
                   AccuracyMode mode) {
    if (!parsed) return {0, 0.0, 0.0};
    switch (inst.task) {
        case Task::Brick1D:
        case Task::Brick2D: {
            const auto& gold = std::get<BrickGold>(inst.gold);
            const auto* p = std::get_if<BrickGold>(&*parsed);
            if (!p) return {0, 0.0, 0.0};
            Score s = score_sequence(p->sequence, gold.sequence);
            if (mode == AccuracyMode::Simulate) {
                const auto& scene = std::get<BrickScene>(inst.scene);
                char target = std::get<BrickQuery>(inst.query).target;
                bool ok = !p->sequence.empty() && p->sequence.back() == target &&
                          oracle::simulate_grabs(scene, p->sequence).valid;
                s.accuracy = ok ? 1 : 0;
            }
            return s;
        }
        case Task::Nav: {
            const auto& gold = std::get<NavGold>(inst.gold);
            const auto* p = std::get_if<NavGold>(&*parsed);
            if (!p) return {0, 0.0, 0.0};
            // Exact-path accuracy; set precision/recall over landmarks.
            std::vector<std::string> pk, gk;
            for (char c : p->path) pk.emplace_back(1, c);
            for (char c : gold.path) gk.emplace_back(1, c);
            Score s = score_set(pk, gk);
            s.accuracy = p->path == gold.path ? 1 : 0;
            return s;
        }
        case Task::Nlvr: {
            const auto& gold = std::get<NlvrGold>(inst.gold);
            const auto* p = std::get_if<NlvrGold>(&*parsed);
            if (!p) return {0, 0.0, 0.0};
            std::vector<std::string> pk, gk;
            for (const auto& m : p->moves) pk.push_back(move_key(m));
            for (const auto& m : gold.moves) gk.push_back(move_key(m));
            return score_set(pk, gk);
        }
        case Task::ExternalQA: {
            const auto& gold = std::get<OptionGold>(inst.gold);
            const auto* p = std::get_if<OptionGold>(&*parsed);
            if (!p) return {0, 0.0, 0.0};
            int acc = normalize_option(p->option) == normalize_option(gold.option) ? 1 : 0;
            // Multiple choice: no meaningful set/sequence metrics; keep the
            // accuracy-implies-perfect invariant.
            return {acc, static_cast<double>(acc), static_cast<double>(acc)};
        }
    }
    return {0, 0.0, 0.0};
}

namespace {

struct RunStats {
    int count = 0;
    double acc = 0, prec = 0, rec = 0;
};

std::optional<double> sample_std(const std::vector<double>& xs) {
    if (xs.size() < 2) return std::nullopt;
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= xs.size();
    double ss = 0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / (xs.size() - 1));
}

double mean_of(const std::vector<double>& xs) {
    double m = 0;
    for (double x : xs) m += x;
    return xs.empty() ? 0.0 : m / xs.size();
}

} // namespace

std::vector<MetricRow> aggregate(const std::vector<EvalRecord>& records) {
    struct Group {
        Task task;
        std::optional<ShuffleSetting> setting;
        PromptMode mode;
        std::map<int, RunStats> runs;
        std::set<std::string> instances;
        long long demo_tokens_sum = 0;
        int demo_tokens_n = 0;
        int errors = 0;
    };
    std::map<std::string, Group> groups;
    for (const auto& r : records) {
        auto [it, inserted] = groups.try_emplace(r.condition);
        Group& g = it->second;
        if (inserted) {
            g.task = r.task;
            g.setting = r.setting;
            g.mode = r.mode;
        } else if (g.task != r.task || g.setting != r.setting || g.mode != r.mode) {
            throw AggregationError("condition '" + r.condition +
                                   "' mixes different task/setting/mode records");
        }
        if (r.error) {
            g.errors++;
            continue;
        }
        RunStats& rs = g.runs[r.run_index];
        rs.count++;
        rs.acc += r.accuracy;
        rs.prec += r.precision;
        rs.rec += r.recall;
        g.instances.insert(r.instance_id);
        g.demo_tokens_sum += r.demo_step_tokens;
        g.demo_tokens_n++;
    }

    std::vector<MetricRow> rows;
    for (const auto& [condition, g] : groups) {
        MetricRow row;
        row.condition = condition;
        row.task = g.task;
        row.setting = g.setting;
        row.mode = g.mode;
        row.errors = g.errors;
        row.n = static_cast<int>(g.instances.size());
        row.runs = static_cast<int>(g.runs.size());
        std::vector<double> accs, precs, recs;
        for (const auto& [run, rs] : g.runs) {
            if (rs.count == 0) continue;
            accs.push_back(rs.acc / rs.count);
            precs.push_back(rs.prec / rs.count);
            recs.push_back(rs.rec / rs.count);
        }
        row.accuracy_mean = mean_of(accs);
        row.precision_mean = mean_of(precs);
        row.recall_mean = mean_of(recs);
        row.accuracy_std = sample_std(accs);
        row.precision_std = sample_std(precs);
        row.recall_std = sample_std(recs);
        if (g.mode != PromptMode::ZeroShotCoT && g.demo_tokens_n > 0) {
            row.demo_step_tokens =
                static_cast<int>(std::lround(static_cast<double>(g.demo_tokens_sum) / g.demo_tokens_n));
        }
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(), [](const MetricRow& a, const MetricRow& b) {
        if (a.task != b.task) return a.task < b.task;
        if (a.setting != b.setting) return a.setting < b.setting;
        return a.mode < b.mode;
    });
    return rows;
}

} // namespace evalkit
} // namespace cosbench
