#include "cosbench/json_io.hpp"
#include "cosbench/runner.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace cosbench {
namespace runner {

namespace {

std::string pct(double mean, const std::optional<double>& std) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(1) << mean * 100.0;
    if (std) ss << "±" << std::fixed << std::setprecision(1) << *std * 100.0;
    return ss.str();
}

std::string mode_label(PromptMode m) {
    switch (m) {
        case PromptMode::ZeroShotCoT: return "zs-CoT";
        case PromptMode::FewShotCoT: return "CoT";
        case PromptMode::FewShotCoS: return "CoS";
    }
    return "?";
}

std::string task_title(Task t) {
    switch (t) {
        case Task::Brick1D: return "Brick World 1D";
        case Task::Brick2D: return "Brick World 2D";
        case Task::Nlvr: return "NLVR-based Manipulation";
        case Task::Nav: return "Natural Language Navigation";
        case Task::ExternalQA: return "Spatial QA";
    }
    return "?";
}

std::string setting_title(ShuffleSetting s) {
    switch (s) {
        case ShuffleSetting::NoShuffle: return "No Shuffle";
        case ShuffleSetting::ShuffleDescription: return "Shuffle Description";
        case ShuffleSetting::ShuffleLabel: return "Shuffle Label";
        case ShuffleSetting::ShuffleBoth: return "Shuffle Both";
    }
    return "?";
}

void pad(std::ostringstream& ss, const std::string& cell, size_t width) {
    ss << cell;
    for (size_t i = cell.size(); i < width; ++i) ss << ' ';
}

// Display width of the ± glyph is 1 but it occupies 2 bytes in UTF-8; pad on
// display width so columns stay aligned.
size_t display_width(const std::string& s) {
    size_t extra = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (static_cast<unsigned char>(s[i]) == 0xc2 && static_cast<unsigned char>(s[i + 1]) == 0xb1) {
            extra++;
        }
    }
    return s.size() - extra;
}

void pad_display(std::ostringstream& ss, const std::string& cell, size_t width) {
    ss << cell;
    for (size_t i = display_width(cell); i < width; ++i) ss << ' ';
}

std::string tok_cell(const MetricRow& row) {
    if (row.mode == PromptMode::ZeroShotCoT || !row.demo_step_tokens) return "-";
    return std::to_string(*row.demo_step_tokens);
}

constexpr size_t kCell = 11;

// Wide layout: shuffle settings side by side, one row per prompting mode.
std::string render_brick_table(Task task, const std::vector<MetricRow>& rows) {
    std::map<PromptMode, std::map<ShuffleSetting, const MetricRow*>> grid;
    std::set<PromptMode> modes;
    for (const auto& r : rows) {
        if (r.task != task || !r.setting) continue;
        grid[r.mode][*r.setting] = &r;
        modes.insert(r.mode);
    }
    if (modes.empty()) return "";

    const std::vector<ShuffleSetting> settings = {
        ShuffleSetting::NoShuffle, ShuffleSetting::ShuffleDescription,
        ShuffleSetting::ShuffleLabel, ShuffleSetting::ShuffleBoth};

    std::ostringstream ss;
    ss << task_title(task) << " (" << to_string(task) << ")\n";
    std::ostringstream header1, header2;
    pad(header1, "", 8);
    pad(header2, "Mode", 8);
    for (auto s : settings) {
        pad(header1, setting_title(s), kCell * 3);
        pad(header2, "Acc.", kCell);
        pad(header2, "Pre.", kCell);
        pad(header2, "Rec.", kCell);
    }
    header1 << "";
    header2 << "Tok.";
    ss << header1.str() << "\n" << header2.str() << "\n";
    for (auto m : {PromptMode::ZeroShotCoT, PromptMode::FewShotCoT, PromptMode::FewShotCoS}) {
        if (!modes.count(m)) continue;
        std::ostringstream line;
        pad(line, mode_label(m), 8);
        std::string tok = "-";
        for (auto s : settings) {
            auto it = grid[m].find(s);
            if (it == grid[m].end()) {
                pad_display(line, "-", kCell);
                pad_display(line, "-", kCell);
                pad_display(line, "-", kCell);
                continue;
            }
            const MetricRow& r = *it->second;
            pad_display(line, pct(r.accuracy_mean, r.accuracy_std), kCell);
            pad_display(line, pct(r.precision_mean, r.precision_std), kCell);
            pad_display(line, pct(r.recall_mean, r.recall_std), kCell);
            if (tok_cell(r) != "-") tok = tok_cell(r);
        }
        line << tok;
        ss << line.str() << "\n";
    }
    ss << "\n";
    return ss.str();
}

std::string render_plain_table(Task task, const std::vector<MetricRow>& rows) {
    std::vector<const MetricRow*> mine;
    for (const auto& r : rows) {
        if (r.task == task) mine.push_back(&r);
    }
    if (mine.empty()) return "";
    const bool accuracy_only = task == Task::ExternalQA;

    std::ostringstream ss;
    ss << task_title(task) << " (" << to_string(task) << ")\n";
    std::ostringstream header;
    pad(header, "Mode", 8);
    pad(header, "Acc.", kCell);
    if (!accuracy_only) {
        pad(header, "Pre.", kCell);
        pad(header, "Rec.", kCell);
    }
    header << "Tok.";
    ss << header.str() << "\n";
    for (const auto* r : mine) {
        std::ostringstream line;
        pad(line, mode_label(r->mode), 8);
        pad_display(line, pct(r->accuracy_mean, r->accuracy_std), kCell);
        if (!accuracy_only) {
            pad_display(line, pct(r->precision_mean, r->precision_std), kCell);
            pad_display(line, pct(r->recall_mean, r->recall_std), kCell);
        }
        line << tok_cell(*r);
        ss << line.str() << "\n";
    }
    ss << "\n";
    return ss.str();
}

} // namespace

Report make_report(const std::vector<EvalRecord>& records) {
    Report report;
    if (records.empty()) {
        report.text = "No evaluation records: empty report.\n";
        report.machine = {{"schema_version", 1}, {"rows", json::array()}};
        return report;
    }
    report.rows = evalkit::aggregate(records);

    std::ostringstream text;
    for (Task t : {Task::Brick1D, Task::Brick2D}) {
        text << render_brick_table(t, report.rows);
    }
    for (Task t : {Task::Nlvr, Task::Nav, Task::ExternalQA}) {
        text << render_plain_table(t, report.rows);
    }
    // Per-condition counts and error summary.
    text << "Conditions\n";
    for (const auto& r : report.rows) {
        text << "  " << r.condition << ": n=" << r.n << " runs=" << r.runs;
        if (r.errors > 0) text << " errors=" << r.errors;
        text << "\n";
    }
    report.text = text.str();

    json rows = json::array();
    for (const auto& r : report.rows) rows.push_back(to_json(r));
    report.machine = {{"schema_version", 1}, {"rows", rows}};
    return report;
}

} // namespace runner
} // namespace cosbench
