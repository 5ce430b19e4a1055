#include "livesub/display_sim.hpp"

#include <utility>

#include "livesub/errors.hpp"

namespace livesub {

std::string_view mode_name(DisplayMode mode) {
    switch (mode) {
        case DisplayMode::WordForWord:
            return "word";
        case DisplayMode::Blocks:
            return "block";
        case DisplayMode::ScrollingLines:
            return "line";
    }
    return "?";
}

std::optional<DisplayMode> parse_mode(std::string_view name) {
    for (auto mode : kAllModes) {
        if (mode_name(mode) == name) return mode;
    }
    return std::nullopt;
}

std::vector<WordBlock> group_word_blocks(std::span<const TokenEvent> events, std::size_t max_chars) {
    std::vector<WordBlock> blocks;
    WordBlock current;
    for (const auto& e : events) {
        if (e.kind == TokenKind::EndOfSegment) break;
        if (!e.is_word()) continue;
        const std::size_t len = char_count(e.surface);
        if (!current.words.empty() && current.char_length + 1 + len > max_chars) {
            blocks.push_back(std::move(current));
            current = WordBlock{};
        }
        current.char_length += current.words.empty() ? len : len + 1;
        current.words.push_back(e);
    }
    if (!current.words.empty()) blocks.push_back(std::move(current));
    return blocks;
}

namespace {

// Appends a state starting at `onset`, closing the previous one. States that
// would last zero time are replaced by their successor.
void push_state(std::vector<ScreenState>& states, std::vector<std::string> rows, double onset) {
    if (!states.empty()) {
        auto& prev = states.back();
        if (prev.onset == onset) {
            prev.rows = std::move(rows);
            return;
        }
        prev.offset = onset;
    }
    states.push_back(ScreenState{std::move(rows), onset, std::nullopt});
}

void close_last(std::vector<ScreenState>& states, std::optional<double> end_time) {
    if (!states.empty() && end_time && *end_time > states.back().onset) states.back().offset = *end_time;
}

}  // namespace

DisplaySchedule schedule_word_mode(std::span<const WordBlock> blocks, std::optional<double> eos_time) {
    DisplaySchedule schedule;
    schedule.mode = DisplayMode::WordForWord;
    for (const auto& block : blocks) {
        std::string row;
        for (const auto& w : block.words) {
            if (!row.empty()) row += ' ';
            row += w.surface;
            push_state(schedule.states, {row}, w.emit_time);
            schedule.word_display_times.push_back(w.emit_time);
        }
    }
    close_last(schedule.states, eos_time);
    return schedule;
}

DisplaySchedule schedule_block_mode(std::span<const SubtitleBlock> blocks) {
    DisplaySchedule schedule;
    schedule.mode = DisplayMode::Blocks;
    for (const auto& block : blocks) {
        std::vector<std::string> rows;
        for (const auto& line : block.lines) {
            rows.push_back(line.text());
            for (std::size_t i = 0; i < line.words.size(); ++i) schedule.word_display_times.push_back(block.block_time);
        }
        push_state(schedule.states, std::move(rows), block.block_time);
    }
    return schedule;
}

DisplaySchedule schedule_line_mode(std::span<const SubtitleLine> lines) {
    DisplaySchedule schedule;
    schedule.mode = DisplayMode::ScrollingLines;
    std::string upper;
    for (std::size_t l = 0; l < lines.size(); ++l) {
        std::string lower = lines[l].text();
        std::vector<std::string> rows;
        if (l > 0) rows.push_back(upper);
        rows.push_back(lower);
        push_state(schedule.states, std::move(rows), lines[l].break_time);
        for (std::size_t i = 0; i < lines[l].words.size(); ++i) schedule.word_display_times.push_back(lines[l].break_time);
        upper = std::move(lower);
    }
    return schedule;
}

DisplaySchedule schedule_for(const EmissionLog& log, DisplayMode mode, std::size_t max_row_chars) {
    switch (mode) {
        case DisplayMode::WordForWord:
            return schedule_word_mode(group_word_blocks(log.events, max_row_chars));
        case DisplayMode::Blocks:
            return schedule_block_mode(extract_blocks(log.events));
        case DisplayMode::ScrollingLines:
            return schedule_line_mode(extract_lines(log.events));
    }
    return {};
}

std::optional<double> segment_end(const EmissionLog& log) {
    if (log.events.empty()) return std::nullopt;
    return log.events.back().emit_time;
}

void close_schedule(DisplaySchedule& schedule, double end_time) {
    if (schedule.states.empty() || schedule.states.back().offset) return;
    if (!(end_time > schedule.states.back().onset)) {
        throw Error("cannot close the final screen state before it starts");
    }
    schedule.states.back().offset = end_time;
}

}  // namespace livesub
