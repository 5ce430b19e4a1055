#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "livesub/core_model.hpp"

namespace livesub {

inline constexpr std::size_t kDefaultMaxRowChars = 84;

enum class DisplayMode { WordForWord, Blocks, ScrollingLines };

inline constexpr DisplayMode kAllModes[] = {DisplayMode::WordForWord, DisplayMode::Blocks,
                                            DisplayMode::ScrollingLines};

/// Short name used on the command line and in reports: word, block, line.
std::string_view mode_name(DisplayMode mode);
std::optional<DisplayMode> parse_mode(std::string_view name);

/// What is on screen over [onset, offset). An unset offset means the state
/// lasts until something else is known about the future.
struct ScreenState {
    std::vector<std::string> rows;  // top to bottom
    double onset = 0.0;
    std::optional<double> offset;
};

struct DisplaySchedule {
    DisplayMode mode = DisplayMode::WordForWord;
    std::vector<ScreenState> states;
    // First time each word is visible, indexed by word occurrence order.
    std::vector<double> word_display_times;
};

/// A row of words for the word-for-word display.
struct WordBlock {
    std::vector<TokenEvent> words;
    std::size_t char_length = 0;  // including single spaces between words
};

/// Greedy left-to-right packing of words into rows of at most max_chars.
/// Break tokens are skipped; a word longer than max_chars gets a row of its own.
std::vector<WordBlock> group_word_blocks(std::span<const TokenEvent> events,
                                         std::size_t max_chars = kDefaultMaxRowChars);

DisplaySchedule schedule_word_mode(std::span<const WordBlock> blocks, std::optional<double> eos_time = {});
DisplaySchedule schedule_block_mode(std::span<const SubtitleBlock> blocks);
DisplaySchedule schedule_line_mode(std::span<const SubtitleLine> lines);

/// Builds the schedule for one mode straight from a log.
DisplaySchedule schedule_for(const EmissionLog& log, DisplayMode mode,
                             std::size_t max_row_chars = kDefaultMaxRowChars);

/// Time at which the segment is considered over: the <eos> emission if there
/// is one, otherwise the last event.
std::optional<double> segment_end(const EmissionLog& log);

/// Closes an open final state at `end_time`, which must lie after its onset.
void close_schedule(DisplaySchedule& schedule, double end_time);

}  // namespace livesub
