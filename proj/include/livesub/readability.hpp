#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "livesub/core_model.hpp"
#include "livesub/display_sim.hpp"

namespace livesub {

inline constexpr double kDefaultRsThreshold = 21.0;  // cps
inline constexpr std::size_t kDefaultMinCpl = 6;
inline constexpr std::size_t kDefaultMaxCpl = 42;

/// Reading speed of one displayed unit (word-mode row, block or line).
/// cps is +inf when the unit had no display time at all.
struct ReadingSpeedSample {
    std::size_t unit_index = 0;
    double cps = 0.0;
    DisplayMode mode = DisplayMode::WordForWord;

    bool is_infinite() const;
};

struct ReadingSpeedStats {
    std::size_t samples = 0;
    std::size_t infinite_samples = 0;
    double mean = 0.0;     // over finite samples; NaN if there are none
    double std_dev = 0.0;  // population
    double pct_conforming = 0.0;
    double threshold = kDefaultRsThreshold;
};

/// Elapsed display time of every word of a word-mode row, computed with the
/// backward recursion elapsed_i = (t_{i+1} - t_i) + elapsed_{i+1}. The last
/// word gets next_start - t_W, or delay_k when the row is the segment's last.
std::vector<double> word_block_elapsed(const WordBlock& block, std::optional<double> next_start, DelayK delay_k);

/// Max over words of len(suffix text) / elapsed. Empty rows give no sample.
std::optional<ReadingSpeedSample> rs_word_block(const WordBlock& block, std::optional<double> next_start,
                                                DelayK delay_k);

std::vector<ReadingSpeedSample> rs_word_mode(std::span<const WordBlock> blocks, DelayK delay_k);

/// Characters a viewer reads in a block: words joined by spaces, <eol>
/// contributing nothing and the closing <eob> left out.
std::size_t block_text_length(const SubtitleBlock& block);

std::vector<ReadingSpeedSample> rs_blocks(std::span<const SubtitleBlock> blocks, DelayK delay_k);

/// A line stays up until two more lines have been pushed; the last two lines
/// borrow delay_k for the unknown future.
std::vector<ReadingSpeedSample> rs_lines(std::span<const SubtitleLine> lines, DelayK delay_k);

std::vector<ReadingSpeedSample> rs_for(const EmissionLog& log, DisplayMode mode,
                                       std::size_t max_row_chars = kDefaultMaxRowChars);

std::optional<ReadingSpeedStats> rs_stats(std::span<const ReadingSpeedSample> samples,
                                          double threshold = kDefaultRsThreshold);

/// Percentage of subtitle blocks whose every line is within [min_cpl, max_cpl]
/// characters. Blocks with no words are not subtitles and are skipped; blocks
/// that held more than two lines never conform.
std::optional<double> length_conformity(std::span<const SubtitleBlock> blocks, std::size_t min_cpl = kDefaultMinCpl,
                                        std::size_t max_cpl = kDefaultMaxCpl);

/// Counts behind length_conformity, for pooling across segments.
struct ConformityCount {
    std::size_t conforming = 0;
    std::size_t total = 0;
};
ConformityCount count_conforming(std::span<const SubtitleBlock> blocks, std::size_t min_cpl = kDefaultMinCpl,
                                 std::size_t max_cpl = kDefaultMaxCpl);

}  // namespace livesub
