#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "livesub/core_model.hpp"
#include "livesub/display_sim.hpp"
#include "livesub/readability.hpp"

namespace livesub {

struct EvalOptions {
    std::vector<DisplayMode> modes{std::begin(kAllModes), std::end(kAllModes)};
    double rs_threshold = kDefaultRsThreshold;
    std::size_t min_cpl = kDefaultMinCpl;
    std::size_t max_cpl = kDefaultMaxCpl;
    std::size_t max_row_chars = kDefaultMaxRowChars;
    bool per_segment = false;
};

struct ModeMetrics {
    DisplayMode mode = DisplayMode::WordForWord;
    std::optional<ReadingSpeedStats> rs;
    double delay_ms = 0.0;
};

struct SegmentMetrics {
    std::string segment_id;
    std::size_t words = 0;
    double average_lagging_ms = 0.0;
    bool lagging_approximated = false;
    std::vector<ModeMetrics> modes;
    std::optional<double> length_conformity;
};

struct CorpusMetrics {
    std::size_t segments = 0;
    std::size_t scored_segments = 0;  // segments with at least one word
    double average_lagging_ms = 0.0;
    bool lagging_approximated = false;
    std::vector<ModeMetrics> modes;
    std::optional<double> length_conformity;
};

struct MetricsReport {
    EvalOptions options;
    CorpusMetrics corpus;
    std::vector<SegmentMetrics> segments;  // filled when options.per_segment

    bool empty() const { return corpus.scored_segments == 0; }
};

/// Per-segment metrics for every log plus corpus aggregates: rs samples are
/// pooled across segments, AL and delays are averaged over segments, length
/// conformity is pooled over subtitles.
MetricsReport evaluate_corpus(std::span<const EmissionLog> logs, const EvalOptions& options = {});

}  // namespace livesub
