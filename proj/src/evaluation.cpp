#include "livesub/evaluation.hpp"

#include <map>

#include "livesub/latency.hpp"

namespace livesub {

MetricsReport evaluate_corpus(std::span<const EmissionLog> logs, const EvalOptions& options) {
    MetricsReport report;
    report.options = options;
    report.corpus.segments = logs.size();

    std::map<DisplayMode, std::vector<ReadingSpeedSample>> pooled;
    std::map<DisplayMode, double> delay_sum;
    double al_sum = 0.0;
    ConformityCount conformity;

    for (const auto& log : logs) {
        SegmentMetrics seg;
        seg.segment_id = log.segment_id;
        seg.words = log.word_count();

        const auto blocks = extract_blocks(log.events);
        const auto counted = count_conforming(blocks, options.min_cpl, options.max_cpl);
        conformity.conforming += counted.conforming;
        conformity.total += counted.total;
        if (counted.total > 0) {
            seg.length_conformity = 100.0 * static_cast<double>(counted.conforming) / static_cast<double>(counted.total);
        }

        if (seg.words > 0) {
            const auto al = average_lagging(log);
            seg.average_lagging_ms = al.milliseconds;
            seg.lagging_approximated = al.approximated;
            report.corpus.lagging_approximated = report.corpus.lagging_approximated || al.approximated;
            al_sum += al.milliseconds;
            ++report.corpus.scored_segments;
        }

        for (auto mode : options.modes) {
            ModeMetrics mm;
            mm.mode = mode;
            auto samples = rs_for(log, mode, options.max_row_chars);
            mm.rs = rs_stats(samples, options.rs_threshold);
            auto& pool = pooled[mode];
            pool.insert(pool.end(), samples.begin(), samples.end());
            if (seg.words > 0) {
                mm.delay_ms = display_delay(schedule_for(log, mode, options.max_row_chars), log, seg.average_lagging_ms);
                delay_sum[mode] += mm.delay_ms;
            }
            seg.modes.push_back(mm);
        }
        if (options.per_segment) report.segments.push_back(std::move(seg));
    }

    const double scored = static_cast<double>(report.corpus.scored_segments);
    if (report.corpus.scored_segments > 0) report.corpus.average_lagging_ms = al_sum / scored;
    for (auto mode : options.modes) {
        ModeMetrics mm;
        mm.mode = mode;
        mm.rs = rs_stats(pooled[mode], options.rs_threshold);
        if (report.corpus.scored_segments > 0) mm.delay_ms = delay_sum[mode] / scored;
        report.corpus.modes.push_back(mm);
    }
    if (conformity.total > 0) {
        report.corpus.length_conformity =
            100.0 * static_cast<double>(conformity.conforming) / static_cast<double>(conformity.total);
    }
    return report;
}

}  // namespace livesub
