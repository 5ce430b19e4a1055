#include "livesub/latency.hpp"

#include <algorithm>

#include "livesub/errors.hpp"

namespace livesub {

std::vector<double> consumed_source(const EmissionLog& log) {
    std::vector<double> g;
    g.reserve(log.events.size());
    for (std::size_t i = 0; i < log.events.size(); ++i) {
        if (!log.events[i].is_word()) continue;
        g.push_back(log.consumed ? (*log.consumed)[i] : std::min(log.events[i].emit_time, log.source_duration));
    }
    return g;
}

LaggingResult average_lagging(const EmissionLog& log) {
    const auto g = consumed_source(log);
    if (g.empty()) throw EmptyLog(log.segment_id);

    LaggingResult result;
    result.approximated = !log.consumed.has_value();
    const double duration = log.source_duration;
    const double rate = duration / static_cast<double>(g.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        sum += g[i] - static_cast<double>(i) * rate;
        if (g[i] >= duration) {
            result.tau = i + 1;
            result.cutoff_reached = true;
            break;
        }
    }
    if (!result.cutoff_reached) result.tau = g.size();
    result.milliseconds = 1000.0 * sum / static_cast<double>(result.tau);
    return result;
}

double display_delay(const DisplaySchedule& schedule, const EmissionLog& log, double al_ms) {
    const auto& shown = schedule.word_display_times;
    if (shown.size() != log.word_count()) throw MismatchedSegment(shown.size(), log.word_count());
    if (shown.empty()) return al_ms;
    double lag = 0.0;
    std::size_t w = 0;
    for (const auto& e : log.events) {
        if (!e.is_word()) continue;
        lag += shown[w++] - e.emit_time;
    }
    return al_ms + 1000.0 * lag / static_cast<double>(shown.size());
}

LatencyReport latency_report(const EmissionLog& log, std::size_t max_row_chars) {
    LatencyReport report;
    report.average_lagging = average_lagging(log).milliseconds;
    for (auto mode : kAllModes) {
        report.delay_by_mode[mode] = display_delay(schedule_for(log, mode, max_row_chars), log, report.average_lagging);
    }
    return report;
}

}  // namespace livesub
