#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "livesub/core_model.hpp"
#include "livesub/display_sim.hpp"

namespace livesub {

struct LaggingResult {
    double milliseconds = 0.0;
    std::size_t tau = 0;          // number of terms averaged
    bool cutoff_reached = false;  // false: no word consumed the whole source, tau = |Y|
    bool approximated = false;    // consumed source taken from emit times
};

/// Source seconds consumed before each word event was written. Falls back to
/// min(emit_time, duration) when the log carries no record of it.
std::vector<double> consumed_source(const EmissionLog& log);

/// Average Lagging over the word events of one segment, in milliseconds:
/// (1/tau) * sum_{i<=tau} [g(i) - (i-1) * D / |Y|].
LaggingResult average_lagging(const EmissionLog& log);

/// AL plus the mean time each word waits between emission and display, in ms.
double display_delay(const DisplaySchedule& schedule, const EmissionLog& log, double al_ms);

struct LatencyReport {
    double average_lagging = 0.0;  // ms
    std::map<DisplayMode, double> delay_by_mode;
};

LatencyReport latency_report(const EmissionLog& log, std::size_t max_row_chars = kDefaultMaxRowChars);

}  // namespace livesub
