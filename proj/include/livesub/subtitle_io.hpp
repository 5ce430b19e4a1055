#pragma once

// Interchange formats.
//
// Emission-log corpus: one JSON object per line,
//   {"id":"s1","duration":4.2,"k":3,"step":0.28,
//    "events":[{"t":0.84,"w":"Hello"},{"t":1.12,"w":"<eob>"}],"g":[0.84,1.12]}
// "step" defaults to 0.28 when absent; "g" (consumed source per event) is
// optional. Break kinds are inferred from the surfaces.
//
// Annotated references: UTF-8 TSV, `id <TAB> duration <TAB> tokens`, tokens
// separated by spaces with inline <eol>/<eob>.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "livesub/core_model.hpp"
#include "livesub/display_sim.hpp"
#include "livesub/evaluation.hpp"
#include "livesub/waitk.hpp"

namespace livesub {

std::vector<EmissionLog> read_log_corpus(std::istream& in);

/// Canonical single-line JSON form of one log, without the trailing newline.
std::string log_record(const EmissionLog& log);
void write_log_corpus(std::ostream& out, std::span<const EmissionLog> logs);

std::vector<AnnotatedReference> read_annotated_refs(std::istream& in);
void write_annotated_refs(std::ostream& out, std::span<const AnnotatedReference> refs);

/// HH:MM:SS,mmm
std::string srt_timestamp(double seconds);

/// SubRip cues for every non-blank screen state. All states must be closed
/// (see close_schedule).
std::string export_srt(const DisplaySchedule& schedule);

/// One row of the results table: mode, rs mean ± std, % within the
/// threshold, delay in ms. e.g. "line  17.6 ± 5.2  79%  4092".
std::string report_row(DisplayMode mode, const std::optional<ReadingSpeedStats>& rs, double delay_ms);

/// Aligned text table for the corpus (and each segment when requested).
std::string report_table(const MetricsReport& report);

/// Machine-readable form of the same numbers.
std::string report_json(const MetricsReport& report);

}  // namespace livesub
