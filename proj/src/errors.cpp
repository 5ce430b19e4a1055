#include "livesub/errors.hpp"

#include <sstream>

namespace livesub {

namespace {

std::string describe_time(std::size_t index, double previous, double current, std::size_t line) {
    std::ostringstream os;
    if (line > 0) os << "line " << line << ": ";
    os << "timestamp decreases at position " << index << " (" << current << " < " << previous << ")";
    return os.str();
}

}  // namespace

NonMonotonicTime::NonMonotonicTime(std::size_t index, double previous, double current, std::size_t line)
    : Error(describe_time(index, previous, current, line)), index_(index), line_(line) {}

EmptySurface::EmptySurface(std::size_t index)
    : Error("empty token surface at position " + std::to_string(index)), index_(index) {}

InvalidSurface::InvalidSurface(std::size_t index, const std::string& surface)
    : Error("token '" + surface + "' at position " + std::to_string(index) + " contains whitespace"),
      index_(index) {}

SchemaError::SchemaError(std::size_t line, std::string field, const std::string& detail)
    : Error("line " + std::to_string(line) + ": field '" + field + "': " + detail),
      line_(line),
      field_(std::move(field)) {}

NonPositiveDuration::NonPositiveDuration(std::size_t line, double duration)
    : Error("line " + std::to_string(line) + ": duration must be positive, got " + std::to_string(duration)),
      line_(line) {}

EmptyLog::EmptyLog(const std::string& segment_id)
    : Error("segment '" + segment_id + "' has no word events") {}

MismatchedSegment::MismatchedSegment(std::size_t schedule_words, std::size_t log_words)
    : Error("schedule covers " + std::to_string(schedule_words) + " words but the log has " +
            std::to_string(log_words)) {}

}  // namespace livesub
