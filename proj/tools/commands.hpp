#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

namespace livesub::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,        // bad flags or arguments
    kSchema = 3,       // malformed input file
    kIo = 4,           // cannot read or write a file
    kNotFound = 5,     // unknown segment id
    kEmptyInput = 6,   // nothing to evaluate
};

/// Names the environment variable holding the default output directory.
inline constexpr const char* kOutDirEnv = "LIVESUB_OUT_DIR";

struct RunConfig {
    std::string input;
    std::string mode = "all";  // word | block | line | all
    int k = 3;
    double step_ms = 280.0;
    double latency_ms = 0.0;
    bool flush = true;
    double rs_threshold = 21.0;
    std::size_t cpl_min = 6;
    std::size_t cpl_max = 42;
    std::size_t max_row_chars = 84;
    double speed = 1.0;  // replay; 0 dumps every frame at once
    std::string out;
    std::string segment;
    bool per_segment = false;
};

using Sleeper = std::function<void(double seconds)>;

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_replay(const RunConfig& cfg, std::ostream& out, std::ostream& err, const Sleeper& sleep = {});
int cmd_export_srt(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to one of the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace livesub::cli
