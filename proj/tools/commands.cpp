#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "livesub/errors.hpp"
#include "livesub/evaluation.hpp"
#include "livesub/latency.hpp"
#include "livesub/readability.hpp"
#include "livesub/subtitle_io.hpp"
#include "livesub/waitk.hpp"

namespace fs = std::filesystem;

namespace livesub::cli {

namespace {

struct IoFailure {
    std::string message;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure{"cannot open '" + path + "' for reading"};
    return in;
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoFailure{"cannot open '" + path.string() + "' for writing"};
    f << content;
    if (!f) throw IoFailure{"failed writing '" + path.string() + "'"};
}

// Explicit --out wins; otherwise a file named `default_name` in the
// environment's output directory; otherwise nothing (stdout).
std::optional<fs::path> output_path(const RunConfig& cfg, const std::string& default_name) {
    if (!cfg.out.empty()) return fs::path(cfg.out);
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) return fs::path(dir) / default_name;
    return std::nullopt;
}

fs::path output_dir(const RunConfig& cfg) {
    if (!cfg.out.empty()) return cfg.out;
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) return dir;
    return ".";
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

std::vector<EmissionLog> load_logs(const std::string& path) {
    auto in = open_input(path);
    return read_log_corpus(in);
}

std::optional<std::vector<DisplayMode>> modes_from(const std::string& name) {
    if (name == "all") return std::vector<DisplayMode>(std::begin(kAllModes), std::end(kAllModes));
    if (auto mode = parse_mode(name)) return std::vector<DisplayMode>{*mode};
    return std::nullopt;
}

std::string safe_file_name(const std::string& id) {
    std::string out;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                        c == '_' || c == '.';
        out += ok ? c : '_';
    }
    if (out.empty() || out == "." || out == "..") out = "segment";
    return out;
}

std::string seconds_label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%8.3fs", t);
    return buf;
}

// Runs a command body, turning library exceptions into exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const IoFailure& e) {
        err << "error: " << e.message << '\n';
        return kIo;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return kSchema;
    } catch (const NonPositiveDuration& e) {
        err << "schema error: " << e.what() << '\n';
        return kSchema;
    } catch (const NonMonotonicTime& e) {
        err << "schema error: " << e.what() << '\n';
        return kSchema;
    } catch (const InvalidLog& e) {
        err << "schema error: " << e.what() << '\n';
        return kSchema;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        WaitKConfig wk;
        wk.k = cfg.k;
        wk.step_size = cfg.step_ms / 1000.0;
        wk.compute_latency = cfg.latency_ms / 1000.0;
        wk.flush_at_end = cfg.flush;
        validate(wk);

        auto in = open_input(cfg.input);
        const auto refs = read_annotated_refs(in);
        std::vector<EmissionLog> logs;
        logs.reserve(refs.size());
        for (const auto& ref : refs) logs.push_back(simulate_waitk(ref, wk));

        std::ostringstream corpus;
        write_log_corpus(corpus, logs);
        if (auto path = output_path(cfg, stem_of(cfg.input) + ".wait" + std::to_string(cfg.k) + ".jsonl")) {
            write_file(*path, corpus.str());
            err << "wrote " << logs.size() << " logs to " << path->string() << '\n';
        } else {
            out << corpus.str();
        }
        return int{kOk};
    });
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto modes = modes_from(cfg.mode);
        if (!modes) {
            err << "error: unknown mode '" << cfg.mode << "' (word, block, line, all)\n";
            return int{kUsage};
        }
        const auto logs = load_logs(cfg.input);
        EvalOptions options;
        options.modes = *modes;
        options.rs_threshold = cfg.rs_threshold;
        options.min_cpl = cfg.cpl_min;
        options.max_cpl = cfg.cpl_max;
        options.max_row_chars = cfg.max_row_chars;
        options.per_segment = cfg.per_segment;
        const auto report = evaluate_corpus(logs, options);

        out << report_table(report);
        if (auto path = output_path(cfg, stem_of(cfg.input) + ".report.json")) write_file(*path, report_json(report));
        if (report.empty()) {
            err << "error: corpus '" << cfg.input << "' has no segment with words\n";
            return int{kEmptyInput};
        }
        return int{kOk};
    });
}

int cmd_replay(const RunConfig& cfg, std::ostream& out, std::ostream& err, const Sleeper& sleep) {
    return guarded(err, [&] {
        const auto mode = parse_mode(cfg.mode == "all" ? "line" : cfg.mode);
        if (!mode) {
            err << "error: unknown mode '" << cfg.mode << "' (word, block, line)\n";
            return int{kUsage};
        }
        const auto logs = load_logs(cfg.input);
        const EmissionLog* log = nullptr;
        if (cfg.segment.empty() && logs.size() == 1) log = &logs.front();
        for (const auto& l : logs) {
            if (!cfg.segment.empty() && l.segment_id == cfg.segment) {
                log = &l;
                break;
            }
        }
        if (!log) {
            err << "error: " << (cfg.segment.empty() ? "corpus has several segments, pick one with --segment"
                                                      : "unknown segment '" + cfg.segment + "'")
                << '\n';
            return int{kNotFound};
        }

        auto schedule = schedule_for(*log, *mode, cfg.max_row_chars);
        if (auto end = segment_end(*log); end && !schedule.states.empty()) {
            close_schedule(schedule, *end + DelayK::of(*log).seconds());
        }

        out << "segment " << log->segment_id << "  mode " << mode_name(*mode) << '\n';
        double clock = 0.0;
        auto advance_to = [&](double t) {
            if (cfg.speed > 0.0 && sleep && t > clock) sleep((t - clock) / cfg.speed);
            clock = std::max(clock, t);
        };
        for (const auto& state : schedule.states) {
            advance_to(state.onset);
            out << '[' << seconds_label(state.onset) << "]\n";
            for (const auto& row : state.rows) out << "  | " << row << '\n';
            out.flush();
        }
        if (!schedule.states.empty()) {
            advance_to(*schedule.states.back().offset);
            out << '[' << seconds_label(*schedule.states.back().offset) << "]\n  (clear)\n";
        }

        const auto samples = rs_for(*log, *mode, cfg.max_row_chars);
        const auto stats = rs_stats(samples, cfg.rs_threshold);
        if (log->word_count() == 0) {
            out << "summary: no words\n";
        } else {
            const double al = average_lagging(*log).milliseconds;
            const double delay = display_delay(schedule, *log, al);
            out << "summary: " << report_row(*mode, stats, delay) << "  (AL " << static_cast<long long>(std::llround(al))
                << " ms)\n";
        }
        return int{kOk};
    });
}

int cmd_export_srt(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto logs = load_logs(cfg.input);
        const fs::path dir = output_dir(cfg);
        std::map<std::string, int> used;
        for (const auto& log : logs) {
            auto schedule = schedule_for(log, DisplayMode::Blocks, cfg.max_row_chars);
            if (auto end = segment_end(log); end && !schedule.states.empty()) {
                close_schedule(schedule, *end + DelayK::of(log).seconds());
            }
            std::string name = safe_file_name(log.segment_id);
            if (int n = used[name]++; n > 0) name += "-" + std::to_string(n);
            const fs::path path = dir / (name + ".srt");
            const std::string srt = export_srt(schedule);
            if (srt.empty()) err << "warning: segment '" << log.segment_id << "' has no subtitles\n";
            write_file(path, srt);
            out << path.string() << '\n';
        }
        return int{kOk};
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Live-subtitle display simulation and readability/latency metrics"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "Input file")->required();
        sub->add_option("--out", cfg.out, "Output file or directory (default: $" + std::string(kOutDirEnv) + ")");
        sub->add_option("--max-row-chars", cfg.max_row_chars, "Row width for word-for-word display")
            ->capture_default_str();
    };

    auto* simulate = app.add_subcommand("simulate", "Generate wait-k emission logs from annotated references");
    add_common(simulate);
    simulate->add_option("--k", cfg.k, "Wait-k lag in steps")->capture_default_str()->check(CLI::PositiveNumber);
    simulate->add_option("--step-ms", cfg.step_ms, "Audio per READ step")->capture_default_str()->check(CLI::PositiveNumber);
    simulate->add_option("--latency-ms", cfg.latency_ms, "Generation cost per token")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    simulate->add_flag("!--no-flush", cfg.flush, "Keep the policy's pace after the audio ends");

    auto* evaluate = app.add_subcommand("evaluate", "Reading speed, delay, AL and length conformity");
    add_common(evaluate);
    evaluate->add_option("--mode", cfg.mode, "word, block, line or all")->capture_default_str();
    evaluate->add_option("--rs-threshold", cfg.rs_threshold, "Conforming reading speed (cps)")->capture_default_str();
    evaluate->add_option("--cpl-min", cfg.cpl_min, "Minimum characters per line")->capture_default_str();
    evaluate->add_option("--cpl-max", cfg.cpl_max, "Maximum characters per line")->capture_default_str();
    evaluate->add_flag("--per-segment", cfg.per_segment, "Include a breakdown per segment");

    auto* replay = app.add_subcommand("replay", "Print the screen states of one segment over time");
    add_common(replay);
    replay->add_option("--mode", cfg.mode, "word, block or line (default line)");
    replay->add_option("--segment", cfg.segment, "Segment id");
    replay->add_option("--speed", cfg.speed, "Playback speed factor, 0 prints everything at once")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    replay->add_option("--rs-threshold", cfg.rs_threshold, "Conforming reading speed (cps)")->capture_default_str();

    auto* srt = app.add_subcommand("export-srt", "Write one block-mode SRT file per segment");
    add_common(srt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? int{kOk} : int{kUsage};
    }
    if (cfg.cpl_min > cfg.cpl_max) {
        err << "error: --cpl-min exceeds --cpl-max\n";
        return kUsage;
    }
    if (cfg.max_row_chars == 0) {
        err << "error: --max-row-chars must be positive\n";
        return kUsage;
    }

    if (simulate->parsed()) return cmd_simulate(cfg, out, err);
    if (evaluate->parsed()) return cmd_evaluate(cfg, out, err);
    if (replay->parsed()) {
        return cmd_replay(cfg, out, err, [](double s) {
            std::this_thread::sleep_for(std::chrono::duration<double>(s));
        });
    }
    return cmd_export_srt(cfg, out, err);
}

}  // namespace livesub::cli
