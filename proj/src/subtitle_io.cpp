#include "livesub/subtitle_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "livesub/errors.hpp"

namespace livesub {

using ordered_json = nlohmann::ordered_json;

namespace {

bool has_whitespace(std::string_view s) { return s.find_first_of(" \t\r\n\v\f") != std::string_view::npos; }

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool blank(std::string_view line) { return line.find_first_not_of(" \t") == std::string_view::npos; }

const nlohmann::json& require(const nlohmann::json& obj, const char* key, std::size_t line) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(line, key, "missing");
    return *it;
}

double require_number(const nlohmann::json& obj, const char* key, std::size_t line) {
    const auto& v = require(obj, key, line);
    if (!v.is_number()) throw SchemaError(line, key, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(line, key, "expected a finite number");
    return d;
}

EmissionLog parse_log_line(const std::string& text, std::size_t line) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(line, "<record>", e.what());
    }
    if (!obj.is_object()) throw SchemaError(line, "<record>", "expected a JSON object");

    EmissionLog log;
    const auto& id = require(obj, "id", line);
    if (!id.is_string()) throw SchemaError(line, "id", "expected a string");
    log.segment_id = id.get<std::string>();

    log.source_duration = require_number(obj, "duration", line);
    if (!(log.source_duration > 0.0)) throw SchemaError(line, "duration", "must be positive");

    const auto& k = require(obj, "k", line);
    if (!k.is_number_integer() || k.get<long long>() < 1) throw SchemaError(line, "k", "expected an integer >= 1");
    log.wait_k = static_cast<int>(k.get<long long>());

    if (obj.contains("step")) {
        log.step_size = require_number(obj, "step", line);
        if (!(log.step_size > 0.0)) throw SchemaError(line, "step", "must be positive");
    }

    const auto& events = require(obj, "events", line);
    if (!events.is_array()) throw SchemaError(line, "events", "expected an array");
    log.events.reserve(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& ev = events[i];
        const std::string where = "events[" + std::to_string(i) + "]";
        if (!ev.is_object()) throw SchemaError(line, where, "expected an object");
        auto t = ev.find("t");
        if (t == ev.end() || !t->is_number()) throw SchemaError(line, where + ".t", "expected a number");
        auto w = ev.find("w");
        if (w == ev.end() || !w->is_string()) throw SchemaError(line, where + ".w", "expected a string");
        std::string surface = w->get<std::string>();
        if (surface.empty() || has_whitespace(surface)) {
            throw SchemaError(line, where + ".w", "surface must be non-empty and free of whitespace");
        }
        const double time = t->get<double>();
        if (!(time >= 0.0) || !std::isfinite(time)) throw SchemaError(line, where + ".t", "must be >= 0");
        if (i > 0 && time < log.events.back().emit_time) {
            throw NonMonotonicTime(i, log.events.back().emit_time, time, line);
        }
        const TokenKind kind = classify_surface(surface);
        if (kind == TokenKind::EndOfSegment && i + 1 != events.size()) {
            throw SchemaError(line, where + ".w", "<eos> must be the last event");
        }
        log.events.push_back(TokenEvent{std::move(surface), kind, time});
    }

    if (obj.contains("g")) {
        const auto& g = obj["g"];
        if (!g.is_array() || g.size() != log.events.size()) {
            throw SchemaError(line, "g", "expected an array with one entry per event");
        }
        std::vector<double> consumed;
        consumed.reserve(g.size());
        for (const auto& v : g) {
            if (!v.is_number() || !(v.get<double>() >= 0.0)) throw SchemaError(line, "g", "expected numbers >= 0");
            consumed.push_back(v.get<double>());
        }
        log.consumed = std::move(consumed);
    }
    return log;
}

}  // namespace

std::vector<EmissionLog> read_log_corpus(std::istream& in) {
    std::vector<EmissionLog> logs;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        strip_cr(text);
        if (blank(text)) continue;
        logs.push_back(parse_log_line(text, line));
    }
    return logs;
}

std::string log_record(const EmissionLog& log) {
    ordered_json obj;
    obj["id"] = log.segment_id;
    obj["duration"] = log.source_duration;
    obj["k"] = log.wait_k;
    obj["step"] = log.step_size;
    auto events = ordered_json::array();
    for (const auto& e : log.events) {
        ordered_json ev;
        ev["t"] = e.emit_time;
        ev["w"] = e.surface;
        events.push_back(std::move(ev));
    }
    obj["events"] = std::move(events);
    if (log.consumed) obj["g"] = *log.consumed;
    return obj.dump();
}

void write_log_corpus(std::ostream& out, std::span<const EmissionLog> logs) {
    for (const auto& log : logs) out << log_record(log) << '\n';
}

std::vector<AnnotatedReference> read_annotated_refs(std::istream& in) {
    std::vector<AnnotatedReference> refs;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        strip_cr(text);
        if (blank(text)) continue;
        const auto tab1 = text.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos : text.find('\t', tab1 + 1);
        if (tab2 == std::string::npos) throw SchemaError(line, "<record>", "expected id, duration and tokens separated by tabs");

        AnnotatedReference ref;
        ref.segment_id = text.substr(0, tab1);
        if (ref.segment_id.empty()) throw SchemaError(line, "id", "empty");

        const std::string_view dur(text.data() + tab1 + 1, tab2 - tab1 - 1);
        const auto [ptr, ec] = std::from_chars(dur.data(), dur.data() + dur.size(), ref.duration);
        if (ec != std::errc{} || ptr != dur.data() + dur.size() || !std::isfinite(ref.duration)) {
            throw SchemaError(line, "duration", "not a number: '" + std::string(dur) + "'");
        }
        if (!(ref.duration > 0.0)) throw NonPositiveDuration(line, ref.duration);

        std::istringstream tokens(text.substr(tab2 + 1));
        for (std::string tok; tokens >> tok;) {
            if (classify_surface(tok) == TokenKind::EndOfSegment) {
                throw SchemaError(line, "tokens", "<eos> is implied by the end of the line");
            }
            ref.tokens.push_back(std::move(tok));
        }
        if (ref.tokens.empty()) throw SchemaError(line, "tokens", "no tokens");
        refs.push_back(std::move(ref));
    }
    return refs;
}

void write_annotated_refs(std::ostream& out, std::span<const AnnotatedReference> refs) {
    for (const auto& ref : refs) {
        out << ref.segment_id << '\t' << ordered_json(ref.duration).dump() << '\t';
        for (std::size_t i = 0; i < ref.tokens.size(); ++i) out << (i ? " " : "") << ref.tokens[i];
        out << '\n';
    }
}

std::string srt_timestamp(double seconds) {
    long long ms = std::llround(seconds * 1000.0);
    if (ms < 0) ms = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld,%03lld", ms / 3600000, (ms / 60000) % 60, (ms / 1000) % 60,
                  ms % 1000);
    return buf;
}

std::string export_srt(const DisplaySchedule& schedule) {
    std::string out;
    std::size_t cue = 0;
    long long previous_end = -1;
    for (const auto& state : schedule.states) {
        if (!state.offset) throw Error("export_srt: schedule has an open-ended state; close it first");
        std::vector<const std::string*> rows;
        for (const auto& row : state.rows) {
            if (!blank(row)) rows.push_back(&row);
        }
        if (rows.empty()) continue;
        const long long start = std::llround(state.onset * 1000.0);
        const long long end = std::llround(*state.offset * 1000.0);
        if (start < previous_end) throw OverlappingCues("cue " + std::to_string(cue + 1) + " starts before the previous ends");
        previous_end = end;

        if (cue > 0) out += '\n';
        out += std::to_string(++cue);
        out += '\n';
        out += srt_timestamp(state.onset) + " --> " + srt_timestamp(*state.offset) + '\n';
        for (const auto* row : rows) {
            out += *row;
            out += '\n';
        }
    }
    return out;
}

}  // namespace livesub
