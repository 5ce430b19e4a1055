#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "livesub/subtitle_io.hpp"

namespace livesub {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kModeWidth = 5;
constexpr std::size_t kRsWidth = 10;
constexpr std::size_t kPctWidth = 4;
constexpr std::size_t kDelayWidth = 5;

std::string pad_left(const std::string& s, std::size_t width) {
    const std::size_t n = char_count(s);
    return n >= width ? s : std::string(width - n, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    const std::size_t n = char_count(s);
    return n >= width ? s : s + std::string(width - n, ' ');
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string percent(const std::optional<double>& pct) { return pct ? fixed(*pct, 0) + "%" : "-"; }

std::string header_row() {
    return pad_right("mode", kModeWidth) + ' ' + pad_left("rs", kRsWidth) + ' ' + pad_left("≤21", kPctWidth) + ' ' +
           pad_left("delay", kDelayWidth);
}

void append_rows(std::string& out, const std::vector<ModeMetrics>& modes) {
    for (auto mode : kAllModes) {
        for (const auto& mm : modes) {
            if (mm.mode == mode) out += report_row(mm.mode, mm.rs, mm.delay_ms) + '\n';
        }
    }
}

ordered_json mode_json(const ModeMetrics& mm) {
    ordered_json j;
    j["mode"] = std::string(mode_name(mm.mode));
    if (mm.rs) {
        j["rs_mean"] = std::isnan(mm.rs->mean) ? ordered_json(nullptr) : ordered_json(mm.rs->mean);
        j["rs_std"] = std::isnan(mm.rs->std_dev) ? ordered_json(nullptr) : ordered_json(mm.rs->std_dev);
        j["pct_conforming"] = mm.rs->pct_conforming;
        j["samples"] = mm.rs->samples;
        j["infinite_samples"] = mm.rs->infinite_samples;
    } else {
        j["rs_mean"] = nullptr;
        j["rs_std"] = nullptr;
        j["pct_conforming"] = nullptr;
        j["samples"] = 0;
        j["infinite_samples"] = 0;
    }
    j["delay_ms"] = mm.delay_ms;
    return j;
}

ordered_json optional_json(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

}  // namespace

std::string report_row(DisplayMode mode, const std::optional<ReadingSpeedStats>& rs, double delay_ms) {
    std::string rs_cell = "-";
    std::string pct_cell = "-";
    if (rs) {
        rs_cell = std::isnan(rs->mean) ? "n/a" : fixed(rs->mean, 1) + " ± " + fixed(rs->std_dev, 1);
        pct_cell = fixed(rs->pct_conforming, 0) + "%";
    }
    // Cells wider than their column push the row out rather than merging.
    return pad_right(std::string(mode_name(mode)), kModeWidth) + ' ' + pad_left(rs_cell, kRsWidth) + ' ' +
           pad_left(pct_cell, kPctWidth) + ' ' + pad_left(fixed(delay_ms, 0), kDelayWidth);
}

std::string report_table(const MetricsReport& report) {
    const auto& c = report.corpus;
    const auto& o = report.options;
    std::string out = "# segments: " + std::to_string(c.segments) + " (scored " + std::to_string(c.scored_segments) +
                      ")  rs threshold: " + fixed(o.rs_threshold, 1) + " cps  cpl: " + std::to_string(o.min_cpl) +
                      "-" + std::to_string(o.max_cpl) + '\n';
    if (report.empty()) {
        out += header_row() + '\n';
        out += "(empty corpus)\n";
        return out;
    }
    out += "# AL: " + fixed(c.average_lagging_ms, 0) + " ms" + (c.lagging_approximated ? " (approx.)" : "") +
           "  Len: " + percent(c.length_conformity) + '\n';
    out += header_row() + '\n';
    append_rows(out, c.modes);
    for (const auto& seg : report.segments) {
        out += "\n## " + seg.segment_id + "  AL: " + fixed(seg.average_lagging_ms, 0) +
               " ms  Len: " + percent(seg.length_conformity) + '\n';
        append_rows(out, seg.modes);
    }
    return out;
}

std::string report_json(const MetricsReport& report) {
    const auto& c = report.corpus;
    const auto& o = report.options;
    ordered_json j;
    j["empty"] = report.empty();
    j["segments"] = c.segments;
    j["scored_segments"] = c.scored_segments;
    j["rs_threshold"] = o.rs_threshold;
    j["cpl_min"] = o.min_cpl;
    j["cpl_max"] = o.max_cpl;
    j["max_row_chars"] = o.max_row_chars;
    j["average_lagging_ms"] = report.empty() ? ordered_json(nullptr) : ordered_json(c.average_lagging_ms);
    j["lagging_approximated"] = c.lagging_approximated;
    j["length_conformity_pct"] = optional_json(c.length_conformity);
    auto modes = ordered_json::array();
    for (const auto& mm : c.modes) modes.push_back(mode_json(mm));
    j["modes"] = std::move(modes);
    if (o.per_segment) {
        auto segs = ordered_json::array();
        for (const auto& seg : report.segments) {
            ordered_json s;
            s["id"] = seg.segment_id;
            s["words"] = seg.words;
            s["average_lagging_ms"] = seg.words > 0 ? ordered_json(seg.average_lagging_ms) : ordered_json(nullptr);
            s["lagging_approximated"] = seg.lagging_approximated;
            s["length_conformity_pct"] = optional_json(seg.length_conformity);
            auto sm = ordered_json::array();
            for (const auto& mm : seg.modes) sm.push_back(mode_json(mm));
            s["modes"] = std::move(sm);
            segs.push_back(std::move(s));
        }
        j["per_segment"] = std::move(segs);
    }
    return j.dump(2) + '\n';
}

}  // namespace livesub
