#include "livesub/core_model.hpp"

#include <algorithm>
#include <cmath>

#include "livesub/errors.hpp"

namespace livesub {

TokenKind classify_surface(std::string_view surface) {
    if (surface == kEndOfLine) return TokenKind::EndOfLine;
    if (surface == kEndOfBlock) return TokenKind::EndOfBlock;
    if (surface == kEndOfSegment) return TokenKind::EndOfSegment;
    return TokenKind::Word;
}

std::size_t char_count(std::string_view utf8) {
    return static_cast<std::size_t>(std::count_if(utf8.begin(), utf8.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

std::size_t EmissionLog::word_count() const {
    return static_cast<std::size_t>(
        std::count_if(events.begin(), events.end(), [](const TokenEvent& e) { return e.is_word(); }));
}

void validate(const EmissionLog& log) {
    if (!(log.source_duration > 0.0) || !std::isfinite(log.source_duration)) {
        throw InvalidLog("segment '" + log.segment_id + "': source duration must be positive");
    }
    if (log.wait_k < 1) throw InvalidLog("segment '" + log.segment_id + "': k must be at least 1");
    if (!(log.step_size > 0.0)) throw InvalidLog("segment '" + log.segment_id + "': step size must be positive");
    for (std::size_t i = 0; i < log.events.size(); ++i) {
        const auto& e = log.events[i];
        if (!(e.emit_time >= 0.0) || !std::isfinite(e.emit_time)) {
            throw InvalidLog("segment '" + log.segment_id + "': negative or non-finite emit time at event " +
                             std::to_string(i));
        }
        if (i > 0 && e.emit_time < log.events[i - 1].emit_time) {
            throw NonMonotonicTime(i, log.events[i - 1].emit_time, e.emit_time);
        }
        if (e.kind == TokenKind::EndOfSegment && i + 1 != log.events.size()) {
            throw InvalidLog("segment '" + log.segment_id + "': <eos> must be the last event");
        }
        if (e.kind != classify_surface(e.surface)) {
            throw InvalidLog("segment '" + log.segment_id + "': token kind does not match surface '" + e.surface +
                             "'");
        }
    }
    if (log.consumed && log.consumed->size() != log.events.size()) {
        throw InvalidLog("segment '" + log.segment_id + "': consumed-source list length differs from events");
    }
}

DelayK::DelayK(int k, double step_size) : seconds_(step_size * static_cast<double>(k)) {
    if (k < 1 || !(step_size > 0.0)) throw Error("DELAY_K needs k >= 1 and a positive step size");
}

std::string SubtitleLine::text() const {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w.surface;
    }
    return out;
}

std::size_t SubtitleBlock::word_count() const {
    std::size_t n = 0;
    for (const auto& l : lines) n += l.words.size();
    return n;
}

bool SubtitleBlock::overflowed() const {
    return std::count_if(body.begin(), body.end(),
                         [](const TokenEvent& e) { return e.kind == TokenKind::EndOfLine; }) >= 2;
}

std::vector<TokenEvent> parse_token_stream(std::span<const RawToken> raw) {
    std::vector<TokenEvent> out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& [surface, time] = raw[i];
        if (surface.empty()) throw EmptySurface(i);
        if (surface.find_first_of(" \t\r\n\v\f") != std::string::npos) throw InvalidSurface(i, surface);
        if (i > 0 && time < raw[i - 1].second) throw NonMonotonicTime(i, raw[i - 1].second, time);
        out.push_back(TokenEvent{surface, classify_surface(surface), time});
    }
    return out;
}

namespace {

// Events up to, not including, a closing <eos>.
std::span<const TokenEvent> before_eos(std::span<const TokenEvent> events) {
    auto it = std::find_if(events.begin(), events.end(),
                           [](const TokenEvent& e) { return e.kind == TokenKind::EndOfSegment; });
    return events.first(static_cast<std::size_t>(it - events.begin()));
}

}  // namespace

std::vector<SubtitleLine> extract_lines(std::span<const TokenEvent> events) {
    std::vector<SubtitleLine> lines;
    SubtitleLine pending;
    for (const auto& e : before_eos(events)) {
        if (e.is_word()) {
            pending.words.push_back(e);
            continue;
        }
        pending.break_time = e.emit_time;
        pending.terminator =
            e.kind == TokenKind::EndOfLine ? LineTerminator::EndOfLine : LineTerminator::EndOfBlock;
        lines.push_back(std::move(pending));
        pending = SubtitleLine{};
    }
    if (!pending.words.empty()) {
        pending.break_time = pending.words.back().emit_time;
        pending.terminator = LineTerminator::ImplicitEnd;
        lines.push_back(std::move(pending));
    }
    return lines;
}

namespace {

void close_line(SubtitleBlock& block, SubtitleLine line) {
    if (block.lines.size() < 2) {
        block.lines.push_back(std::move(line));
        return;
    }
    auto& last = block.lines.back();
    last.words.insert(last.words.end(), line.words.begin(), line.words.end());
    last.break_time = line.break_time;
    last.terminator = line.terminator;
}

}  // namespace

std::vector<SubtitleBlock> extract_blocks(std::span<const TokenEvent> events) {
    std::vector<SubtitleBlock> blocks;
    SubtitleBlock block;
    SubtitleLine line;
    for (const auto& e : before_eos(events)) {
        switch (e.kind) {
            case TokenKind::Word:
                line.words.push_back(e);
                block.body.push_back(e);
                break;
            case TokenKind::EndOfLine:
                line.break_time = e.emit_time;
                line.terminator = LineTerminator::EndOfLine;
                close_line(block, std::move(line));
                line = SubtitleLine{};
                block.body.push_back(e);
                break;
            case TokenKind::EndOfBlock:
                line.break_time = e.emit_time;
                line.terminator = LineTerminator::EndOfBlock;
                close_line(block, std::move(line));
                line = SubtitleLine{};
                block.block_time = e.emit_time;
                blocks.push_back(std::move(block));
                block = SubtitleBlock{};
                break;
            case TokenKind::EndOfSegment:
                break;
        }
    }
    if (!line.words.empty()) {
        line.break_time = line.words.back().emit_time;
        line.terminator = LineTerminator::ImplicitEnd;
        close_line(block, std::move(line));
    }
    if (!block.lines.empty()) {
        block.block_time = block.lines.back().break_time;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace livesub
