#include "livesub/readability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace livesub {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cps(std::size_t chars, double elapsed) {
    if (elapsed <= 0.0) return kInf;
    return static_cast<double>(chars) / elapsed;
}

}  // namespace

bool ReadingSpeedSample::is_infinite() const { return std::isinf(cps); }

std::vector<double> word_block_elapsed(const WordBlock& block, std::optional<double> next_start, DelayK delay_k) {
    const auto& words = block.words;
    std::vector<double> elapsed(words.size());
    if (words.empty()) return elapsed;
    const std::size_t last = words.size() - 1;
    elapsed[last] = next_start ? *next_start - words[last].emit_time : delay_k.seconds();
    for (std::size_t i = last; i-- > 0;) {
        elapsed[i] = (words[i + 1].emit_time - words[i].emit_time) + elapsed[i + 1];
    }
    return elapsed;
}

std::optional<ReadingSpeedSample> rs_word_block(const WordBlock& block, std::optional<double> next_start,
                                                DelayK delay_k) {
    if (block.words.empty()) return std::nullopt;
    const auto elapsed = word_block_elapsed(block, next_start, delay_k);
    double best = 0.0;
    std::size_t suffix_len = 0;
    for (std::size_t i = block.words.size(); i-- > 0;) {
        suffix_len += char_count(block.words[i].surface) + (i + 1 < block.words.size() ? 1 : 0);
        best = std::max(best, cps(suffix_len, elapsed[i]));
    }
    return ReadingSpeedSample{0, best, DisplayMode::WordForWord};
}

std::vector<ReadingSpeedSample> rs_word_mode(std::span<const WordBlock> blocks, DelayK delay_k) {
    std::vector<ReadingSpeedSample> out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::optional<double> next;
        if (b + 1 < blocks.size()) next = blocks[b + 1].words.front().emit_time;
        if (auto sample = rs_word_block(blocks[b], next, delay_k)) {
            sample->unit_index = b;
            out.push_back(*sample);
        }
    }
    return out;
}

std::size_t block_text_length(const SubtitleBlock& block) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < block.body.size(); ++i) {
        const auto& token = block.body[i];
        if (token.kind == TokenKind::EndOfLine) continue;
        len += char_count(token.surface);
        if (i + 1 < block.body.size()) ++len;
    }
    return len;
}

std::vector<ReadingSpeedSample> rs_blocks(std::span<const SubtitleBlock> blocks, DelayK delay_k) {
    std::vector<ReadingSpeedSample> out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t len = block_text_length(blocks[b]);
        if (len == 0) continue;
        const double elapsed =
            b + 1 < blocks.size() ? blocks[b + 1].block_time - blocks[b].block_time : delay_k.seconds();
        out.push_back(ReadingSpeedSample{b, cps(len, elapsed), DisplayMode::Blocks});
    }
    return out;
}

std::vector<ReadingSpeedSample> rs_lines(std::span<const SubtitleLine> lines, DelayK delay_k) {
    std::vector<ReadingSpeedSample> out;
    const std::size_t count = lines.size();
    for (std::size_t l = 0; l < count; ++l) {
        if (lines[l].empty()) continue;
        const std::size_t len = char_count(lines[l].text());
        double elapsed = 0.0;
        if (l + 2 < count) {
            elapsed = (lines[l + 2].break_time - lines[l + 1].break_time) +
                      (lines[l + 1].break_time - lines[l].break_time);
        } else if (l + 1 < count) {
            elapsed = (lines[l + 1].break_time - lines[l].break_time) + delay_k.seconds();
        } else {
            elapsed = delay_k.seconds();
        }
        out.push_back(ReadingSpeedSample{l, cps(len, elapsed), DisplayMode::ScrollingLines});
    }
    return out;
}

std::vector<ReadingSpeedSample> rs_for(const EmissionLog& log, DisplayMode mode, std::size_t max_row_chars) {
    const DelayK delay_k = DelayK::of(log);
    switch (mode) {
        case DisplayMode::WordForWord:
            return rs_word_mode(group_word_blocks(log.events, max_row_chars), delay_k);
        case DisplayMode::Blocks:
            return rs_blocks(extract_blocks(log.events), delay_k);
        case DisplayMode::ScrollingLines:
            return rs_lines(extract_lines(log.events), delay_k);
    }
    return {};
}

std::optional<ReadingSpeedStats> rs_stats(std::span<const ReadingSpeedSample> samples, double threshold) {
    if (samples.empty()) return std::nullopt;
    ReadingSpeedStats stats;
    stats.threshold = threshold;
    stats.samples = samples.size();
    double sum = 0.0;
    std::size_t finite = 0;
    std::size_t conforming = 0;
    for (const auto& s : samples) {
        if (s.cps <= threshold) ++conforming;
        if (s.is_infinite()) {
            ++stats.infinite_samples;
            continue;
        }
        sum += s.cps;
        ++finite;
    }
    stats.pct_conforming = 100.0 * static_cast<double>(conforming) / static_cast<double>(samples.size());
    if (finite == 0) {
        stats.mean = stats.std_dev = std::numeric_limits<double>::quiet_NaN();
        return stats;
    }
    stats.mean = sum / static_cast<double>(finite);
    double sq = 0.0;
    for (const auto& s : samples) {
        if (!s.is_infinite()) sq += (s.cps - stats.mean) * (s.cps - stats.mean);
    }
    stats.std_dev = std::sqrt(sq / static_cast<double>(finite));
    return stats;
}

ConformityCount count_conforming(std::span<const SubtitleBlock> blocks, std::size_t min_cpl, std::size_t max_cpl) {
    ConformityCount count;
    for (const auto& block : blocks) {
        if (block.word_count() == 0) continue;
        ++count.total;
        if (block.overflowed()) continue;
        bool ok = true;
        for (const auto& line : block.lines) {
            const std::size_t len = char_count(line.text());
            ok = ok && len >= min_cpl && len <= max_cpl;
        }
        if (ok) ++count.conforming;
    }
    return count;
}

std::optional<double> length_conformity(std::span<const SubtitleBlock> blocks, std::size_t min_cpl,
                                        std::size_t max_cpl) {
    const auto count = count_conforming(blocks, min_cpl, max_cpl);
    if (count.total == 0) return std::nullopt;
    return 100.0 * static_cast<double>(count.conforming) / static_cast<double>(count.total);
}

}  // namespace livesub
