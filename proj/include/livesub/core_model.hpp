#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace livesub {

inline constexpr double kDefaultStepSeconds = 0.280;

inline constexpr std::string_view kEndOfLine = "<eol>";
inline constexpr std::string_view kEndOfBlock = "<eob>";
inline constexpr std::string_view kEndOfSegment = "<eos>";

enum class TokenKind { Word, EndOfLine, EndOfBlock, EndOfSegment };

TokenKind classify_surface(std::string_view surface);

inline bool is_break(TokenKind kind) { return kind == TokenKind::EndOfLine || kind == TokenKind::EndOfBlock; }

struct TokenEvent {
    std::string surface;
    TokenKind kind = TokenKind::Word;
    double emit_time = 0.0;  // seconds

    bool is_word() const { return kind == TokenKind::Word; }
    bool operator==(const TokenEvent&) const = default;
};

/// Number of Unicode scalar values in a UTF-8 string.
std::size_t char_count(std::string_view utf8);

/// One audio segment's output: every emitted token with its timestamp.
struct EmissionLog {
    std::string segment_id;
    double source_duration = 0.0;  // seconds
    int wait_k = 1;
    double step_size = kDefaultStepSeconds;
    std::vector<TokenEvent> events;
    // Source seconds consumed before each event was written, when the producer
    // recorded it. Same length as events.
    std::optional<std::vector<double>> consumed;

    std::size_t word_count() const;
    bool operator==(const EmissionLog&) const = default;
};

/// Throws InvalidLog / NonMonotonicTime when the log breaks a structural rule.
void validate(const EmissionLog& log);

/// Lower bound on the time until the first token of the next segment:
/// the wait-k policy reads k steps before writing.
class DelayK {
public:
    DelayK(int k, double step_size = kDefaultStepSeconds);
    static DelayK of(const EmissionLog& log) { return DelayK(log.wait_k, log.step_size); }

    double seconds() const { return seconds_; }

private:
    double seconds_;
};

enum class LineTerminator { EndOfLine, EndOfBlock, ImplicitEnd };

struct SubtitleLine {
    std::vector<TokenEvent> words;
    double break_time = 0.0;
    LineTerminator terminator = LineTerminator::ImplicitEnd;

    /// Words joined by single spaces.
    std::string text() const;
    bool empty() const { return words.empty(); }
};

struct SubtitleBlock {
    // At most two; extra <eol> breaks fold into the second line.
    std::vector<SubtitleLine> lines;
    double block_time = 0.0;
    // Words and <eol> tokens in emission order, without the closing <eob>.
    std::vector<TokenEvent> body;

    std::size_t word_count() const;
    /// True when the block held more than two lines before folding.
    bool overflowed() const;
};

using RawToken = std::pair<std::string, double>;

std::vector<TokenEvent> parse_token_stream(std::span<const RawToken> raw);

std::vector<SubtitleBlock> extract_blocks(std::span<const TokenEvent> events);

/// Both <eol> and <eob> close a line here.
std::vector<SubtitleLine> extract_lines(std::span<const TokenEvent> events);

}  // namespace livesub
