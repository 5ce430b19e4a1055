#include "livesub/core_model.hpp"

#include <gtest/gtest.h>

#include <random>

#include "livesub/errors.hpp"

namespace livesub {
namespace {

std::vector<TokenEvent> events(std::vector<RawToken> raw) { return parse_token_stream(raw); }

TEST(ClassifySurface, BreakSymbolsAreExact) {
    EXPECT_EQ(classify_surface("<eol>"), TokenKind::EndOfLine);
    EXPECT_EQ(classify_surface("<eob>"), TokenKind::EndOfBlock);
    EXPECT_EQ(classify_surface("<eos>"), TokenKind::EndOfSegment);
    EXPECT_EQ(classify_surface("<EOL>"), TokenKind::Word);
    EXPECT_EQ(classify_surface("<eol>,"), TokenKind::Word);
    EXPECT_EQ(classify_surface("ciao"), TokenKind::Word);
}

TEST(CharCount, CountsScalarValues) {
    EXPECT_EQ(char_count(""), 0u);
    EXPECT_EQ(char_count("Hello"), 5u);
    EXPECT_EQ(char_count("perch\xC3\xA9"), 6u);
    EXPECT_EQ(char_count("\xE2\x82\xAC" "5"), 2u);
}

TEST(ParseTokenStream, ClassifiesAndKeepsTimes) {
    const auto ev = events({{"Hello", 1.0}, {"<eob>", 1.2}});
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_EQ(ev[0], (TokenEvent{"Hello", TokenKind::Word, 1.0}));
    EXPECT_EQ(ev[1], (TokenEvent{"<eob>", TokenKind::EndOfBlock, 1.2}));
}

TEST(ParseTokenStream, EmptyStream) { EXPECT_TRUE(events({}).empty()); }

TEST(ParseTokenStream, RejectsDecreasingTime) {
    try {
        events({{"a", 1.0}, {"b", 0.5}});
        FAIL() << "expected NonMonotonicTime";
    } catch (const NonMonotonicTime& e) {
        EXPECT_EQ(e.index(), 1u);
    }
}

TEST(ParseTokenStream, RejectsEmptyAndSpacedSurfaces) {
    EXPECT_THROW(events({{"a", 1.0}, {"", 1.1}}), EmptySurface);
    EXPECT_THROW(events({{"a b", 1.0}}), InvalidSurface);
}

TEST(ParseTokenStream, EqualTimesAreAllowed) { EXPECT_EQ(events({{"a", 1.0}, {"b", 1.0}}).size(), 2u); }

TEST(ExtractBlocks, OneBlockPerEob) {
    const auto blocks = extract_blocks(
        events({{"Good", 1.0}, {"morning", 1.5}, {"<eob>", 2.0}, {"friends", 3.0}, {"<eob>", 4.0}}));
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_DOUBLE_EQ(blocks[0].block_time, 2.0);
    EXPECT_DOUBLE_EQ(blocks[1].block_time, 4.0);
    EXPECT_EQ(blocks[0].lines.at(0).text(), "Good morning");
    EXPECT_EQ(blocks[1].lines.at(0).text(), "friends");
}

TEST(ExtractBlocks, EolSplitsLines) {
    const auto blocks = extract_blocks(events({{"a", 1.0}, {"<eol>", 1.2}, {"b", 1.5}, {"<eob>", 2.0}}));
    ASSERT_EQ(blocks.size(), 1u);
    ASSERT_EQ(blocks[0].lines.size(), 2u);
    EXPECT_EQ(blocks[0].lines[0].terminator, LineTerminator::EndOfLine);
    EXPECT_DOUBLE_EQ(blocks[0].lines[0].break_time, 1.2);
    EXPECT_EQ(blocks[0].lines[1].terminator, LineTerminator::EndOfBlock);
    EXPECT_DOUBLE_EQ(blocks[0].block_time, blocks[0].lines[1].break_time);
}

TEST(ExtractBlocks, TrailingWordsFormImplicitBlock) {
    const auto blocks = extract_blocks(events({{"a", 1.0}}));
    ASSERT_EQ(blocks.size(), 1u);
    EXPECT_EQ(blocks[0].lines.at(0).terminator, LineTerminator::ImplicitEnd);
    EXPECT_DOUBLE_EQ(blocks[0].block_time, 1.0);
}

TEST(ExtractBlocks, TrailingEolClosesImplicitBlockAtBreak) {
    const auto blocks = extract_blocks(events({{"a", 1.0}, {"<eol>", 1.3}}));
    ASSERT_EQ(blocks.size(), 1u);
    ASSERT_EQ(blocks[0].lines.size(), 1u);
    EXPECT_DOUBLE_EQ(blocks[0].block_time, 1.3);
}

TEST(ExtractBlocks, EosIsNeverAWord) {
    const auto blocks = extract_blocks(events({{"a", 1.0}, {"<eob>", 1.1}, {"b", 1.2}, {"<eos>", 1.5}}));
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_EQ(blocks[1].lines.at(0).text(), "b");
    EXPECT_DOUBLE_EQ(blocks[1].block_time, 1.2);
}

TEST(ExtractBlocks, ThirdLineFoldsIntoSecond) {
    const auto blocks = extract_blocks(
        events({{"a", 1.0}, {"<eol>", 1.1}, {"b", 1.2}, {"<eol>", 1.3}, {"c", 1.4}, {"<eob>", 1.5}}));
    ASSERT_EQ(blocks.size(), 1u);
    ASSERT_EQ(blocks[0].lines.size(), 2u);
    EXPECT_EQ(blocks[0].lines[1].text(), "b c");
    EXPECT_DOUBLE_EQ(blocks[0].lines[1].break_time, 1.5);
    EXPECT_TRUE(blocks[0].overflowed());
}

TEST(ExtractBlocks, AdjacentBreaksGiveEmptyLines) {
    const auto blocks = extract_blocks(events({{"<eob>", 1.0}, {"a", 1.1}, {"<eol>", 1.2}, {"<eob>", 1.3}}));
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_EQ(blocks[0].word_count(), 0u);
    ASSERT_EQ(blocks[1].lines.size(), 2u);
    EXPECT_TRUE(blocks[1].lines[1].empty());
}

TEST(ExtractLines, BothBreaksCloseLines) {
    const auto lines = extract_lines(events({{"a", 1.0}, {"<eol>", 1.2}, {"b", 1.5}, {"<eob>", 2.0}}));
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_DOUBLE_EQ(lines[0].break_time, 1.2);
    EXPECT_DOUBLE_EQ(lines[1].break_time, 2.0);
}

TEST(ExtractLines, SingleBreak) { EXPECT_EQ(extract_lines(events({{"a", 1.0}, {"<eob>", 2.0}})).size(), 1u); }

TEST(ExtractLines, LoneBreakIsEmptyLine) {
    const auto lines = extract_lines(events({{"<eol>", 1.0}}));
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_TRUE(lines[0].empty());
    EXPECT_DOUBLE_EQ(lines[0].break_time, 1.0);
}

TEST(DelayK, IsStepTimesK) {
    EXPECT_DOUBLE_EQ(DelayK(3).seconds(), 0.84);
    EXPECT_DOUBLE_EQ(DelayK(5).seconds(), 1.4);
    EXPECT_DOUBLE_EQ(DelayK(2, 0.5).seconds(), 1.0);
    EXPECT_THROW(DelayK(0), Error);
    EXPECT_THROW(DelayK(1, 0.0), Error);
}

TEST(ValidateLog, StructuralRules) {
    EmissionLog log{"s", 2.0, 3, 0.28, events({{"a", 1.0}, {"<eos>", 1.0}}), std::nullopt};
    EXPECT_NO_THROW(validate(log));
    auto bad = log;
    bad.events = events({{"<eos>", 1.0}, {"a", 1.0}});
    EXPECT_THROW(validate(bad), InvalidLog);
    bad = log;
    bad.source_duration = 0.0;
    EXPECT_THROW(validate(bad), InvalidLog);
    bad = log;
    bad.events[1].emit_time = 0.5;
    EXPECT_THROW(validate(bad), NonMonotonicTime);
    bad = log;
    bad.consumed = std::vector<double>{0.1};
    EXPECT_THROW(validate(bad), InvalidLog);
}

// Random streams with arbitrary break placement, including leading and
// adjacent breaks.
std::vector<TokenEvent> random_stream(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_real_distribution<double> gap(0.0, 0.5);
    std::vector<RawToken> raw;
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        t += gap(rng);
        const int p = pick(rng);
        raw.emplace_back(p == 0 ? "<eol>" : p == 1 ? "<eob>" : "w" + std::to_string(i), t);
    }
    return parse_token_stream(raw);
}

TEST(ExtractProperties, BlockBodiesReproduceTheStream) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto ev = random_stream(rng, 1 + trial % 40);
        std::vector<TokenEvent> rebuilt;
        for (const auto& block : extract_blocks(ev)) {
            rebuilt.insert(rebuilt.end(), block.body.begin(), block.body.end());
            if (block.lines.back().terminator == LineTerminator::EndOfBlock) {
                rebuilt.push_back(TokenEvent{"<eob>", TokenKind::EndOfBlock, block.block_time});
            }
        }
        EXPECT_EQ(rebuilt, ev);
    }
}

TEST(ExtractProperties, LineCountAndWordMembership) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto ev = random_stream(rng, 1 + trial % 40);
        std::size_t breaks = 0;
        std::size_t words = 0;
        for (const auto& e : ev) {
            breaks += is_break(e.kind) ? 1 : 0;
            words += e.is_word() ? 1 : 0;
        }
        const bool trailing = !ev.empty() && ev.back().is_word();
        const auto lines = extract_lines(ev);
        EXPECT_EQ(lines.size(), breaks + (trailing ? 1 : 0));

        std::vector<TokenEvent> from_lines;
        for (const auto& l : lines) {
            EXPECT_GE(l.break_time, l.words.empty() ? 0.0 : l.words.back().emit_time);
            from_lines.insert(from_lines.end(), l.words.begin(), l.words.end());
        }
        std::vector<TokenEvent> from_blocks;
        for (const auto& b : extract_blocks(ev)) {
            EXPECT_LE(b.lines.size(), 2u);
            for (const auto& l : b.lines) from_blocks.insert(from_blocks.end(), l.words.begin(), l.words.end());
        }
        EXPECT_EQ(from_lines.size(), words);
        EXPECT_EQ(from_lines, from_blocks);
    }
}

}  // namespace
}  // namespace livesub
