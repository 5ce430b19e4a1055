#include "livesub/display_sim.hpp"

#include <gtest/gtest.h>

#include <random>

#include "livesub/errors.hpp"
#include "livesub/waitk.hpp"
#include "synthetic.hpp"

namespace livesub {
namespace {

std::vector<TokenEvent> events(std::vector<RawToken> raw) { return parse_token_stream(raw); }

std::vector<TokenEvent> words_of_len(std::size_t count, std::size_t len, double gap = 0.3) {
    std::vector<RawToken> raw;
    for (std::size_t i = 0; i < count; ++i) raw.emplace_back(std::string(len, 'x'), gap * static_cast<double>(i + 1));
    return parse_token_stream(raw);
}

TEST(GroupWordBlocks, SplitsWhenNextWordOverflows) {
    // 8 words of 9 chars + 7 spaces = 79, then "abcdefghij" needs 79 + 11 = 90.
    auto ev = words_of_len(8, 9);
    ev.push_back(TokenEvent{"abcdefghij", TokenKind::Word, 10.0});
    const auto blocks = group_word_blocks(ev);
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_EQ(blocks[0].char_length, 79u);
    EXPECT_EQ(blocks[1].char_length, 10u);
}

TEST(GroupWordBlocks, SingleWord) {
    const auto blocks = group_word_blocks(events({{"Hi", 1.0}}));
    ASSERT_EQ(blocks.size(), 1u);
    EXPECT_EQ(blocks[0].char_length, 2u);
}

TEST(GroupWordBlocks, ThirtyNineCharWordsPackEightPerRow) {
    const auto blocks = group_word_blocks(words_of_len(30, 9), 84);
    ASSERT_EQ(blocks.size(), 4u);
    for (int b = 0; b < 3; ++b) {
        EXPECT_EQ(blocks[b].words.size(), 8u);
        EXPECT_EQ(blocks[b].char_length, 79u);
    }
    EXPECT_EQ(blocks[3].words.size(), 6u);
}

TEST(GroupWordBlocks, ExactFitStaysInRow) {
    // 4 + 1 + 79 = 84 fits exactly.
    const auto blocks = group_word_blocks(events({{"abcd", 1.0}, {std::string(79, 'y'), 2.0}}));
    ASSERT_EQ(blocks.size(), 1u);
    EXPECT_EQ(blocks[0].char_length, 84u);
}

TEST(GroupWordBlocks, LongWordGetsItsOwnRowUntruncated) {
    const std::string longword(100, 'z');
    const auto blocks = group_word_blocks(events({{"a", 1.0}, {longword, 2.0}, {"b", 3.0}}));
    ASSERT_EQ(blocks.size(), 3u);
    EXPECT_EQ(blocks[1].words.at(0).surface, longword);
    EXPECT_EQ(blocks[1].char_length, 100u);
}

TEST(GroupWordBlocks, IgnoresBreaks) {
    const auto blocks = group_word_blocks(events({{"a", 1.0}, {"<eol>", 1.1}, {"b", 1.2}, {"<eob>", 1.3}}));
    ASSERT_EQ(blocks.size(), 1u);
    EXPECT_EQ(blocks[0].words.size(), 2u);
    EXPECT_EQ(blocks[0].char_length, 3u);
}

TEST(ScheduleWordMode, WordsAccumulateThenClear) {
    std::vector<WordBlock> blocks(2);
    blocks[0].words = events({{"Hi", 1.0}, {"there", 1.4}});
    blocks[1].words = events({{"next", 2.4}});
    const auto s = schedule_word_mode(blocks);
    ASSERT_EQ(s.states.size(), 3u);
    EXPECT_EQ(s.states[0].rows, std::vector<std::string>{"Hi"});
    EXPECT_DOUBLE_EQ(s.states[0].onset, 1.0);
    EXPECT_DOUBLE_EQ(*s.states[0].offset, 1.4);
    EXPECT_EQ(s.states[1].rows, std::vector<std::string>{"Hi there"});
    EXPECT_DOUBLE_EQ(*s.states[1].offset, 2.4);
    EXPECT_EQ(s.states[2].rows, std::vector<std::string>{"next"});
    EXPECT_FALSE(s.states[2].offset.has_value());
    EXPECT_EQ(s.word_display_times, (std::vector<double>{1.0, 1.4, 2.4}));
}

TEST(ScheduleWordMode, SingleWordIsOpenEnded) {
    std::vector<WordBlock> blocks(1);
    blocks[0].words = events({{"Hi", 1.0}});
    const auto s = schedule_word_mode(blocks);
    ASSERT_EQ(s.states.size(), 1u);
    EXPECT_FALSE(s.states[0].offset);
    const auto closed = schedule_word_mode(blocks, 1.5);
    EXPECT_DOUBLE_EQ(*closed.states[0].offset, 1.5);
}

TEST(ScheduleWordMode, EmptySegment) {
    const auto s = schedule_word_mode({});
    EXPECT_TRUE(s.states.empty());
    EXPECT_TRUE(s.word_display_times.empty());
}

TEST(ScheduleWordMode, BurstCollapsesToOneFrame) {
    std::vector<WordBlock> blocks(1);
    blocks[0].words = events({{"a", 0.84}, {"b", 1.0}, {"c", 1.0}, {"d", 1.0}});
    const auto s = schedule_word_mode(blocks);
    ASSERT_EQ(s.states.size(), 2u);
    EXPECT_EQ(s.states[1].rows, std::vector<std::string>{"a b c d"});
    EXPECT_EQ(s.word_display_times.size(), 4u);
}

TEST(ScheduleBlockMode, BlocksReplaceEachOther) {
    const auto blocks = extract_blocks(
        events({{"Good", 1.0}, {"morning", 1.5}, {"<eob>", 2.0}, {"friends", 3.0}, {"<eob>", 4.0}}));
    const auto s = schedule_block_mode(blocks);
    ASSERT_EQ(s.states.size(), 2u);
    EXPECT_DOUBLE_EQ(s.states[0].onset, 2.0);
    EXPECT_DOUBLE_EQ(*s.states[0].offset, 4.0);
    EXPECT_DOUBLE_EQ(s.states[1].onset, 4.0);
    EXPECT_FALSE(s.states[1].offset);
    EXPECT_EQ(s.word_display_times, (std::vector<double>{2.0, 2.0, 4.0}));
}

TEST(ScheduleBlockMode, TwoLinesTwoRows) {
    const auto s = schedule_block_mode(extract_blocks(events({{"a", 1.0}, {"<eol>", 1.2}, {"b", 1.5}, {"<eob>", 2.0}})));
    ASSERT_EQ(s.states.size(), 1u);
    EXPECT_EQ(s.states[0].rows, (std::vector<std::string>{"a", "b"}));
}

TEST(ScheduleLineMode, LinesScrollUpThenVanish) {
    const auto lines =
        extract_lines(events({{"one", 1.0}, {"<eol>", 2.0}, {"two", 2.5}, {"<eob>", 3.0}, {"three", 4.0}, {"<eol>", 5.0}}));
    const auto s = schedule_line_mode(lines);
    ASSERT_EQ(s.states.size(), 3u);
    EXPECT_EQ(s.states[0].rows, std::vector<std::string>{"one"});
    EXPECT_DOUBLE_EQ(s.states[0].onset, 2.0);
    EXPECT_DOUBLE_EQ(*s.states[0].offset, 3.0);
    EXPECT_EQ(s.states[1].rows, (std::vector<std::string>{"one", "two"}));
    EXPECT_DOUBLE_EQ(*s.states[1].offset, 5.0);
    EXPECT_EQ(s.states[2].rows, (std::vector<std::string>{"two", "three"}));
    EXPECT_FALSE(s.states[2].offset);
}

TEST(ScheduleLineMode, SingleLineOpenEnded) {
    const auto s = schedule_line_mode(extract_lines(events({{"a", 1.0}, {"<eol>", 2.0}})));
    ASSERT_EQ(s.states.size(), 1u);
    EXPECT_EQ(s.states[0].rows.size(), 1u);
    EXPECT_FALSE(s.states[0].offset);
}

TEST(CloseSchedule, ClosesOnlyTheOpenFinalState) {
    auto s = schedule_block_mode(extract_blocks(events({{"a", 1.0}, {"<eob>", 2.0}})));
    close_schedule(s, 2.84);
    EXPECT_DOUBLE_EQ(*s.states[0].offset, 2.84);
    close_schedule(s, 9.0);
    EXPECT_DOUBLE_EQ(*s.states[0].offset, 2.84);

    auto t = schedule_block_mode(extract_blocks(events({{"a", 1.0}, {"<eob>", 2.0}})));
    EXPECT_THROW(close_schedule(t, 2.0), Error);
}

TEST(ParseMode, RoundTripsNames) {
    for (auto mode : kAllModes) EXPECT_EQ(parse_mode(mode_name(mode)), mode);
    EXPECT_FALSE(parse_mode("all"));
}

// Property checks over a synthetic wait-k corpus.
class ScheduleProperties : public testing::Test {
protected:
    static std::vector<EmissionLog> corpus() {
        std::vector<EmissionLog> logs;
        for (const auto& ref : synthetic::make_refs(300, 99)) {
            for (int k : {1, 3, 5}) logs.push_back(simulate_waitk(ref, WaitKConfig{k, 0.28, 0.01 * (k - 1), true}));
        }
        return logs;
    }
};

TEST_F(ScheduleProperties, TilingRowLimitsAndAvailabilityOrdering) {
    for (const auto& log : corpus()) {
        std::vector<std::vector<double>> shown;
        for (auto mode : kAllModes) {
            const auto s = schedule_for(log, mode);
            EXPECT_EQ(s.word_display_times.size(), log.word_count());
            for (std::size_t i = 0; i < s.states.size(); ++i) {
                const auto& st = s.states[i];
                ASSERT_FALSE(st.rows.empty());
                EXPECT_LE(st.rows.size(), mode == DisplayMode::WordForWord ? 1u : 2u);
                if (mode == DisplayMode::WordForWord) {
                    for (const auto& row : st.rows) EXPECT_LE(char_count(row), kDefaultMaxRowChars);
                }
                if (i + 1 < s.states.size()) {
                    ASSERT_TRUE(st.offset);
                    EXPECT_LT(st.onset, *st.offset);
                    EXPECT_EQ(*st.offset, s.states[i + 1].onset);
                } else {
                    EXPECT_FALSE(st.offset);
                }
            }
            for (std::size_t w = 1; w < s.word_display_times.size(); ++w) {
                EXPECT_LE(s.word_display_times[w - 1], s.word_display_times[w]);
            }
            shown.push_back(s.word_display_times);
        }
        for (std::size_t w = 0; w < log.word_count(); ++w) {
            EXPECT_LE(shown[0][w], shown[2][w]);
            EXPECT_LE(shown[2][w], shown[1][w]);
        }
    }
}

TEST_F(ScheduleProperties, LineNeverVisibleAfterTwoNewerLines) {
    for (const auto& log : corpus()) {
        const auto lines = extract_lines(log.events);
        const auto s = schedule_line_mode(lines);
        for (const auto& st : s.states) {
            // Every visible row is one of the two most recent lines at onset.
            std::vector<std::string> recent;
            for (const auto& l : lines) {
                if (l.break_time <= st.onset) recent.push_back(l.text());
            }
            ASSERT_FALSE(recent.empty());
            EXPECT_EQ(st.rows.back(), recent.back());
            if (st.rows.size() == 2) EXPECT_EQ(st.rows.front(), recent[recent.size() - 2]);
        }
    }
}

}  // namespace
}  // namespace livesub
