#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace livesub {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonMonotonicTime : public Error {
public:
    NonMonotonicTime(std::size_t index, double previous, double current, std::size_t line = 0);
    /// Position of the offending event within its sequence.
    std::size_t index() const { return index_; }
    /// 1-based input line for file readers, 0 for in-memory sequences.
    std::size_t line() const { return line_; }

private:
    std::size_t index_;
    std::size_t line_;
};

class EmptySurface : public Error {
public:
    explicit EmptySurface(std::size_t index);
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class InvalidSurface : public Error {
public:
    InvalidSurface(std::size_t index, const std::string& surface);
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Structural problem in an emission log (misplaced <eos>, bad duration, ...).
class InvalidLog : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    SchemaError(std::size_t line, std::string field, const std::string& detail);
    std::size_t line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

class NonPositiveDuration : public Error {
public:
    NonPositiveDuration(std::size_t line, double duration);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class EmptyLog : public Error {
public:
    explicit EmptyLog(const std::string& segment_id);
};

class MismatchedSegment : public Error {
public:
    MismatchedSegment(std::size_t schedule_words, std::size_t log_words);
};

class OverlappingCues : public Error {
public:
    using Error::Error;
};

}  // namespace livesub
