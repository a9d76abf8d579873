#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coinwords {

/// An operation defined on non-empty words received the empty word.
class EmptyWordError final : public std::invalid_argument {
public:
    EmptyWordError() : std::invalid_argument("operation requires a non-empty word") {}
};

/// A word that had to be Lyndon is not.
class NotLyndonError final : public std::invalid_argument {
public:
    explicit NotLyndonError(const std::string& word)
        : std::invalid_argument("not a Lyndon word: " + word) {}
};

/// Single-letter words admit no standard factorization.
class SingleLetterError final : public std::invalid_argument {
public:
    SingleLetterError()
        : std::invalid_argument("single-letter word has no standard factorization") {}
};

/// The operation needs at least two letters in total.
class TooShortError final : public std::invalid_argument {
public:
    explicit TooShortError(const std::string& what) : std::invalid_argument(what) {}
};

/// The multiset has cardinality zero.
class EmptyMultisetError final : public std::invalid_argument {
public:
    EmptyMultisetError() : std::invalid_argument("multiset has no elements") {}
};

/// Polynomials combined under one operation carry different truncation degrees.
class DegreeMismatchError final : public std::invalid_argument {
public:
    DegreeMismatchError() : std::invalid_argument("truncation degrees differ") {}
};

/// Polynomials combined under one operation carry different variable counts.
class VariableCountMismatchError final : public std::invalid_argument {
public:
    VariableCountMismatchError() : std::invalid_argument("variable counts differ") {}
};

/// Text input that does not parse; position is the byte offset of the problem.
class ParseError final : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace coinwords
