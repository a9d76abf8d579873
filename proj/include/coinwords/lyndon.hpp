#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coinwords/words.hpp"

namespace coinwords {

enum class Parity { Even, Odd };

const char* to_string(Parity parity);

/// True iff w is primitive and strictly smallest among its rotations.
bool is_lyndon(const Word& w);

/// The unique factorization of a non-empty word into a non-increasing
/// sequence of Lyndon factors, by Duval's linear scan.
std::vector<Word> cfl_factorization(const Word& w);

/// Splits a Lyndon word of length >= 2 as r*s where s is the longest proper
/// suffix that is itself Lyndon (equivalently, the lexicographically smallest
/// proper suffix). Both halves are Lyndon and r < rs < s.
std::pair<Word, Word> standard_factorization(const Word& lyndon_word);

/* The factors of a word's Lyndon factorization when they are pairwise
 * distinct, stored in increasing lexicographic order. Words whose
 * factorization repeats a factor have no tuple; lyndon_tuple reports those
 * as nullopt and the counting layer tallies them separately. */
class LyndonTuple {
public:
    /// Factors must be distinct Lyndon words in increasing order.
    explicit LyndonTuple(std::vector<Word> factors);

    std::span<const Word> factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    std::size_t total_length() const noexcept;
    /// total_length minus the number of factors; the word-side analogue of a
    /// permutation's cycle index.
    int index() const noexcept;
    Parity parity() const noexcept;

    std::string str() const;  // "(1,13,2)"

    bool operator==(const LyndonTuple&) const = default;

private:
    std::vector<Word> factors_;
};

std::optional<LyndonTuple> lyndon_tuple(const Word& w);

/// Concatenates the factors in decreasing order; inverse of lyndon_tuple.
Word tuple_to_word(const LyndonTuple& t);

std::optional<int> lyndon_index(const Word& w);
std::optional<Parity> parity(const Word& w);

}  // namespace coinwords
