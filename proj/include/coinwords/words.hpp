#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinwords/bigint.hpp"

namespace coinwords {

/// 1-based rank in an ordered alphabet; rank order is letter order.
using Letter = int;

/// An ordered alphabet whose letters are the ranks 1..size.
class Alphabet {
public:
    explicit Alphabet(int size);

    int size() const noexcept { return size_; }
    bool contains(Letter letter) const noexcept { return letter >= 1 && letter <= size_; }

    bool operator==(const Alphabet&) const noexcept = default;

private:
    int size_;
};

/// A finite sequence of letters. The default-constructed word is the empty
/// word; operations that require non-empty input say so and throw
/// EmptyWordError otherwise.
///
/// operator< is lexicographic with a proper prefix ordered before its
/// extensions, which is the word order used throughout this library.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    /// Accepts either a string of rank digits ("2113") or a comma-separated
    /// rank list ("2,1,1,3"); the latter is required once ranks exceed 9.
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    /// Largest rank used; 0 for the empty word.
    Letter max_letter() const noexcept;

    Word rotated(std::size_t offset) const;
    Word prefix(std::size_t length) const;
    Word suffix_from(std::size_t start) const;

    /// Rank digits when every rank is at most 9, a comma list otherwise.
    std::string str() const;

    friend Word operator+(const Word& a, const Word& b);
    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

enum class Ordering { Less, Equal, Greater };

/// Result of a three-way word comparison. proper_prefix is true exactly when
/// the smaller word is a strict prefix of the larger one, which distinguishes
/// the two ways a word can compare as smaller.
struct LexResult {
    Ordering order;
    bool proper_prefix;
};

LexResult lex_compare(const Word& u, const Word& v);
/// u strictly before v, prefixes included.
bool lex_less(const Word& u, const Word& v);
/// u strictly before v with a letter mismatch required; a proper prefix does
/// not qualify.
bool lex_less_no_prefix(const Word& u, const Word& v);

/// Occurrence counts per rank of a fixed alphabet. Doubles as the exponent
/// vector of the commutative weight monomial of a word: concatenating words
/// adds their content vectors.
class ContentVector {
public:
    ContentVector() = default;
    explicit ContentVector(std::vector<int> counts);

    int size() const noexcept { return static_cast<int>(counts_.size()); }
    long long total() const noexcept;
    int count_of(Letter rank) const;
    std::span<const int> counts() const noexcept { return counts_; }

    ContentVector operator+(const ContentVector& other) const;
    ContentVector scaled(int factor) const;

    std::string str() const;  // "(3,2,1)"

    auto operator<=>(const ContentVector&) const = default;
    bool operator==(const ContentVector&) const = default;

private:
    std::vector<int> counts_;
};

/// A multiset over an ordered alphabet: one multiplicity per rank.
class MultisetSpec {
public:
    MultisetSpec(Alphabet alphabet, std::vector<int> multiplicities);

    /// Parses "rank:multiplicity" comma lists, e.g. "1:2,2:1,3:1". The
    /// alphabet size is the largest rank mentioned; absent ranks get
    /// multiplicity zero.
    static MultisetSpec parse(std::string_view text);
    /// The set case: [1^1, 2^1, ..., n^1].
    static MultisetSpec all_ones(int n);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const int> multiplicities() const noexcept { return multiplicities_; }
    long long cardinality() const noexcept { return cardinality_; }

    ContentVector to_content() const { return ContentVector(multiplicities_); }
    /// The lexicographically smallest arrangement: 1^m1 2^m2 ... n^mn.
    Word sorted_word() const;

    std::string str() const;

    bool operator==(const MultisetSpec&) const = default;

private:
    Alphabet alphabet_;
    std::vector<int> multiplicities_;
    long long cardinality_;
};

/// True unless w is a proper power u^n with n >= 2.
bool is_primitive(const Word& w);

/// All |w| rotations of w, in rotation-offset order starting from w itself.
std::vector<Word> conjugates(const Word& w);
bool is_conjugate(const Word& u, const Word& v);

ContentVector content(const Word& w, const Alphabet& alphabet);

/// N! / (m_1! ... m_n!), the number of distinct arrangements of the multiset.
BigInt count_permutations(const MultisetSpec& m);

}  // namespace coinwords
