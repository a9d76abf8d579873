#include "coinwords/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coinwords/errors.hpp"

namespace coinwords {

namespace {

// Parses an unsigned decimal in text[begin, end); reports errors at absolute
// positions within the surrounding input.
long parse_number(std::string_view text, std::size_t begin, std::size_t end) {
    if (begin == end) throw ParseError("expected a number", begin);
    long value = 0;
    for (std::size_t i = begin; i < end; ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') throw ParseError("expected a digit", i);
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw ParseError("number out of range", begin);
    }
    return value;
}

}  // namespace

Alphabet::Alphabet(int size) : size_(size) {
    if (size < 1) throw std::invalid_argument("alphabet needs at least one letter");
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (Letter letter : letters_) {
        if (letter < 1) throw std::invalid_argument("letters are ranks starting at 1");
    }
}

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    if (text.find(',') == std::string_view::npos) {
        letters.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c < '1' || c > '9') throw ParseError("expected a rank digit 1-9", i);
            letters.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = text.find(',', pos);
            const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
            const long rank = parse_number(text, pos, end);
            if (rank < 1) throw ParseError("ranks start at 1", pos);
            letters.push_back(static_cast<Letter>(rank));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
            if (pos == text.size()) throw ParseError("trailing comma", comma);
        }
    }
    return Word(std::move(letters));
}

Letter Word::max_letter() const noexcept {
    Letter max = 0;
    for (Letter letter : letters_) max = std::max(max, letter);
    return max;
}

Word Word::rotated(std::size_t offset) const {
    if (empty()) throw EmptyWordError{};
    offset %= size();
    std::vector<Letter> out;
    out.reserve(size());
    out.insert(out.end(), letters_.begin() + offset, letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + offset);
    return Word(std::move(out));
}

Word Word::prefix(std::size_t length) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + length));
}

Word Word::suffix_from(std::size_t start) const {
    return Word(std::vector<Letter>(letters_.begin() + start, letters_.end()));
}

std::string Word::str() const {
    std::ostringstream out;
    if (max_letter() <= 9) {
        for (Letter letter : letters_) out << letter;
    } else {
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) out << ',';
            out << letters_[i];
        }
    }
    return out.str();
}

Word operator+(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

LexResult lex_compare(const Word& u, const Word& v) {
    const std::size_t common = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (u[i] != v[i]) return {u[i] < v[i] ? Ordering::Less : Ordering::Greater, false};
    }
    if (u.size() == v.size()) return {Ordering::Equal, false};
    return {u.size() < v.size() ? Ordering::Less : Ordering::Greater, true};
}

bool lex_less(const Word& u, const Word& v) {
    return lex_compare(u, v).order == Ordering::Less;
}

bool lex_less_no_prefix(const Word& u, const Word& v) {
    const LexResult r = lex_compare(u, v);
    return r.order == Ordering::Less && !r.proper_prefix;
}

ContentVector::ContentVector(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0) throw std::invalid_argument("counts are non-negative");
    }
}

long long ContentVector::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), 0ll);
}

int ContentVector::count_of(Letter rank) const {
    if (rank < 1 || rank > size()) throw std::invalid_argument("rank outside alphabet");
    return counts_[static_cast<std::size_t>(rank) - 1];
}

ContentVector ContentVector::operator+(const ContentVector& other) const {
    if (size() != other.size()) throw std::invalid_argument("content sizes differ");
    std::vector<int> out(counts_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.counts_[i];
    return ContentVector(std::move(out));
}

ContentVector ContentVector::scaled(int factor) const {
    if (factor < 0) throw std::invalid_argument("scale factor is non-negative");
    std::vector<int> out(counts_);
    for (int& c : out) c *= factor;
    return ContentVector(std::move(out));
}

std::string ContentVector::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out << ',';
        out << counts_[i];
    }
    out << ')';
    return out.str();
}

MultisetSpec::MultisetSpec(Alphabet alphabet, std::vector<int> multiplicities)
    : alphabet_(alphabet), multiplicities_(std::move(multiplicities)) {
    if (static_cast<int>(multiplicities_.size()) != alphabet_.size())
        throw std::invalid_argument("one multiplicity per alphabet letter");
    cardinality_ = 0;
    for (int m : multiplicities_) {
        if (m < 0) throw std::invalid_argument("multiplicities are non-negative");
        cardinality_ += m;
    }
}

MultisetSpec MultisetSpec::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty multiset", 0);
    std::map<long, long> entries;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        const std::size_t colon = text.find(':', pos);
        if (colon == std::string_view::npos || colon >= end)
            throw ParseError("expected rank:multiplicity", pos);
        const long rank = parse_number(text, pos, colon);
        const long multiplicity = parse_number(text, colon + 1, end);
        if (rank < 1) throw ParseError("ranks start at 1", pos);
        if (entries.contains(rank)) throw ParseError("duplicate rank", pos);
        entries[rank] = multiplicity;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw ParseError("trailing comma", comma);
    }
    const int size = static_cast<int>(entries.rbegin()->first);
    std::vector<int> multiplicities(static_cast<std::size_t>(size), 0);
    for (const auto& [rank, multiplicity] : entries)
        multiplicities[static_cast<std::size_t>(rank) - 1] = static_cast<int>(multiplicity);
    return MultisetSpec(Alphabet(size), std::move(multiplicities));
}

MultisetSpec MultisetSpec::all_ones(int n) {
    return MultisetSpec(Alphabet(n), std::vector<int>(static_cast<std::size_t>(n), 1));
}

Word MultisetSpec::sorted_word() const {
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(cardinality_));
    for (int rank = 1; rank <= alphabet_.size(); ++rank) {
        for (int i = 0; i < multiplicities_[static_cast<std::size_t>(rank) - 1]; ++i)
            letters.push_back(rank);
    }
    return Word(std::move(letters));
}

std::string MultisetSpec::str() const {
    std::ostringstream out;
    for (int rank = 1; rank <= alphabet_.size(); ++rank) {
        if (rank > 1) out << ',';
        out << rank << ':' << multiplicities_[static_cast<std::size_t>(rank) - 1];
    }
    return out.str();
}

bool is_primitive(const Word& w) {
    if (w.empty()) throw EmptyWordError{};
    const std::size_t n = w.size();
    for (std::size_t period = 1; period < n; ++period) {
        if (n % period != 0) continue;
        bool repeats = true;
        for (std::size_t i = period; i < n; ++i) {
            if (w[i] != w[i - period]) {
                repeats = false;
                break;
            }
        }
        if (repeats) return false;
    }
    return true;
}

std::vector<Word> conjugates(const Word& w) {
    if (w.empty()) throw EmptyWordError{};
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t offset = 0; offset < w.size(); ++offset) out.push_back(w.rotated(offset));
    return out;
}

bool is_conjugate(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw EmptyWordError{};
    if (u.size() != v.size()) return false;
    for (std::size_t offset = 0; offset < u.size(); ++offset) {
        if (u.rotated(offset) == v) return true;
    }
    return false;
}

ContentVector content(const Word& w, const Alphabet& alphabet) {
    std::vector<int> counts(static_cast<std::size_t>(alphabet.size()), 0);
    for (Letter letter : w.letters()) {
        if (!alphabet.contains(letter)) throw std::invalid_argument("letter outside alphabet");
        ++counts[static_cast<std::size_t>(letter) - 1];
    }
    return ContentVector(std::move(counts));
}

BigInt count_permutations(const MultisetSpec& m) { return multinomial(m.multiplicities()); }

}  // namespace coinwords
