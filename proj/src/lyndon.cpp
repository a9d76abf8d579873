#include "coinwords/lyndon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "coinwords/errors.hpp"

namespace coinwords {

const char* to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

bool is_lyndon(const Word& w) {
    if (w.empty()) throw EmptyWordError{};
    const auto s = w.letters();
    const std::size_t n = s.size();
    for (std::size_t offset = 1; offset < n; ++offset) {
        // w must be strictly smaller than this rotation; equality means w is
        // periodic, a smaller rotation means w is not the class minimum.
        int cmp = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Letter a = s[i];
            const Letter b = s[(i + offset) % n];
            if (a != b) {
                cmp = a < b ? -1 : 1;
                break;
            }
        }
        if (cmp >= 0) return false;
    }
    return true;
}

std::vector<Word> cfl_factorization(const Word& w) {
    if (w.empty()) throw EmptyWordError{};
    const auto s = w.letters();
    const std::size_t n = s.size();
    std::vector<Word> factors;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        std::size_t k = i;
        while (j < n && s[k] <= s[j]) {
            if (s[k] < s[j])
                k = i;
            else
                ++k;
            ++j;
        }
        const std::size_t length = j - k;
        while (i <= k) {
            factors.push_back(Word(std::vector<Letter>(s.begin() + static_cast<std::ptrdiff_t>(i),
                                                       s.begin() + static_cast<std::ptrdiff_t>(i + length))));
            i += length;
        }
    }
    return factors;
}

std::pair<Word, Word> standard_factorization(const Word& lyndon_word) {
    if (lyndon_word.empty()) throw EmptyWordError{};
    if (!is_lyndon(lyndon_word)) throw NotLyndonError(lyndon_word.str());
    if (lyndon_word.size() == 1) throw SingleLetterError{};

    // All proper suffixes are distinct, so the minimum is unique.
    std::size_t best = 1;
    Word best_suffix = lyndon_word.suffix_from(1);
    for (std::size_t start = 2; start < lyndon_word.size(); ++start) {
        Word candidate = lyndon_word.suffix_from(start);
        if (candidate < best_suffix) {
            best = start;
            best_suffix = std::move(candidate);
        }
    }
    Word left = lyndon_word.prefix(best);
    if (!is_lyndon(left) || !is_lyndon(best_suffix) || !(left < lyndon_word) ||
        !(lyndon_word < best_suffix))
        throw std::logic_error("standard factorization postcondition violated");
    return {std::move(left), std::move(best_suffix)};
}

LyndonTuple::LyndonTuple(std::vector<Word> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("a tuple has at least one factor");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (!is_lyndon(factors_[i])) throw NotLyndonError(factors_[i].str());
        if (i > 0 && !(factors_[i - 1] < factors_[i]))
            throw std::invalid_argument("factors must be distinct and increasing");
    }
}

std::size_t LyndonTuple::total_length() const noexcept {
    std::size_t total = 0;
    for (const Word& factor : factors_) total += factor.size();
    return total;
}

int LyndonTuple::index() const noexcept {
    return static_cast<int>(total_length()) - static_cast<int>(size());
}

Parity LyndonTuple::parity() const noexcept {
    return index() % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::string LyndonTuple::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << ',';
        out << factors_[i].str();
    }
    out << ')';
    return out.str();
}

std::optional<LyndonTuple> lyndon_tuple(const Word& w) {
    std::vector<Word> factors = cfl_factorization(w);
    // Non-increasing order makes repeated factors adjacent.
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        if (factors[i] == factors[i + 1]) return std::nullopt;
    }
    std::reverse(factors.begin(), factors.end());
    return LyndonTuple(std::move(factors));
}

Word tuple_to_word(const LyndonTuple& t) {
    std::vector<Letter> letters;
    const auto factors = t.factors();
    for (std::size_t i = factors.size(); i-- > 0;) {
        letters.insert(letters.end(), factors[i].letters().begin(), factors[i].letters().end());
    }
    return Word(std::move(letters));
}

std::optional<int> lyndon_index(const Word& w) {
    const auto t = lyndon_tuple(w);
    if (!t) return std::nullopt;
    return t->index();
}

std::optional<Parity> parity(const Word& w) {
    const auto t = lyndon_tuple(w);
    if (!t) return std::nullopt;
    return t->parity();
}

}  // namespace coinwords
