#pragma once

// Test-only brute-force oracles. Where a check demands independence from the
// production code path (factorization uniqueness, necklace counts, Moebius
// values), the reference computation lives here and nowhere else.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "coinwords/lyndon.hpp"
#include "coinwords/words.hpp"

namespace oracles {

inline coinwords::Word W(const char* text) { return coinwords::Word::parse(text); }

inline void for_each_word_of_length(int alphabet, int length,
                                    const std::function<void(const coinwords::Word&)>& fn) {
    std::vector<coinwords::Letter> letters(static_cast<std::size_t>(length), 1);
    while (true) {
        fn(coinwords::Word(letters));
        int pos = length - 1;
        while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == alphabet) {
            letters[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++letters[static_cast<std::size_t>(pos)];
    }
}

inline void for_each_word_up_to(int alphabet, int max_length,
                                const std::function<void(const coinwords::Word&)>& fn) {
    for (int length = 1; length <= max_length; ++length)
        for_each_word_of_length(alphabet, length, fn);
}

inline std::vector<coinwords::Word> lyndon_words_up_to(int alphabet, int max_length) {
    std::vector<coinwords::Word> out;
    for_each_word_up_to(alphabet, max_length, [&](const coinwords::Word& w) {
        if (coinwords::is_lyndon(w)) out.push_back(w);
    });
    return out;
}

inline coinwords::Word subword(const coinwords::Word& w, std::size_t from, std::size_t to) {
    const auto s = w.letters();
    return coinwords::Word(std::vector<coinwords::Letter>(
        s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(to)));
}

namespace detail {
inline void cfl_decompositions_rec(const coinwords::Word& w, std::size_t from,
                                   const std::optional<coinwords::Word>& bound,
                                   std::vector<coinwords::Word>& acc,
                                   std::vector<std::vector<coinwords::Word>>& out) {
    if (from == w.size()) {
        out.push_back(acc);
        return;
    }
    for (std::size_t end = from + 1; end <= w.size(); ++end) {
        coinwords::Word factor = subword(w, from, end);
        if (!coinwords::is_lyndon(factor)) continue;
        if (bound && *bound < factor) continue;  // factors may not increase
        acc.push_back(factor);
        cfl_decompositions_rec(w, end, acc.back(), acc, out);
        acc.pop_back();
    }
}
}  // namespace detail

/// Every decomposition of w into a non-increasing sequence of Lyndon words,
/// found by trying all split points.
inline std::vector<std::vector<coinwords::Word>> all_cfl_decompositions(const coinwords::Word& w) {
    std::vector<std::vector<coinwords::Word>> out;
    std::vector<coinwords::Word> acc;
    detail::cfl_decompositions_rec(w, 0, std::nullopt, acc, out);
    return out;
}

namespace detail {
inline void compositions_rec(long long remaining, int parts,
                             std::vector<int>& acc,
                             const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        if (remaining >= 1) {
            acc.push_back(static_cast<int>(remaining));
            fn(acc);
            acc.pop_back();
        }
        return;
    }
    for (long long first = 1; first + (parts - 1) <= remaining; ++first) {
        acc.push_back(static_cast<int>(first));
        compositions_rec(remaining - first, parts - 1, acc, fn);
        acc.pop_back();
    }
}
}  // namespace detail

/// Every multiset of the given cardinality over alphabets of size 1 up to
/// max_alphabet, with every letter actually occurring.
inline void for_each_multiset(int max_alphabet, long long cardinality,
                              const std::function<void(const coinwords::MultisetSpec&)>& fn) {
    for (int n = 1; n <= max_alphabet; ++n) {
        if (cardinality < n) continue;
        std::vector<int> acc;
        detail::compositions_rec(cardinality, n, acc, [&](const std::vector<int>& parts) {
            fn(coinwords::MultisetSpec(coinwords::Alphabet(n), parts));
        });
    }
}

/// Cycle-count census of S_n by direct sweep: k -> number of permutations
/// with exactly k cycles.
inline std::map<int, long long> cycle_count_census(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::map<int, long long> census;
    do {
        std::vector<bool> visited(static_cast<std::size_t>(n), false);
        int cycles = 0;
        for (int start = 0; start < n; ++start) {
            if (visited[static_cast<std::size_t>(start)]) continue;
            ++cycles;
            int cur = start;
            while (!visited[static_cast<std::size_t>(cur)]) {
                visited[static_cast<std::size_t>(cur)] = true;
                cur = images[static_cast<std::size_t>(cur)] - 1;
            }
        }
        ++census[cycles];
    } while (std::next_permutation(images.begin(), images.end()));
    return census;
}

/// Moebius values 1..limit via the divisor-sum identity, no factorization.
inline std::vector<int> moebius_sieve(int limit) {
    std::vector<int> mu(static_cast<std::size_t>(limit) + 1, 0);
    mu[1] = 1;
    for (int i = 1; i <= limit; ++i) {
        for (int j = 2 * i; j <= limit; j += i) mu[static_cast<std::size_t>(j)] -= mu[static_cast<std::size_t>(i)];
    }
    return mu;
}

}  // namespace oracles
