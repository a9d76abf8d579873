#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coinwords/bigint.hpp"
#include "coinwords/lyndon.hpp"
#include "coinwords/words.hpp"

namespace coinwords {

/* The parity-flipping map on tuple-admitting words pairs every even word with
 * an odd one of the same content. It either splits the smallest factor by its
 * standard factorization or merges the two smallest factors, and the two
 * cases undo each other. */

/// True when the smallest factor l1 has length >= 2 and, writing
/// standard_factorization(l1) = (r1, s1), either the tuple is a singleton or
/// s1 comes strictly before the second factor. Exactly then does replacing l1
/// by (r1, s1) yield a valid tuple.
bool is_splittable(const LyndonTuple& t);

/// Splits or merges, whichever applies. Preserves content, flips parity, and
/// is an involution.
LyndonTuple toggle(const LyndonTuple& t);

/// Word-level toggle; nullopt when the word admits no tuple. Throws
/// TooShortError for words of fewer than two letters.
std::optional<Word> toggle(const Word& w);

struct InvolutionFailure {
    Word word;
    std::string check;   // which postcondition broke
    std::string detail;
};

struct InvolutionReport {
    MultisetSpec multiset;
    BigInt checked;
    BigInt excluded;
    std::vector<InvolutionFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Applies toggle to every tuple-admitting arrangement of m and records every
/// violation of the involution, parity-flip, content-preservation and
/// merge-refactorization postconditions. Failures are data, not exceptions.
InvolutionReport verify_involution(const MultisetSpec& m, int threads = 1);

}  // namespace coinwords
