#pragma once

#include <map>
#include <vector>

#include "coinwords/bigint.hpp"
#include "coinwords/lyndon.hpp"
#include "coinwords/words.hpp"

namespace coinwords {

/// Streams every arrangement of a multiset exactly once, in lexicographic
/// order, stepping in place. Memory use is flat in the number of words.
class MultisetPermutations {
public:
    explicit MultisetPermutations(const MultisetSpec& m);

    const Word& current() const noexcept { return current_; }
    /// Moves to the lexicographic successor; false once the stream is done.
    bool advance();

private:
    std::vector<Letter> letters_;
    Word current_;
};

/// Classification of every arrangement of one multiset by its Lyndon-tuple
/// length. Arrangements whose factorization repeats a factor carry no tuple
/// and are tallied as excluded.
struct ParityCensus {
    BigInt even;
    BigInt odd;
    BigInt excluded;
    std::map<int, BigInt> by_k;  // tuple length -> count

    /// even + odd.
    BigInt counted() const;
    /// Count of arrangements whose tuple has exactly k factors; 0 if none.
    BigInt tuples_of_length(int k) const;
};

/// Full sweep over the arrangements of m. With threads > 1 the word stream is
/// sharded across workers; the merged result is identical to the serial one.
ParityCensus parity_census(const MultisetSpec& m, int threads = 1);

/// Number of arrangements of m whose Lyndon tuple has exactly k factors;
/// equivalently, the number of k-element sets of distinct aperiodic necklaces
/// exhausting m.
BigInt b_count(const MultisetSpec& m, int k);

/// Independent recount of b_count by direct search over sets of canonical
/// rotation-class representatives; shares no factorization code with the
/// census path.
BigInt b_count_oracle(const MultisetSpec& m, int k);
/// All set sizes from one search: k -> count.
std::map<int, BigInt> b_count_oracle_all(const MultisetSpec& m);

/// Sum over k of (-1)^k times the k-set count; zero whenever the multiset has
/// more than one element.
BigInt alternating_sum(const MultisetSpec& m);
BigInt alternating_sum(const ParityCensus& census);

/// Permutations of [n] with exactly k cycles, via the standard recurrence
/// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
BigInt stirling_cycle(int n, int k);

}  // namespace coinwords
