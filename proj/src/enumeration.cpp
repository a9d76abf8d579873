#include "coinwords/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "coinwords/errors.hpp"

namespace coinwords {

MultisetPermutations::MultisetPermutations(const MultisetSpec& m) {
    if (m.cardinality() == 0) throw EmptyMultisetError{};
    current_ = m.sorted_word();
    letters_.assign(current_.letters().begin(), current_.letters().end());
}

bool MultisetPermutations::advance() {
    if (!std::next_permutation(letters_.begin(), letters_.end())) return false;
    current_ = Word(letters_);
    return true;
}

BigInt ParityCensus::counted() const { return even + odd; }

BigInt ParityCensus::tuples_of_length(int k) const {
    const auto it = by_k.find(k);
    return it == by_k.end() ? BigInt{} : it->second;
}

namespace {

void census_word(const Word& w, long long cardinality, ParityCensus& acc) {
    const std::vector<Word> factors = cfl_factorization(w);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        if (factors[i] == factors[i + 1]) {
            acc.excluded += 1;
            return;
        }
    }
    const int k = static_cast<int>(factors.size());
    acc.by_k[k] += 1;
    if ((cardinality - k) % 2 == 0)
        acc.even += 1;
    else
        acc.odd += 1;
}

void merge_census(ParityCensus& into, const ParityCensus& from) {
    into.even += from.even;
    into.odd += from.odd;
    into.excluded += from.excluded;
    for (const auto& [k, count] : from.by_k) into.by_k[k] += count;
}

}  // namespace

ParityCensus parity_census(const MultisetSpec& m, int threads) {
    if (threads < 1) throw std::invalid_argument("threads must be positive");
    const long long cardinality = m.cardinality();
    if (threads == 1) {
        ParityCensus census;
        MultisetPermutations stream(m);
        do {
            census_word(stream.current(), cardinality, census);
        } while (stream.advance());
        return census;
    }

    // Every worker steps through the whole stream but only classifies the
    // words of its residue class, so the merged result cannot depend on the
    // shard count.
    std::vector<ParityCensus> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int id = 0; id < threads; ++id) {
        workers.emplace_back([&m, cardinality, threads, id, &parts] {
            MultisetPermutations stream(m);
            long long index = 0;
            do {
                if (index % threads == id)
                    census_word(stream.current(), cardinality, parts[static_cast<std::size_t>(id)]);
                ++index;
            } while (stream.advance());
        });
    }
    for (auto& worker : workers) worker.join();
    ParityCensus census;
    for (const auto& part : parts) merge_census(census, part);
    return census;
}

BigInt b_count(const MultisetSpec& m, int k) {
    return parity_census(m).tuples_of_length(k);
}

namespace {

// True when the word is strictly smaller than all of its nontrivial
// rotations: the class representative of an aperiodic rotation class.
bool canonical_aperiodic(const std::vector<Letter>& word) {
    const std::size_t n = word.size();
    for (std::size_t offset = 1; offset < n; ++offset) {
        int cmp = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Letter a = word[i];
            const Letter b = word[(i + offset) % n];
            if (a != b) {
                cmp = a < b ? -1 : 1;
                break;
            }
        }
        if (cmp >= 0) return false;
    }
    return true;
}

struct Candidate {
    std::vector<Letter> word;
    std::vector<int> used;  // per-rank letter usage
};

void collect_candidates(const MultisetSpec& m, std::vector<Letter>& word, std::vector<int>& used,
                        std::vector<Candidate>& out) {
    if (!word.empty() && canonical_aperiodic(word)) out.push_back({word, used});
    if (static_cast<long long>(word.size()) == m.cardinality()) return;
    for (int rank = 1; rank <= m.alphabet().size(); ++rank) {
        const std::size_t slot = static_cast<std::size_t>(rank) - 1;
        if (used[slot] >= m.multiplicities()[slot]) continue;
        ++used[slot];
        word.push_back(rank);
        collect_candidates(m, word, used, out);
        word.pop_back();
        --used[slot];
    }
}

void count_sets(const std::vector<Candidate>& candidates, std::size_t from,
                std::vector<int>& remaining, long long remaining_total, int chosen,
                std::map<int, BigInt>& out) {
    if (remaining_total == 0) {
        out[chosen] += 1;
        return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
        const Candidate& candidate = candidates[i];
        if (static_cast<long long>(candidate.word.size()) > remaining_total) continue;
        bool fits = true;
        for (std::size_t slot = 0; slot < remaining.size(); ++slot) {
            if (candidate.used[slot] > remaining[slot]) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        for (std::size_t slot = 0; slot < remaining.size(); ++slot)
            remaining[slot] -= candidate.used[slot];
        count_sets(candidates, i + 1, remaining,
                   remaining_total - static_cast<long long>(candidate.word.size()), chosen + 1,
                   out);
        for (std::size_t slot = 0; slot < remaining.size(); ++slot)
            remaining[slot] += candidate.used[slot];
    }
}

}  // namespace

std::map<int, BigInt> b_count_oracle_all(const MultisetSpec& m) {
    if (m.cardinality() == 0) throw EmptyMultisetError{};
    std::vector<Candidate> candidates;
    std::vector<Letter> word;
    std::vector<int> used(static_cast<std::size_t>(m.alphabet().size()), 0);
    collect_candidates(m, word, used, candidates);

    std::map<int, BigInt> out;
    std::vector<int> remaining(m.multiplicities().begin(), m.multiplicities().end());
    count_sets(candidates, 0, remaining, m.cardinality(), 0, out);
    return out;
}

BigInt b_count_oracle(const MultisetSpec& m, int k) {
    const auto all = b_count_oracle_all(m);
    const auto it = all.find(k);
    return it == all.end() ? BigInt{} : it->second;
}

BigInt alternating_sum(const ParityCensus& census) {
    BigInt sum;
    for (const auto& [k, count] : census.by_k) {
        if (k % 2 == 0)
            sum += count;
        else
            sum -= count;
    }
    return sum;
}

BigInt alternating_sum(const MultisetSpec& m) { return alternating_sum(parity_census(m)); }

BigInt stirling_cycle(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(n) + 1);
    for (int row = 0; row <= n; ++row) {
        table[static_cast<std::size_t>(row)].resize(static_cast<std::size_t>(row) + 1);
        for (int col = 0; col <= row; ++col) {
            auto& cell = table[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (row == 0 && col == 0) {
                cell = BigInt{1};
            } else if (row == 0 || col == 0) {
                cell = BigInt{};
            } else {
                cell = table[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col) - 1];
                if (col <= row - 1) {
                    BigInt carry =
                        table[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col)];
                    carry.mul_small(static_cast<std::uint32_t>(row - 1));
                    cell += carry;
                }
            }
        }
    }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace coinwords
