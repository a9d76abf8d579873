#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coinwords/bigint.hpp"

namespace coinwords {

/// A permutation of {1..n} in one-line form.
class Permutation {
public:
    /// images[i-1] is the image of i; must be a bijection of 1..n.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int image_of(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    std::span<const int> images() const noexcept { return images_; }

    std::string str() const;  // one-line form, "34152"

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Disjoint cycles in canonical form: every cycle starts at its minimum and
/// cycles are sorted by those minima.
class CycleDecomposition {
public:
    /// Cycles must partition 1..n; any rotation/order is accepted and
    /// normalized to canonical form.
    explicit CycleDecomposition(std::vector<std::vector<int>> cycles);

    std::size_t cycle_count() const noexcept { return cycles_.size(); }
    const std::vector<std::vector<int>>& cycles() const noexcept { return cycles_; }

    Permutation to_permutation() const;

    /// "(13)(245)" for n <= 9, comma-separated inside cycles otherwise.
    std::string str() const;

    bool operator==(const CycleDecomposition&) const = default;

private:
    std::vector<std::vector<int>> cycles_;
};

CycleDecomposition cycles(const Permutation& t);

/// n minus the number of cycles.
int cycle_index(const Permutation& t);

/// Number of pairs i < j with t(i) > t(j), counted directly.
int inversions(const Permutation& t);

/// Counts permutations of [n] by parity of the cycle index, sweeping all of
/// S_n. Returns {even, odd}.
std::pair<BigInt, BigInt> even_odd_counts(int n);

/// Calls fn with every permutation of [n] in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace coinwords
