#include "coinwords/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coinwords {

namespace {

int count_cycles(const std::vector<int>& images) {
    std::vector<bool> visited(images.size(), false);
    int count = 0;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (visited[start]) continue;
        ++count;
        std::size_t cur = start;
        while (!visited[cur]) {
            visited[cur] = true;
            cur = static_cast<std::size_t>(images[cur]) - 1;
        }
    }
    return count;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int value : images_) {
        if (value < 1 || value > size() || seen[static_cast<std::size_t>(value) - 1])
            throw std::invalid_argument("one-line form must be a bijection of 1..n");
        seen[static_cast<std::size_t>(value) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

std::string Permutation::str() const {
    std::ostringstream out;
    const bool compact = size() <= 9;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i && !compact) out << ',';
        out << images_[i];
    }
    return out.str();
}

CycleDecomposition::CycleDecomposition(std::vector<std::vector<int>> cycles)
    : cycles_(std::move(cycles)) {
    std::size_t n = 0;
    for (const auto& cycle : cycles_) {
        if (cycle.empty()) throw std::invalid_argument("cycles are non-empty");
        n += cycle.size();
    }
    std::vector<bool> seen(n, false);
    for (auto& cycle : cycles_) {
        for (int value : cycle) {
            if (value < 1 || static_cast<std::size_t>(value) > n ||
                seen[static_cast<std::size_t>(value) - 1])
                throw std::invalid_argument("cycles must partition 1..n");
            seen[static_cast<std::size_t>(value) - 1] = true;
        }
        const auto min_it = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), min_it, cycle.end());
    }
    std::sort(cycles_.begin(), cycles_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Permutation CycleDecomposition::to_permutation() const {
    std::size_t n = 0;
    for (const auto& cycle : cycles_) n += cycle.size();
    std::vector<int> images(n, 0);
    for (const auto& cycle : cycles_) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int from = cycle[i];
            const int to = cycle[(i + 1) % cycle.size()];
            images[static_cast<std::size_t>(from) - 1] = to;
        }
    }
    return Permutation(std::move(images));
}

std::string CycleDecomposition::str() const {
    std::size_t n = 0;
    for (const auto& cycle : cycles_) n += cycle.size();
    const bool compact = n <= 9;
    std::ostringstream out;
    for (const auto& cycle : cycles_) {
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i && !compact) out << ',';
            out << cycle[i];
        }
        out << ')';
    }
    return out.str();
}

CycleDecomposition cycles(const Permutation& t) {
    const int n = t.size();
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> out;
    // Scanning starts in increasing order, so each cycle begins at its
    // minimum and the cycles come out sorted by those minima.
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start) - 1]) continue;
        std::vector<int> cycle;
        int cur = start;
        while (!visited[static_cast<std::size_t>(cur) - 1]) {
            visited[static_cast<std::size_t>(cur) - 1] = true;
            cycle.push_back(cur);
            cur = t.image_of(cur);
        }
        out.push_back(std::move(cycle));
    }
    return CycleDecomposition(std::move(out));
}

int cycle_index(const Permutation& t) {
    return t.size() - static_cast<int>(cycles(t).cycle_count());
}

int inversions(const Permutation& t) {
    int count = 0;
    const auto images = t.images();
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            if (images[i] > images[j]) ++count;
        }
    }
    return count;
}

std::pair<BigInt, BigInt> even_odd_counts(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    BigInt even, odd;
    do {
        const int index = n - count_cycles(images);
        if (index % 2 == 0)
            even += 1;
        else
            odd += 1;
    } while (std::next_permutation(images.begin(), images.end()));
    return {even, odd};
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        fn(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace coinwords
