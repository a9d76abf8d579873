#include "coinwords/involution.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "coinwords/enumeration.hpp"
#include "coinwords/errors.hpp"

namespace coinwords {

bool is_splittable(const LyndonTuple& t) {
    if (t.total_length() < 2) throw TooShortError("splittability needs at least two letters");
    const Word& head = t.factors().front();
    if (head.size() < 2) return false;
    if (t.size() == 1) return true;
    const auto [left, right] = standard_factorization(head);
    return right < t.factors()[1];
}

LyndonTuple toggle(const LyndonTuple& t) {
    if (t.total_length() < 2) throw TooShortError("toggle needs at least two letters");
    const auto factors = t.factors();
    std::vector<Word> image;
    if (is_splittable(t)) {
        auto [left, right] = standard_factorization(factors.front());
        image.reserve(factors.size() + 1);
        image.push_back(std::move(left));
        image.push_back(std::move(right));
        image.insert(image.end(), factors.begin() + 1, factors.end());
    } else {
        // Not splittable with at least two letters forces at least two
        // factors, so the merge below is always defined.
        image.reserve(factors.size() - 1);
        image.push_back(factors[0] + factors[1]);
        image.insert(image.end(), factors.begin() + 2, factors.end());
    }
    return LyndonTuple(std::move(image));
}

std::optional<Word> toggle(const Word& w) {
    if (w.size() < 2) throw TooShortError("toggle needs at least two letters");
    const auto t = lyndon_tuple(w);
    if (!t) return std::nullopt;
    return tuple_to_word(toggle(*t));
}

namespace {

void check_word(const MultisetSpec& m, const Word& w, InvolutionReport& report) {
    const auto t = lyndon_tuple(w);
    if (!t) {
        report.excluded += 1;
        return;
    }
    report.checked += 1;
    const auto fail = [&](const char* check, std::string detail) {
        report.failures.push_back({w, check, std::move(detail)});
    };
    try {
        const bool split = is_splittable(*t);
        const LyndonTuple image = toggle(*t);
        const Word image_word = tuple_to_word(image);
        if (content(image_word, m.alphabet()) != content(w, m.alphabet()))
            fail("content", "image " + image_word.str());
        if (image.parity() == t->parity())
            fail("parity_flip", "image " + image_word.str() + " has equal parity");
        const Word back = tuple_to_word(toggle(image));
        if (back != w) fail("involution", "came back as " + back.str());
        if (!split) {
            const auto [left, right] = standard_factorization(image.factors().front());
            if (left != t->factors()[0] || right != t->factors()[1])
                fail("merge_refactorization",
                     "merged factor splits as (" + left.str() + "," + right.str() + ")");
        }
    } catch (const std::exception& e) {
        fail("exception", e.what());
    }
}

}  // namespace

InvolutionReport verify_involution(const MultisetSpec& m, int threads) {
    if (m.cardinality() < 2) throw TooShortError("involution check needs cardinality >= 2");
    if (threads < 1) throw std::invalid_argument("threads must be positive");

    if (threads == 1) {
        InvolutionReport report{m, {}, {}, {}};
        MultisetPermutations stream(m);
        do {
            check_word(m, stream.current(), report);
        } while (stream.advance());
        return report;
    }

    std::vector<InvolutionReport> parts;
    parts.reserve(static_cast<std::size_t>(threads));
    for (int id = 0; id < threads; ++id) parts.push_back({m, {}, {}, {}});
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int id = 0; id < threads; ++id) {
        workers.emplace_back([&m, threads, id, &parts] {
            MultisetPermutations stream(m);
            long long index = 0;
            do {
                if (index % threads == id)
                    check_word(m, stream.current(), parts[static_cast<std::size_t>(id)]);
                ++index;
            } while (stream.advance());
        });
    }
    for (auto& worker : workers) worker.join();

    InvolutionReport report{m, {}, {}, {}};
    for (auto& part : parts) {
        report.checked += part.checked;
        report.excluded += part.excluded;
        std::move(part.failures.begin(), part.failures.end(), std::back_inserter(report.failures));
    }
    // Failure order must not depend on the shard count.
    std::sort(report.failures.begin(), report.failures.end(),
              [](const InvolutionFailure& a, const InvolutionFailure& b) {
                  if (a.word != b.word) return a.word < b.word;
                  return a.check < b.check;
              });
    return report;
}

}  // namespace coinwords
