#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "coinwords/enumeration.hpp"
#include "coinwords/errors.hpp"
#include "coinwords/witt.hpp"
#include "oracles.hpp"

using namespace coinwords;

namespace {

ExponentVector E(std::vector<int> counts) { return ExponentVector(std::move(counts)); }

// counts Lyndon words of exactly this content by enumerating the multiset
BigInt lyndon_count_by_enumeration(const ExponentVector& m) {
    const MultisetSpec multiset(Alphabet(m.size()),
                            std::vector<int>(m.counts().begin(), m.counts().end()));
    BigInt count;
    MultisetPermutations stream(multiset);
    do {
        if (is_lyndon(stream.current())) count += 1;
    } while (stream.advance());
    return count;
}

TruncatedPolynomial random_sparse(std::mt19937& rng, int vars, int degree) {
    TruncatedPolynomial p(vars, degree);
    std::uniform_int_distribution<int> exponent(0, degree);
    std::uniform_int_distribution<int> coefficient(-9, 9);
    std::uniform_int_distribution<int> term_count(1, 6);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exponents;
        for (int v = 0; v < vars; ++v) exponents.push_back(exponent(rng));
        p.add_term(E(std::move(exponents)), BigInt{coefficient(rng)});
    }
    return p;
}

}  // namespace

TEST_CASE("moebius values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(moebius(49) == 0);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);

    const auto sieve = oracles::moebius_sieve(1000);
    for (int d = 1; d <= 1000; ++d) CHECK(moebius(d) == sieve[static_cast<std::size_t>(d)]);
}

TEST_CASE("lyndon word counts of the worked examples") {
    CHECK(lyndon_count(E({1, 1})) == BigInt{1});     // 12
    CHECK(lyndon_count(E({2, 1})) == BigInt{1});     // 112
    CHECK(lyndon_count(E({1, 1, 1})) == BigInt{2});  // 123, 132
    CHECK(lyndon_count(E({3, 0})).is_zero());
    CHECK(lyndon_count(E({1})) == BigInt{1});
    CHECK(lyndon_count(E({2, 2})) == BigInt{1});     // 1122
    CHECK_THROWS_AS(lyndon_count(E({0, 0})), std::invalid_argument);
}

TEST_CASE("closed-form count equals enumeration on every small content") {
    for (int vars = 1; vars <= 3; ++vars) {
        for_each_content(vars, 1, 6, [&](const ExponentVector& m) {
            CHECK(lyndon_count(m) == lyndon_count_by_enumeration(m));
        });
    }
}

TEST_CASE("counts of fixed total degree add up to the per-length count") {
    for (int vars = 2; vars <= 3; ++vars) {
        const int max_length = vars == 2 ? 8 : 6;
        for (int length = 1; length <= max_length; ++length) {
            BigInt by_content;
            for_each_content(vars, length, length,
                             [&](const ExponentVector& m) { by_content += lyndon_count(m); });
            long long by_words = 0;
            oracles::for_each_word_of_length(vars, length, [&](const Word& w) {
                if (is_lyndon(w)) ++by_words;
            });
            CHECK(by_content == BigInt{by_words});
        }
    }
}

TEST_CASE("polynomial basics") {
    const int D = 2;
    TruncatedPolynomial a = TruncatedPolynomial::one(2, D);
    a -= TruncatedPolynomial::variable(1, 2, D);
    TruncatedPolynomial b = TruncatedPolynomial::one(2, D);
    b -= TruncatedPolynomial::variable(2, 2, D);
    const TruncatedPolynomial product = a * b;
    CHECK(product.coefficient(E({0, 0})) == BigInt{1});
    CHECK(product.coefficient(E({1, 0})) == BigInt{-1});
    CHECK(product.coefficient(E({0, 1})) == BigInt{-1});
    CHECK(product.coefficient(E({1, 1})) == BigInt{1});
    CHECK(product.terms().size() == 4);
    CHECK(product.str() == "1 - x1 - x2 + x1 x2");

    CHECK(one_minus_monomial_pow(E({1, 1}), BigInt{1}, 1) == TruncatedPolynomial::one(2, 1));
    const TruncatedPolynomial square = one_minus_monomial_pow(E({1}), BigInt{2}, 2);
    CHECK(square.coefficient(E({0})) == BigInt{1});
    CHECK(square.coefficient(E({1})) == BigInt{-2});
    CHECK(square.coefficient(E({2})) == BigInt{1});
    CHECK(square.str() == "1 - 2 x1 + x1^2");

    // truncation drops what overflows the degree bound
    const TruncatedPolynomial chopped = one_minus_monomial_pow(E({1, 1}), BigInt{2}, 3);
    CHECK(chopped.coefficient(E({1, 1})) == BigInt{-2});
    CHECK(chopped.coefficient(E({2, 2})).is_zero());

    CHECK_THROWS_AS(TruncatedPolynomial::one(2, 3) * TruncatedPolynomial::one(2, 4),
                    DegreeMismatchError);
    CHECK_THROWS_AS(TruncatedPolynomial::one(2, 3) * TruncatedPolynomial::one(3, 3),
                    VariableCountMismatchError);
}

TEST_CASE("ring laws on random sparse polynomials") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 3);
        const int degree = 3 + static_cast<int>(rng() % 3);
        const auto a = random_sparse(rng, vars, degree);
        const auto b = random_sparse(rng, vars, degree);
        const auto c = random_sparse(rng, vars, degree);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * TruncatedPolynomial::one(vars, degree) == a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("witt product telescopes to one minus the sum of the variables") {
    for (int degree = 1; degree <= 6; ++degree) {
        const auto one_var = verify_witt(1, degree);
        CHECK(one_var.equal);
        CHECK(one_var.lhs.str() == "1 - x1");
    }

    const auto two_vars = verify_witt(2, 3);
    CHECK(two_vars.equal);
    CHECK(two_vars.rhs.str() == "1 - x1 - x2");

    for (int degree = 1; degree <= 6; ++degree) CHECK(verify_witt(2, degree).equal);
    for (int degree = 1; degree <= 5; ++degree) CHECK(verify_witt(3, degree).equal);
}

TEST_CASE("product coefficients recover the alternating sums") {
    const int vars = 3;
    const int degree = 6;
    const auto witt = verify_witt(vars, degree);
    REQUIRE(witt.equal);
    for_each_content(vars, 1, degree, [&](const ExponentVector& m) {
        const MultisetSpec multiset(Alphabet(vars),
                                std::vector<int>(m.counts().begin(), m.counts().end()));
        CHECK(witt.lhs.coefficient(m) == alternating_sum(multiset));
        if (m.total() == 1) CHECK(witt.lhs.coefficient(m) == BigInt{-1});
        if (m.total() > 1) CHECK(witt.lhs.coefficient(m).is_zero());
    });
}

TEST_CASE("weighted sums per content class") {
    const auto a = weighted_sums(MultisetSpec::parse("1:2,2:1"));
    CHECK(a.content == ContentVector({2, 1}));
    CHECK(a.even_sum == BigInt{1});
    CHECK(a.odd_sum == BigInt{1});
    CHECK(a.equal);

    const auto b = weighted_sums(MultisetSpec::parse("1:1,2:1"));
    CHECK(b.even_sum == BigInt{1});
    CHECK(b.odd_sum == BigInt{1});
    CHECK(b.equal);

    CHECK_THROWS_AS(weighted_sums(MultisetSpec::parse("1:1")), TooShortError);

    for (long long cardinality = 2; cardinality <= 6; ++cardinality) {
        oracles::for_each_multiset(3, cardinality, [&](const MultisetSpec& m) {
            CHECK(weighted_sums(m).equal);
        });
    }
}
