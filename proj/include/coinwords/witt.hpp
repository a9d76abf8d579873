#pragma once

#include <functional>
#include <map>
#include <string>

#include "coinwords/bigint.hpp"
#include "coinwords/words.hpp"

namespace coinwords {

/// Exponent vectors share their representation with letter contents.
using ExponentVector = ContentVector;

/// Number-theoretic Moebius function, by trial factorization.
int moebius(long long d);

/// Number of Lyndon words with the given letter content, by the
/// Moebius-inverted necklace formula
///   (1/N) * sum over d | gcd(m) of mu(d) * (N/d)! / prod (m_i/d)!.
/// The division by N is exact and asserted.
BigInt lyndon_count(const ExponentVector& m);

/// Orders exponent vectors by total degree first, then by descending
/// lexicographic exponents, so iteration yields 1, x1, x2, x1^2, x1 x2, ...
struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse multivariate polynomial with exact integer coefficients, truncated
/// at a fixed total degree. Terms beyond the bound are dropped on entry, so
/// arithmetic stays exact in the truncated ring.
class TruncatedPolynomial {
public:
    using TermMap = std::map<ExponentVector, BigInt, GradedLexLess>;

    TruncatedPolynomial(int variable_count, int max_degree);
    static TruncatedPolynomial one(int variable_count, int max_degree);
    static TruncatedPolynomial variable(int index, int variable_count, int max_degree);

    int variable_count() const noexcept { return variable_count_; }
    int max_degree() const noexcept { return max_degree_; }
    const TermMap& terms() const noexcept { return terms_; }
    BigInt coefficient(const ExponentVector& exponents) const;

    /// Accumulates into the term, dropping zero results and anything past the
    /// degree bound.
    void add_term(const ExponentVector& exponents, const BigInt& value);

    TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) {
        a += b;
        return a;
    }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) {
        a -= b;
        return a;
    }
    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a,
                                         const TruncatedPolynomial& b);

    bool operator==(const TruncatedPolynomial&) const = default;

    /// Graded-lex rendering, "1 - x1 - x2".
    std::string str() const;

private:
    void check_compatible(const TruncatedPolynomial& other) const;

    int variable_count_;
    int max_degree_;
    TermMap terms_;
};

/// (1 - x^m)^count expanded binomially and truncated; only degree bound over
/// |m| terms survive, so large counts stay cheap.
TruncatedPolynomial one_minus_monomial_pow(const ExponentVector& m, const BigInt& count,
                                           int max_degree);

/// Calls fn with every exponent vector over variable_count variables whose
/// total degree lies in [min_total, max_total].
void for_each_content(int variable_count, int min_total, int max_total,
                      const std::function<void(const ExponentVector&)>& fn);

struct WittReport {
    int variable_count;
    int max_degree;
    TruncatedPolynomial lhs;  // product over contents of (1 - x^m)^{lyndon_count(m)}
    TruncatedPolynomial rhs;  // 1 - x1 - ... - xk
    bool equal;
};

/// Expands the Lyndon-word product up to the degree bound and compares it,
/// coefficient by coefficient, with 1 - x1 - ... - xk.
WittReport verify_witt(int variable_count, int max_degree);

struct WeightedSums {
    ContentVector content;  // shared by every arrangement of the multiset
    BigInt even_sum;        // coefficient of the weight monomial on the even side
    BigInt odd_sum;
    bool equal;
};

/// The weight monomial of an arrangement is fixed by its content, so weighted
/// sums over even and odd arrangements reduce to the two counts attached to
/// one monomial. Requires cardinality >= 2.
WeightedSums weighted_sums(const MultisetSpec& m);

}  // namespace coinwords
