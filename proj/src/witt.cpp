#include "coinwords/witt.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coinwords/enumeration.hpp"
#include "coinwords/errors.hpp"

namespace coinwords {

int moebius(long long d) {
    if (d < 1) throw std::invalid_argument("moebius needs a positive argument");
    int prime_count = 0;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        d /= p;
        if (d % p == 0) return 0;
        ++prime_count;
    }
    if (d > 1) ++prime_count;
    return prime_count % 2 == 0 ? 1 : -1;
}

BigInt lyndon_count(const ExponentVector& m) {
    const long long total = m.total();
    if (total < 1) throw std::invalid_argument("content must have positive total degree");
    long long g = 0;
    for (int c : m.counts()) g = std::gcd(g, static_cast<long long>(c));
    BigInt sum;
    for (long long d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        const int mu = moebius(d);
        if (mu == 0) continue;
        std::vector<int> scaled;
        scaled.reserve(m.counts().size());
        for (int c : m.counts()) scaled.push_back(c / static_cast<int>(d));
        const BigInt term = multinomial(scaled);
        if (mu == 1)
            sum += term;
        else
            sum -= term;
    }
    sum.div_small_exact(static_cast<std::uint32_t>(total));
    return sum;
}

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const long long da = a.total();
    const long long db = b.total();
    if (da != db) return da < db;
    // Equal degree: larger leading exponents print first.
    return std::lexicographical_compare(b.counts().begin(), b.counts().end(), a.counts().begin(),
                                        a.counts().end());
}

TruncatedPolynomial::TruncatedPolynomial(int variable_count, int max_degree)
    : variable_count_(variable_count), max_degree_(max_degree) {
    if (variable_count < 1) throw std::invalid_argument("need at least one variable");
    if (max_degree < 0) throw std::invalid_argument("degree bound is non-negative");
}

TruncatedPolynomial TruncatedPolynomial::one(int variable_count, int max_degree) {
    TruncatedPolynomial p(variable_count, max_degree);
    p.add_term(ExponentVector(std::vector<int>(static_cast<std::size_t>(variable_count), 0)),
               BigInt{1});
    return p;
}

TruncatedPolynomial TruncatedPolynomial::variable(int index, int variable_count, int max_degree) {
    if (index < 1 || index > variable_count) throw std::invalid_argument("variable index");
    TruncatedPolynomial p(variable_count, max_degree);
    std::vector<int> exponents(static_cast<std::size_t>(variable_count), 0);
    exponents[static_cast<std::size_t>(index) - 1] = 1;
    p.add_term(ExponentVector(std::move(exponents)), BigInt{1});
    return p;
}

BigInt TruncatedPolynomial::coefficient(const ExponentVector& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? BigInt{} : it->second;
}

void TruncatedPolynomial::add_term(const ExponentVector& exponents, const BigInt& value) {
    if (exponents.size() != variable_count_)
        throw VariableCountMismatchError{};
    if (value.is_zero() || exponents.total() > max_degree_) return;
    auto [it, inserted] = terms_.try_emplace(exponents, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TruncatedPolynomial::check_compatible(const TruncatedPolynomial& other) const {
    if (variable_count_ != other.variable_count_) throw VariableCountMismatchError{};
    if (max_degree_ != other.max_degree_) throw DegreeMismatchError{};
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other) {
    check_compatible(other);
    for (const auto& [exponents, value] : other.terms_) add_term(exponents, value);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& other) {
    check_compatible(other);
    for (const auto& [exponents, value] : other.terms_) add_term(exponents, -value);
    return *this;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    a.check_compatible(b);
    TruncatedPolynomial result(a.variable_count_, a.max_degree_);
    for (const auto& [ea, ca] : a.terms_) {
        const long long da = ea.total();
        for (const auto& [eb, cb] : b.terms_) {
            if (da + eb.total() > a.max_degree_) continue;
            result.add_term(ea + eb, ca * cb);
        }
    }
    return result;
}

std::string TruncatedPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exponents, value] : terms_) {
        const bool negative = value.signum() < 0;
        const BigInt magnitude = negative ? -value : value;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string monomial;
        for (int var = 1; var <= variable_count_; ++var) {
            const int e = exponents.count_of(var);
            if (e == 0) continue;
            if (!monomial.empty()) monomial += ' ';
            monomial += 'x' + std::to_string(var);
            if (e > 1) monomial += '^' + std::to_string(e);
        }
        if (monomial.empty()) {
            out << magnitude.str();
        } else {
            if (magnitude != BigInt{1}) out << magnitude.str() << ' ';
            out << monomial;
        }
    }
    return out.str();
}

TruncatedPolynomial one_minus_monomial_pow(const ExponentVector& m, const BigInt& count,
                                           int max_degree) {
    const long long step = m.total();
    if (step < 1) throw std::invalid_argument("monomial must have positive degree");
    TruncatedPolynomial p(m.size(), max_degree);
    for (long long j = 0; j * step <= max_degree; ++j) {
        BigInt c = BigInt::binomial(count, j);
        if (c.is_zero()) break;  // j exceeded the exponent
        if (j % 2 == 1) c = -c;
        p.add_term(m.scaled(static_cast<int>(j)), c);
    }
    return p;
}

namespace {

void contents_rec(int remaining_vars, int max_total, std::vector<int>& acc,
                  const std::function<void(const ExponentVector&)>& fn) {
    if (remaining_vars == 0) {
        fn(ExponentVector(acc));
        return;
    }
    for (int c = 0; c <= max_total; ++c) {
        acc.push_back(c);
        contents_rec(remaining_vars - 1, max_total - c, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_content(int variable_count, int min_total, int max_total,
                      const std::function<void(const ExponentVector&)>& fn) {
    if (variable_count < 1) throw std::invalid_argument("need at least one variable");
    std::vector<int> acc;
    acc.reserve(static_cast<std::size_t>(variable_count));
    contents_rec(variable_count, max_total, acc,
                 [&](const ExponentVector& m) {
                     if (m.total() >= min_total) fn(m);
                 });
}

WittReport verify_witt(int variable_count, int max_degree) {
    if (variable_count < 1 || max_degree < 1)
        throw std::invalid_argument("need at least one variable and degree");
    TruncatedPolynomial lhs = TruncatedPolynomial::one(variable_count, max_degree);
    for_each_content(variable_count, 1, max_degree, [&](const ExponentVector& m) {
        const BigInt count = lyndon_count(m);
        if (!count.is_zero()) lhs = lhs * one_minus_monomial_pow(m, count, max_degree);
    });
    TruncatedPolynomial rhs = TruncatedPolynomial::one(variable_count, max_degree);
    for (int var = 1; var <= variable_count; ++var)
        rhs -= TruncatedPolynomial::variable(var, variable_count, max_degree);
    const bool equal = lhs == rhs;
    return {variable_count, max_degree, std::move(lhs), std::move(rhs), equal};
}

WeightedSums weighted_sums(const MultisetSpec& m) {
    if (m.cardinality() < 2) throw TooShortError("weighted sums need cardinality >= 2");
    const ParityCensus census = parity_census(m);
    return {m.to_content(), census.even, census.odd, census.even == census.odd};
}

}  // namespace coinwords
