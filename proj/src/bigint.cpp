#include "coinwords/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace coinwords {

namespace {
constexpr std::uint32_t kBase = 1'000'000'000u;
constexpr std::size_t kBaseDigits = 9;
}  // namespace

BigInt::BigInt(long long value) : negative_(value < 0) {
    auto magnitude = static_cast<unsigned long long>(value);
    if (negative_) magnitude = 0ull - magnitude;
    while (magnitude != 0) {
        digits_.push_back(static_cast<std::uint32_t>(magnitude % kBase));
        magnitude /= kBase;
    }
}

int BigInt::signum() const noexcept {
    if (digits_.empty()) return 0;
    return negative_ ? -1 : 1;
}

void BigInt::trim() {
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
    if (digits_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) noexcept {
    if (a.digits_.size() != b.digits_.size())
        return a.digits_.size() < b.digits_.size() ? -1 : 1;
    for (std::size_t i = a.digits_.size(); i-- > 0;) {
        if (a.digits_[i] != b.digits_[i]) return a.digits_[i] < b.digits_[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_magnitude(std::vector<std::uint32_t>& acc,
                           const std::vector<std::uint32_t>& other) {
    const std::size_t n = std::max(acc.size(), other.size());
    acc.resize(n, 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(acc[i]) + carry +
                            (i < other.size() ? other[i] : 0);
        acc[i] = static_cast<std::uint32_t>(cur % kBase);
        carry = static_cast<std::uint32_t>(cur / kBase);
    }
    if (carry) acc.push_back(carry);
}

// requires magnitude(acc) >= magnitude(other)
void BigInt::sub_magnitude(std::vector<std::uint32_t>& acc,
                           const std::vector<std::uint32_t>& other) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(acc[i]) - borrow -
                           (i < other.size() ? static_cast<std::int64_t>(other[i]) : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        acc[i] = static_cast<std::uint32_t>(cur);
    }
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.digits_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& other) {
    if (negative_ == other.negative_) {
        add_magnitude(digits_, other.digits_);
    } else {
        const int cmp = compare_magnitude(*this, other);
        if (cmp == 0) {
            digits_.clear();
            negative_ = false;
            return *this;
        }
        if (cmp > 0) {
            sub_magnitude(digits_, other.digits_);
        } else {
            std::vector<std::uint32_t> result = other.digits_;
            sub_magnitude(result, digits_);
            digits_ = std::move(result);
            negative_ = other.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& other) { return *this += -other; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt result;
    if (a.is_zero() || b.is_zero()) return result;
    result.digits_.assign(a.digits_.size() + b.digits_.size(), 0);
    for (std::size_t i = 0; i < a.digits_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.digits_.size() || carry; ++j) {
            std::uint64_t cur = result.digits_[i + j] + carry;
            if (j < b.digits_.size())
                cur += static_cast<std::uint64_t>(a.digits_[i]) * b.digits_[j];
            result.digits_[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    result.negative_ = a.negative_ != b.negative_;
    result.trim();
    return result;
}

BigInt& BigInt::operator*=(const BigInt& other) {
    *this = *this * other;
    return *this;
}

BigInt& BigInt::mul_small(std::uint32_t factor) {
    if (factor == 0 || is_zero()) {
        digits_.clear();
        negative_ = false;
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& digit : digits_) {
        std::uint64_t cur = static_cast<std::uint64_t>(digit) * factor + carry;
        digit = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    while (carry) {
        digits_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return *this;
}

std::uint32_t BigInt::divmod_small(std::uint32_t divisor) {
    if (divisor == 0) throw std::invalid_argument("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = digits_.size(); i-- > 0;) {
        std::uint64_t cur = rem * kBase + digits_[i];
        digits_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigInt& BigInt::div_small_exact(std::uint32_t divisor) {
    if (divmod_small(divisor) != 0) throw std::logic_error("inexact division");
    return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& other) const noexcept {
    const int left = signum();
    const int right = other.signum();
    if (left != right) return left <=> right;
    int cmp = compare_magnitude(*this, other);
    if (left < 0) cmp = -cmp;
    return cmp <=> 0;
}

std::string BigInt::str() const {
    if (digits_.empty()) return "0";
    std::string out;
    if (negative_) out.push_back('-');
    out += std::to_string(digits_.back());
    for (std::size_t i = digits_.size() - 1; i-- > 0;) {
        const std::string chunk = std::to_string(digits_[i]);
        out.append(kBaseDigits - chunk.size(), '0');
        out += chunk;
    }
    return out;
}

BigInt BigInt::parse(std::string_view text) {
    bool negative = false;
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        start = 1;
    }
    if (start == text.size()) throw std::invalid_argument("empty integer literal");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("bad digit in integer literal");
    }
    BigInt r;
    for (std::size_t end = text.size(); end > start;) {
        const std::size_t begin = end > start + kBaseDigits ? end - kBaseDigits : start;
        r.digits_.push_back(
            static_cast<std::uint32_t>(std::stoul(std::string(text.substr(begin, end - begin)))));
        end = begin;
    }
    r.trim();
    r.negative_ = negative && !r.digits_.empty();
    return r;
}

long long BigInt::to_int64() const {
    unsigned long long acc = 0;
    constexpr auto kMax = std::numeric_limits<unsigned long long>::max();
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (acc > (kMax - digits_[i]) / kBase)
            throw std::overflow_error("value does not fit in 64 bits");
        acc = acc * kBase + digits_[i];
    }
    constexpr unsigned long long kInt64Max = 9223372036854775807ull;
    if (!negative_) {
        if (acc > kInt64Max) throw std::overflow_error("value does not fit in 64 bits");
        return static_cast<long long>(acc);
    }
    if (acc > kInt64Max + 1) throw std::overflow_error("value does not fit in 64 bits");
    if (acc == kInt64Max + 1) return std::numeric_limits<long long>::min();
    return -static_cast<long long>(acc);
}

BigInt BigInt::factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    if (n > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("factorial argument too large");
    BigInt r{1};
    for (long long i = 2; i <= n; ++i) r.mul_small(static_cast<std::uint32_t>(i));
    return r;
}

BigInt BigInt::binomial(long long n, long long k) {
    if (k < 0 || k > n) return BigInt{};
    k = std::min(k, n - k);
    BigInt r{1};
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt{n - k + i};
        r.div_small_exact(static_cast<std::uint32_t>(i));
    }
    return r;
}

BigInt BigInt::binomial(const BigInt& n, long long k) {
    if (k < 0) return BigInt{};
    if (k > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("binomial lower index too large");
    BigInt r{1};
    BigInt top = n;
    for (long long i = 1; i <= k; ++i) {
        r *= top;
        r.div_small_exact(static_cast<std::uint32_t>(i));
        top -= BigInt{1};
    }
    return r;
}

BigInt multinomial(std::span<const int> parts) {
    long long total = 0;
    BigInt r{1};
    for (int part : parts) {
        if (part < 0) throw std::invalid_argument("negative multiplicity");
        total += part;
        r *= BigInt::binomial(total, static_cast<long long>(part));
    }
    return r;
}

}  // namespace coinwords
