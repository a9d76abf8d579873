#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coinwords {

/// Exact signed integer of arbitrary size, sign-and-magnitude over base-1e9 limbs.
/// Counting never rounds here: factorials, binomials and polynomial coefficients
/// all go through this type.
class BigInt {
public:
    BigInt() = default;  // zero
    BigInt(long long value);
    BigInt(int value) : BigInt(static_cast<long long>(value)) {}

    static BigInt parse(std::string_view text);

    bool is_zero() const noexcept { return digits_.empty(); }
    int signum() const noexcept;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& other);
    BigInt& operator-=(const BigInt& other);
    BigInt& operator*=(const BigInt& other);
    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    /// Multiplies the magnitude in place; the sign is kept.
    BigInt& mul_small(std::uint32_t factor);
    /// Divides the magnitude in place by a small positive divisor and returns
    /// the remainder of the magnitude; the sign is kept.
    std::uint32_t divmod_small(std::uint32_t divisor);
    /// Division that must leave no remainder; throws std::logic_error otherwise.
    BigInt& div_small_exact(std::uint32_t divisor);

    std::strong_ordering operator<=>(const BigInt& other) const noexcept;
    bool operator==(const BigInt& other) const noexcept = default;

    std::string str() const;
    /// Exact conversion; throws std::overflow_error when out of range.
    long long to_int64() const;

    static BigInt factorial(long long n);
    static BigInt binomial(long long n, long long k);
    /// C(n, k) for big n and small k, by multiply-then-exact-divide steps.
    static BigInt binomial(const BigInt& n, long long k);

private:
    void trim();
    static int compare_magnitude(const BigInt& a, const BigInt& b) noexcept;
    static void add_magnitude(std::vector<std::uint32_t>& acc,
                              const std::vector<std::uint32_t>& other);
    static void sub_magnitude(std::vector<std::uint32_t>& acc,
                              const std::vector<std::uint32_t>& other);

    std::vector<std::uint32_t> digits_;  // little-endian, no leading zeros
    bool negative_ = false;              // never set for zero
};

/// N! / (m_1! m_2! ... m_n!) where N is the sum of the parts.
BigInt multinomial(std::span<const int> parts);

}  // namespace coinwords
