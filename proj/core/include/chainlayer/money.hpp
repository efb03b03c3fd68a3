#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace chainlayer {

// Non-negative fixed-point currency amount with two fractional digits,
// stored as an integer number of cents. Sums are exact and therefore
// independent of summation order.
class Money {
public:
    constexpr Money() = default;

    static Money from_cents(std::int64_t cents);

    // Accepts "12", "12.5" and "12.00"; rejects signs, exponents and any
    // other text. Canonical form on output is always two fractional digits.
    static Money parse(std::string_view text);

    constexpr std::int64_t cents() const noexcept { return cents_; }
    constexpr bool is_zero() const noexcept { return cents_ == 0; }

    std::string str() const;

    Money operator+(Money other) const;
    Money& operator+=(Money other);

    friend constexpr auto operator<=>(Money, Money) = default;

private:
    std::int64_t cents_ = 0;
};

// Signed difference of two amounts. The only signed money value in the
// system; produced by scenario comparisons (cost_st2 - cost_st1).
struct SignedMoney {
    std::int64_t cents = 0;

    std::string str() const;
    friend constexpr auto operator<=>(SignedMoney, SignedMoney) = default;
};

SignedMoney operator-(Money lhs, Money rhs);

}  // namespace chainlayer
