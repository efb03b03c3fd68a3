#include "chainlayer/money.hpp"

#include <cctype>
#include <stdexcept>

namespace chainlayer {

Money Money::from_cents(std::int64_t cents) {
    if (cents < 0) {
        throw std::invalid_argument("Money cannot be negative");
    }
    Money m;
    m.cents_ = cents;
    return m;
}

Money Money::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty money literal");
    }
    std::size_t pos = 0;
    std::int64_t units = 0;
    bool any_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        int digit = text[pos] - '0';
        if (units > (INT64_MAX - digit) / 10) {
            throw std::overflow_error("money literal out of range");
        }
        units = units * 10 + digit;
        any_digit = true;
        ++pos;
    }
    if (!any_digit) {
        throw std::invalid_argument("money literal must start with a digit: '" + std::string(text) + "'");
    }
    std::int64_t frac = 0;
    if (pos < text.size()) {
        if (text[pos] != '.') {
            throw std::invalid_argument("invalid money literal: '" + std::string(text) + "'");
        }
        ++pos;
        std::size_t frac_digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            frac = frac * 10 + (text[pos] - '0');
            ++frac_digits;
            ++pos;
        }
        if (frac_digits == 0 || frac_digits > 2) {
            throw std::invalid_argument("money literal must have 1 or 2 fractional digits: '" +
                                        std::string(text) + "'");
        }
        if (frac_digits == 1) {
            frac *= 10;
        }
    }
    if (pos != text.size()) {
        throw std::invalid_argument("trailing characters in money literal: '" + std::string(text) + "'");
    }
    if (units > (INT64_MAX - frac) / 100) {
        throw std::overflow_error("money literal out of range");
    }
    return from_cents(units * 100 + frac);
}

std::string Money::str() const {
    std::string out = std::to_string(cents_ / 100);
    std::int64_t frac = cents_ % 100;
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
}

Money Money::operator+(Money other) const {
    std::int64_t sum = 0;
    if (__builtin_add_overflow(cents_, other.cents_, &sum)) {
        throw std::overflow_error("money addition overflow");
    }
    return from_cents(sum);
}

Money& Money::operator+=(Money other) {
    *this = *this + other;
    return *this;
}

std::string SignedMoney::str() const {
    std::int64_t abs_cents = cents < 0 ? -cents : cents;
    std::string out = cents < 0 ? "-" : "";
    out += std::to_string(abs_cents / 100);
    std::int64_t frac = abs_cents % 100;
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
}

SignedMoney operator-(Money lhs, Money rhs) {
    return SignedMoney{lhs.cents() - rhs.cents()};
}

}  // namespace chainlayer
