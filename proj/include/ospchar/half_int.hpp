#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace ospchar {

/// Exact element of (1/2)Z, stored as its doubled value.
///
/// Every weight coordinate in the engine is a HalfInt: dominant weights are
/// integral, rho and all rho-shifted weights have half-odd entries. Arithmetic
/// is checked and throws std::overflow_error rather than wrapping.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t value) : twice_(value * 2) {}  // NOLINT: implicit by design of integer literals

    static constexpr HalfInt from_twice(std::int64_t twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt half() { return from_twice(1); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    /// Throws std::domain_error when the value is not an integer.
    std::int64_t to_integer() const;

    HalfInt operator-() const;
    HalfInt& operator+=(HalfInt other);
    HalfInt& operator-=(HalfInt other);
    HalfInt& operator*=(std::int64_t factor);

    friend HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend HalfInt operator*(HalfInt a, std::int64_t k) { return a *= k; }
    friend HalfInt operator*(std::int64_t k, HalfInt a) { return a *= k; }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr std::strong_ordering operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

    /// "3", "-1/2", "5/2".
    std::string str() const;

private:
    std::int64_t twice_ = 0;
};

HalfInt abs(HalfInt h);

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace ospchar
