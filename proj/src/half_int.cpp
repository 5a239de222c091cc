#include "ospchar/half_int.hpp"

#include <stdexcept>

namespace ospchar {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("HalfInt overflow");
    return r;
}

}  // namespace

std::int64_t HalfInt::to_integer() const {
    if (!is_integer()) throw std::domain_error("half-integer " + str() + " is not an integer");
    return twice_ / 2;
}

HalfInt HalfInt::operator-() const {
    if (twice_ == INT64_MIN) throw std::overflow_error("HalfInt overflow");
    return from_twice(-twice_);
}

HalfInt& HalfInt::operator+=(HalfInt other) {
    twice_ = checked_add(twice_, other.twice_);
    return *this;
}

HalfInt& HalfInt::operator-=(HalfInt other) { return *this += -other; }

HalfInt& HalfInt::operator*=(std::int64_t factor) {
    std::int64_t r;
    if (__builtin_mul_overflow(twice_, factor, &r)) throw std::overflow_error("HalfInt overflow");
    twice_ = r;
    return *this;
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace ospchar
