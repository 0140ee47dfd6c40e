#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dpcover/errors.hpp"

namespace dpcover {

/// Signed 128-bit integer with checked arithmetic. Every +, -, * throws
/// OverflowError instead of wrapping. Coloring counts at desk scale fit
/// comfortably; the point is that a silent wraparound is impossible.
class CheckedInt {
public:
    constexpr CheckedInt() : v_(0) {}
    template <std::integral T>
    constexpr CheckedInt(T x) : v_(x) {}

    static constexpr CheckedInt from_raw(__int128 v) {
        CheckedInt r;
        r.v_ = v;
        return r;
    }

    static CheckedInt from_string(std::string_view s);

    constexpr __int128 raw() const { return v_; }

    CheckedInt operator+(CheckedInt o) const {
        __int128 r;
        if (__builtin_add_overflow(v_, o.v_, &r)) throw OverflowError("CheckedInt: add overflow");
        return from_raw(r);
    }
    CheckedInt operator-(CheckedInt o) const {
        __int128 r;
        if (__builtin_sub_overflow(v_, o.v_, &r)) throw OverflowError("CheckedInt: sub overflow");
        return from_raw(r);
    }
    CheckedInt operator*(CheckedInt o) const {
        __int128 r;
        if (__builtin_mul_overflow(v_, o.v_, &r)) throw OverflowError("CheckedInt: mul overflow");
        return from_raw(r);
    }
    CheckedInt operator-() const {
        return CheckedInt(0) - *this;
    }
    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
    CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

    /// Exact power with checked multiplies; e >= 0.
    CheckedInt pow(unsigned e) const {
        CheckedInt acc(1), base = *this;
        while (e) {
            if (e & 1u) acc *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return acc;
    }

    constexpr bool operator==(const CheckedInt&) const = default;
    constexpr auto operator<=>(const CheckedInt& o) const {
        return v_ < o.v_   ? std::strong_ordering::less
               : v_ > o.v_ ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    constexpr bool is_zero() const { return v_ == 0; }
    constexpr bool negative() const { return v_ < 0; }

    long long to_i64() const {
        if (v_ > INT64_MAX || v_ < INT64_MIN) throw OverflowError("CheckedInt: value exceeds 64 bits");
        return static_cast<long long>(v_);
    }
    std::uint64_t to_u64() const {
        if (v_ < 0 || v_ > static_cast<__int128>(UINT64_MAX))
            throw OverflowError("CheckedInt: value not representable as u64");
        return static_cast<std::uint64_t>(v_);
    }

    std::string str() const;

private:
    __int128 v_;
};

/// Exact division; a remainder means an invariant was violated upstream.
CheckedInt div_exact(CheckedInt a, CheckedInt b);

/// True iff b divides a (b != 0).
bool divides(CheckedInt b, CheckedInt a);

std::ostream& operator<<(std::ostream& os, const CheckedInt& x);

} // namespace dpcover
