#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace isotype {

// Element of N0 ∪ {∞} with saturating arithmetic. Infinity absorbs addition
// and multiplication by nonzero values; 0 · ∞ = 0 (an empty range of classes
// contributes nothing regardless of the class size).
class ExtNat {
public:
    constexpr ExtNat() : value_(0) {}

    static constexpr ExtNat of(std::uint64_t n) {
        if (n >= kInfinity) throw std::overflow_error("ExtNat: finite value too large");
        ExtNat e;
        e.value_ = n;
        return e;
    }

    static constexpr ExtNat infinity() {
        ExtNat e;
        e.value_ = kInfinity;
        return e;
    }

    constexpr bool is_infinite() const { return value_ == kInfinity; }
    constexpr bool is_zero() const { return value_ == 0; }

    constexpr std::uint64_t value() const {
        if (is_infinite()) throw std::domain_error("ExtNat: value() of infinity");
        return value_;
    }

    friend ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        if (a.value_ > kInfinity - 1 - b.value_)
            throw std::overflow_error("ExtNat: addition overflow");
        return of(a.value_ + b.value_);
    }

    friend ExtNat operator*(ExtNat a, ExtNat b) {
        if (a.is_zero() || b.is_zero()) return ExtNat();  // 0 · ∞ = 0 by convention
        if (a.is_infinite() || b.is_infinite()) return infinity();
        unsigned __int128 wide = static_cast<unsigned __int128>(a.value_) * b.value_;
        if (wide >= kInfinity) throw std::overflow_error("ExtNat: multiplication overflow");
        return of(static_cast<std::uint64_t>(wide));
    }

    ExtNat& operator+=(ExtNat other) { return *this = *this + other; }

    // Finite values compare numerically; every finite value is below infinity.
    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(ExtNat a, ExtNat b) = default;

    // Decimal digits, or the literal "inf".
    std::string to_string() const {
        return is_infinite() ? std::string("inf") : std::to_string(value_);
    }

private:
    static constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value_;
};

}  // namespace isotype
