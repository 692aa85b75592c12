#pragma once

#include "polydual/checked.hpp"

#include <compare>
#include <string>

namespace polydual {

// Exact rational number: reduced, positive denominator. No floating point
// exists anywhere in this project; values like -4/3 are stored verbatim.
class Rat {
public:
    constexpr Rat() = default;
    Rat(Int n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rat(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rat operator-() const { return Rat(checked_neg(num_), den_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                   checked_mul(a.den_, b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw InternalInconsistencyError("rational division by zero");
        return Rat(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw InternalInconsistencyError("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        Int g = gcd_int(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace polydual
