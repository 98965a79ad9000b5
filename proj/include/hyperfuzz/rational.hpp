#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperfuzz {

// Exact rational in lowest terms, denominator > 0.  Membership degrees live in
// [0,1] with parse-guarded denominators, so cross multiplication stays inside
// int64 and every comparison is exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        num_ = g ? num / g : num;
        den_ = g ? den / g : den;
    }

    static Rational zero() { return Rational(0, 1); }
    static Rational one() { return Rational(1, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
    friend Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

    // Canonical rendering: "0", "1", otherwise "p/q" in lowest terms.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

// Membership / non-membership degree.  Constrained to [0,1] where constructed
// from user input; internal arithmetic never leaves [0,2].
using Degree = Rational;

inline bool in_unit_interval(const Rational& r) {
    return r >= Rational::zero() && r <= Rational::one();
}

}  // namespace hyperfuzz
