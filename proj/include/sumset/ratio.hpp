#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "sumset/arith.hpp"

namespace sumset {

// Exact rational number, always in lowest terms with positive denominator.
class Ratio {
public:
    Ratio() : num_(0), den_(1) {}
    Ratio(Integer n) : num_(std::move(n)), den_(1) {}
    Ratio(long n) : num_(n), den_(1) {}
    Ratio(int n) : num_(n), den_(1) {}
    Ratio(Integer num, Integer den);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Ratio operator-() const;

    friend Ratio operator+(const Ratio& a, const Ratio& b);
    friend Ratio operator-(const Ratio& a, const Ratio& b);
    friend Ratio operator*(const Ratio& a, const Ratio& b);
    friend Ratio operator/(const Ratio& a, const Ratio& b); // b != 0

    Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
    Ratio& operator-=(const Ratio& o) { return *this = *this - o; }
    Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
    Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

    // Canonical form makes structural equality the same as value equality.
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

    // "num" when integral, "num/den" otherwise.
    std::string str() const;
    static Ratio parse(std::string_view text); // throws domain_error

private:
    Integer num_;
    Integer den_;
};

Ratio abs(const Ratio& q);
Ratio pow(const Ratio& base, unsigned long e);

// A rational is a square iff it is nonnegative and, in lowest terms, both
// numerator and denominator are perfect squares.
bool is_square(const Ratio& q);

struct RatioSqrtResult {
    Ratio root; // nonnegative, meaningful only when exact
    bool exact;
};
RatioSqrtResult ratio_sqrt(const Ratio& q);

} // namespace sumset
