#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace whs {

// Arbitrary-precision signed integer. Every quantity in the library is
// exact; there is no floating-point mode.
using Int = boost::multiprecision::cpp_int;

/// gcd on nonnegative integers, with gcd(0,0) = 0 by convention.
inline Int gcd(Int a, Int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("gcd: arguments must be nonnegative");
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// lcm on strictly positive integers.
inline Int lcm(const Int& a, const Int& b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("lcm: arguments must be positive");
    return (a / gcd(a, b)) * b;
}

/// Exact rational number, always stored in lowest terms with a
/// positive denominator.
class Ratio {
public:
    Ratio() : num_(0), den_(1) {}

    Ratio(Int num, Int den) {
        if (den == 0)
            throw std::invalid_argument("Ratio: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = gcd(num < 0 ? Int(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num_ = num;
        den_ = den;
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    // Exact comparison by cross-multiplication.
    friend std::strong_ordering operator<=>(const Ratio& x, const Ratio& y) {
        Int lhs = x.num_ * y.den_;
        Int rhs = y.num_ * x.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend bool operator==(const Ratio& x, const Ratio& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    /// "p/q" form, always with the denominator, e.g. "-1/1", "5/3".
    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

private:
    Int num_;
    Int den_;  // > 0
};

}  // namespace whs
