#pragma once

#include <cstdint>
#include <string>

#include "rieszlab/errors.hpp"

namespace rieszlab {

// Exact rational with 64-bit numerator/denominator, always gcd-reduced with
// den > 0.  Intermediates go through __int128; a result that does not fit
// back into 64 bits throws Overflow instead of wrapping.  Circle endpoints,
// arc measures and cover tests all run on this type; doubles are derived
// views only.
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // Largest integer <= value.
    long long floor() const;
    // Reduced into [0, m) for a positive integer modulus m.
    Rational mod(long long m) const;

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "p/q", or plain "p" when the denominator is 1.
    std::string to_string() const;

    // Accepts "p", "p/q" and plain decimals like "0.25" (converted exactly).
    static Rational parse(const std::string& text);

  private:
    long long num_ = 0;
    long long den_ = 1;

    static Rational make_reduced(__int128 n, __int128 d);
};

inline Rational operator*(long long k, const Rational& r) {
    return Rational(k) * r;
}

} // namespace rieszlab
