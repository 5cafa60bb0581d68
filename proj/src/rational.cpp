#include "rieszlab/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace rieszlab {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kMin64 = std::numeric_limits<long long>::min();
constexpr __int128 kMax64 = std::numeric_limits<long long>::max();

} // namespace

Rational Rational::make_reduced(__int128 n, __int128 d) {
    if (d == 0) throw InvalidArgument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n < kMin64 || n > kMax64 || d > kMax64)
        throw Overflow("rational exceeds 64-bit range after reduction");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
}

Rational::Rational(long long n, long long d) {
    *this = make_reduced(n, d);
}

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num_) * o.den_ +
                            static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num_) * o.den_ -
                            static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num_) * o.num_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw InvalidArgument("rational division by zero");
    return make_reduced(static_cast<__int128>(num_) * o.den_,
                        static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ <
           static_cast<__int128>(o.num_) * den_;
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::mod(long long m) const {
    if (m <= 0) throw InvalidArgument("modulus must be positive");
    __int128 n = static_cast<__int128>(num_) % (static_cast<__int128>(m) * den_);
    if (n < 0) n += static_cast<__int128>(m) * den_;
    return make_reduced(n, den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw BadDescriptor("empty rational");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            long long n = std::stoll(text.substr(0, slash));
            long long d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(text));
        // decimal: sign, integer part, fractional digits
        std::string head = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.size() > 18) throw BadDescriptor("decimal too long: " + text);
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw BadDescriptor("bad decimal: " + text);
        bool neg = !head.empty() && head[0] == '-';
        long long ip = head.empty() || head == "-" || head == "+"
                           ? 0
                           : std::stoll(head);
        long long scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        long long fp = frac.empty() ? 0 : std::stoll(frac);
        Rational r = Rational(ip < 0 ? -ip : ip) + Rational(fp, scale);
        return neg || ip < 0 ? -r : r;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw BadDescriptor("bad rational: " + text);
    }
}

} // namespace rieszlab
