#pragma once
// Exact rational scalars. Every probability, weight, loss and risk in the
// library is a Rational; arithmetic never rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace advrisk {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
using BigRational = boost::multiprecision::cpp_rational;
}

class Rational {
public:
    Rational() : v_(0) {}
    template <typename T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
    Rational(T n) : v_(static_cast<long long>(n)) {}      // NOLINT: implicit on purpose
    Rational(const BigInt& n) : v_(n) {}                  // NOLINT
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        v_ = detail::BigRational(num, den);               // canonicalizes gcd
    }
    Rational(double) = delete;   // exact values only; parse strings instead
    Rational(float) = delete;

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p/q" with q > 0 after reduction, or just "p" for integers.
    std::string str() const {
        std::string s = num().str();
        if (!is_integer()) { s += '/'; s += den().str(); }
        return s;
    }

    // Accepts "p", "p/q", optional leading '-' or '+' on p. No whitespace.
    static Rational parse(std::string_view text) {
        auto bad = [&] { throw std::invalid_argument("Rational::parse: bad input '" + std::string(text) + "'"); };
        if (text.empty()) bad();
        std::size_t slash = text.find('/');
        std::string_view num_part = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
        std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        auto check_int = [&](std::string_view p, bool allow_sign) {
            if (p.empty()) bad();
            std::size_t i = 0;
            if (allow_sign && (p[0] == '-' || p[0] == '+')) i = 1;
            if (i == p.size()) bad();
            for (; i < p.size(); ++i)
                if (p[i] < '0' || p[i] > '9') bad();
        };
        check_int(num_part, true);
        check_int(den_part, false);
        if (num_part[0] == '+') num_part.remove_prefix(1);
        BigInt n{std::string(num_part)};
        BigInt d{std::string(den_part)};
        if (d == 0) bad();
        return Rational(n, d);
    }

    // Correctly rounded (nearest, ties to even) binary64 value.
    double to_double() const {
        using boost::multiprecision::msb;
        if (is_zero()) return 0.0;
        const bool neg = sign() < 0;
        BigInt a = boost::multiprecision::abs(num());
        BigInt b = den();
        const long la = static_cast<long>(msb(a));
        const long lb = static_cast<long>(msb(b));
        // Scale so the truncated quotient carries 54 or 55 significant bits.
        const long shift = 54 - (la - lb);
        if (shift > 0) a <<= shift; else b <<= -shift;
        BigInt q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        const long qbits = static_cast<long>(msb(q)) + 1;
        const long excess = qbits - 53;                   // 1 or 2
        std::uint64_t kept = static_cast<std::uint64_t>(q >> excess);
        const bool guard = boost::multiprecision::bit_test(q, static_cast<unsigned>(excess - 1));
        bool sticky = (r != 0);
        if (excess == 2 && boost::multiprecision::bit_test(q, 0)) sticky = true;
        long e2 = excess - shift;
        if (guard && (sticky || (kept & 1))) {
            ++kept;
            if (kept == (1ULL << 53)) { kept >>= 1; ++e2; }
        }
        double out = std::ldexp(static_cast<double>(kept), static_cast<int>(e2));
        return neg ? -out : out;
    }

private:
    explicit Rational(detail::BigRational v) : v_(std::move(v)) {}
    detail::BigRational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    while (exp != 0) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

inline BigInt binomial_coefficient(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

}  // namespace advrisk
