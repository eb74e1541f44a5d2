// Exact rational arithmetic on 128-bit integers.
//
// Used wherever a computation must stay exact until the final evaluation
// step: Rodrigues prefactors, weighted-polynomial differentiation and the
// Gegenbauer/Jacobi monomial basis changes. Degrees in this library are
// capped low enough (symbolic checks default to total order 10) that the
// reduced numerators and denominators stay far below 2^127.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schoenberg {

class Rational {
  public:
    using Int = __int128;

    constexpr Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rational from_parts(Int n, Int d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return from_parts(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_parts(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_parts(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_parts(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_parts(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // (a)_k = a (a+1) ... (a+k-1), exact.
    static Rational pochhammer(const Rational& a, int k) {
        Rational r(1);
        Rational t = a;
        for (int i = 0; i < k; ++i) {
            r *= t;
            t += Rational(1);
        }
        return r;
    }

    static Rational factorial(int n) {
        Rational r(1);
        for (int i = 2; i <= n; ++i) r *= Rational(i);
        return r;
    }

  private:
    Int num_, den_;

    static Int gcd(Int a, Int b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }
};

} // namespace schoenberg
