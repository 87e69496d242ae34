#pragma once

#include "bisetring/bigint.hpp"

#include <stdexcept>
#include <string>

namespace bisetring {

// Exact rational number: normalized so den > 0 and gcd(num, den) = 1.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRat(int n) : num_(n), den_(1) {}
    BigRat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.is_zero()) throw std::domain_error("BigRat: division by zero");
        return BigRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    BigRat operator-() const {
        BigRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    BigRat inv() const {
        if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
        return BigRat(den_, num_);
    }

    BigRat& operator+=(const BigRat& b) { return *this = *this + b; }
    BigRat& operator-=(const BigRat& b) { return *this = *this - b; }
    BigRat& operator*=(const BigRat& b) { return *this = *this * b; }

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("BigRat: zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1) && !g.is_zero()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (num_.is_zero()) den_ = BigInt(1);
    }

    BigInt num_, den_;
};

} // namespace bisetring
