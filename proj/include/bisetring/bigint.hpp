#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bisetring {

// Arbitrary-precision signed integer.
//
// Values that fit in an int64 are stored inline with no heap traffic; larger
// magnitudes spill into base-2^32 limbs. All arithmetic is exact. Division
// truncates toward zero, matching built-in integer semantics.
class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : small_(v) {}
    BigInt(long v) : small_(v) {}
    BigInt(long long v) : small_(v) {}
    BigInt(unsigned v) : small_(v) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long long v);

    static BigInt from_string(const std::string& s);

    bool is_small() const { return mag_.empty(); }
    bool is_zero() const { return mag_.empty() && small_ == 0; }
    bool is_negative() const { return sign() < 0; }
    int sign() const;

    // value when small; callers must check is_small()
    std::int64_t small_value() const { return small_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);  // trunc toward 0
    friend BigInt operator%(const BigInt& a, const BigInt& b);  // sign of dividend

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }
    BigInt& operator/=(const BigInt& b) { return *this = *this / b; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b);
    static BigInt gcd(BigInt a, BigInt b);  // nonnegative
    BigInt pow(unsigned e) const;

    std::string to_string() const;

private:
    using Mag = std::vector<std::uint32_t>;

    // mag_ empty: value == small_.
    // mag_ nonempty: magnitude in little-endian limbs, small_ in {-1,+1} is the sign.
    std::int64_t small_ = 0;
    Mag mag_;

    static BigInt from_mag(Mag m, int sign);
    Mag to_mag() const;  // |value| as limbs

    static int cmp_mag(const Mag& a, const Mag& b);
    static Mag add_mag(const Mag& a, const Mag& b);
    static Mag sub_mag(const Mag& a, const Mag& b);  // requires a >= b
    static Mag mul_mag(const Mag& a, const Mag& b);
    static void divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r);
    static void trim(Mag& m);
};

inline BigInt operator+(const BigInt& a, int b) { return a + BigInt(b); }
inline BigInt operator*(const BigInt& a, int b) { return a * BigInt(b); }

} // namespace bisetring
