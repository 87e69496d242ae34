#include "bisetring/bigint.hpp"

#include <cassert>
#include <stdexcept>

namespace bisetring {

namespace {
constexpr std::uint64_t LIMB_BASE = std::uint64_t(1) << 32;
}

BigInt::BigInt(unsigned long long v) {
    if (v <= std::uint64_t(INT64_MAX)) {
        small_ = std::int64_t(v);
    } else {
        small_ = 1;
        mag_.push_back(std::uint32_t(v));
        mag_.push_back(std::uint32_t(v >> 32));
    }
}

int BigInt::sign() const {
    if (!mag_.empty()) return int(small_);
    return small_ > 0 ? 1 : small_ < 0 ? -1 : 0;
}

void BigInt::trim(Mag& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

BigInt BigInt::from_mag(Mag m, int sign) {
    trim(m);
    BigInt r;
    if (m.empty()) return r;
    // demote when it fits an int64
    if (m.size() <= 2) {
        std::uint64_t v = m[0];
        if (m.size() == 2) v |= std::uint64_t(m[1]) << 32;
        if (v <= std::uint64_t(INT64_MAX)) {
            r.small_ = sign > 0 ? std::int64_t(v) : -std::int64_t(v);
            return r;
        }
        if (sign < 0 && v == std::uint64_t(INT64_MAX) + 1) {
            r.small_ = INT64_MIN;
            return r;
        }
    }
    r.small_ = sign;
    r.mag_ = std::move(m);
    return r;
}

BigInt::Mag BigInt::to_mag() const {
    if (!mag_.empty()) return mag_;
    Mag m;
    std::uint64_t v = small_ >= 0 ? std::uint64_t(small_)
                                  : std::uint64_t(0) - std::uint64_t(small_);
    while (v) {
        m.push_back(std::uint32_t(v));
        v >>= 32;
    }
    return m;
}

int BigInt::cmp_mag(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

BigInt::Mag BigInt::add_mag(const Mag& a, const Mag& b) {
    const Mag& hi = a.size() >= b.size() ? a : b;
    const Mag& lo = a.size() >= b.size() ? b : a;
    Mag r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = std::uint32_t(s);
        carry = s >> 32;
    }
    r[hi.size()] = std::uint32_t(carry);
    trim(r);
    return r;
}

BigInt::Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
    assert(cmp_mag(a, b) >= 0);
    Mag r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = std::int64_t(a[i]) - borrow - (i < b.size() ? std::int64_t(b[i]) : 0);
        if (d < 0) {
            d += std::int64_t(LIMB_BASE);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = std::uint32_t(d);
    }
    trim(r);
    return r;
}

BigInt::Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty()) return {};
    Mag r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = std::uint64_t(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = std::uint32_t(cur);
            carry = cur >> 32;
        }
        r[i + b.size()] = std::uint32_t(carry);
    }
    trim(r);
    return r;
}

// Knuth TAOCP vol. 2, algorithm D, base 2^32
void BigInt::divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r) {
    assert(!v.empty());
    if (cmp_mag(u, v) < 0) {
        q.clear();
        r = u;
        return;
    }
    if (v.size() == 1) {
        std::uint64_t d = v[0], rem = 0;
        q.assign(u.size(), 0);
        for (std::size_t i = u.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u[i];
            q[i] = std::uint32_t(cur / d);
            rem = cur % d;
        }
        trim(q);
        r.clear();
        if (rem) r.push_back(std::uint32_t(rem));
        return;
    }

    const int shift = __builtin_clz(v.back());
    const std::size_t n = v.size(), m = u.size() - n;
    Mag vn(n), un(u.size() + 1, 0);
    if (shift == 0) {
        vn = v;
        for (std::size_t i = 0; i < u.size(); ++i) un[i] = u[i];
    } else {
        for (std::size_t i = n; i-- > 0;)
            vn[i] = std::uint32_t((std::uint64_t(v[i]) << shift) |
                                  (i > 0 ? std::uint64_t(v[i - 1]) >> (32 - shift) : 0));
        for (std::size_t i = u.size(); i-- > 0;)
            un[i] = std::uint32_t((std::uint64_t(u[i]) << shift) |
                                  (i > 0 ? std::uint64_t(u[i - 1]) >> (32 - shift) : 0));
        un[u.size()] = std::uint32_t(std::uint64_t(u.back()) >> (32 - shift));
    }

    q.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (std::uint64_t(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= LIMB_BASE ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= LIMB_BASE) break;
        }
        // multiply and subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            std::int64_t t = std::int64_t(un[i + j]) - borrow - std::int64_t(std::uint32_t(p));
            if (t < 0) {
                t += std::int64_t(LIMB_BASE);
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = std::uint32_t(t);
        }
        std::int64_t t = std::int64_t(un[j + n]) - borrow - std::int64_t(carry);
        if (t < 0) {
            // qhat was one too large: add v back
            t += std::int64_t(LIMB_BASE);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = c2 + un[i + j] + vn[i];
                un[i + j] = std::uint32_t(s);
                c2 = s >> 32;
            }
            t += std::int64_t(c2);
        }
        un[j + n] = std::uint32_t(t);
        q[j] = std::uint32_t(qhat);
    }
    trim(q);

    r.assign(n, 0);
    if (shift == 0) {
        for (std::size_t i = 0; i < n; ++i) r[i] = un[i];
    } else {
        for (std::size_t i = 0; i < n; ++i)
            r[i] = std::uint32_t((un[i] >> shift) |
                                 (std::uint64_t(un[i + 1]) << (32 - shift)));
    }
    trim(r);
}

BigInt BigInt::operator-() const {
    if (is_small()) {
        if (small_ != INT64_MIN) {
            BigInt r;
            r.small_ = -small_;
            return r;
        }
        return from_mag(to_mag(), 1);
    }
    BigInt r = *this;
    r.small_ = -r.small_;
    return r;
}

BigInt BigInt::abs() const { return sign() < 0 ? -*this : *this; }

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.is_small() && b.is_small()) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.small_, b.small_, &s)) {
            BigInt r;
            r.small_ = s;
            return r;
        }
    }
    int sa = a.sign(), sb = b.sign();
    if (sa == 0) return b;
    if (sb == 0) return a;
    BigInt::Mag ma = a.to_mag(), mb = b.to_mag();
    if (sa == sb) return BigInt::from_mag(BigInt::add_mag(ma, mb), sa);
    int c = BigInt::cmp_mag(ma, mb);
    if (c == 0) return BigInt();
    return c > 0 ? BigInt::from_mag(BigInt::sub_mag(ma, mb), sa)
                 : BigInt::from_mag(BigInt::sub_mag(mb, ma), sb);
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    if (a.is_small() && b.is_small()) {
        std::int64_t s;
        if (!__builtin_sub_overflow(a.small_, b.small_, &s)) {
            BigInt r;
            r.small_ = s;
            return r;
        }
    }
    return a + (-b);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_small() && b.is_small()) {
        std::int64_t s;
        if (!__builtin_mul_overflow(a.small_, b.small_, &s)) {
            BigInt r;
            r.small_ = s;
            return r;
        }
    }
    int s = a.sign() * b.sign();
    if (s == 0) return BigInt();
    return BigInt::from_mag(BigInt::mul_mag(a.to_mag(), b.to_mag()), s);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (a.is_small() && b.is_small() &&
        !(a.small_ == INT64_MIN && b.small_ == -1)) {
        q = BigInt(a.small_ / b.small_);
        r = BigInt(a.small_ % b.small_);
        return;
    }
    Mag mq, mr;
    divmod_mag(a.to_mag(), b.to_mag(), mq, mr);
    int sa = a.sign(), sb = b.sign();
    q = from_mag(std::move(mq), sa * sb);
    r = from_mag(std::move(mr), sa);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.small_ == b.small_ && a.mag_ == b.mag_;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (a.is_small() && b.is_small())
        return a.small_ < b.small_ ? -1 : a.small_ > b.small_ ? 1 : 0;
    int c = cmp_mag(a.to_mag(), b.to_mag());
    return sa >= 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

BigInt BigInt::pow(unsigned e) const {
    BigInt base = *this, r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string BigInt::to_string() const {
    if (is_small()) return std::to_string(small_);
    Mag m = mag_;
    std::string digits;
    while (!m.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = std::uint32_t(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        trim(m);
        for (int k = 0; k < 9; ++k) {
            digits.push_back(char('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign() < 0) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

BigInt BigInt::from_string(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in numeral");
        r = r * 10 + int(s[i] - '0');
    }
    return neg ? -r : r;
}

} // namespace bisetring
