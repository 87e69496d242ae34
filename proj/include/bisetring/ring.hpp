#pragma once

#include "bisetring/bigint.hpp"
#include "bisetring/gf.hpp"
#include "bisetring/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace bisetring {

// Ring descriptors. Generic algorithms take one of these as a parameter and
// reach constants and inverses through it; element arithmetic itself goes
// through the descriptor too, so polynomial coefficient rings compose.

struct IntRing {
    using Elt = BigInt;
    static constexpr bool is_field = false;

    BigInt zero() const { return BigInt(0); }
    BigInt one() const { return BigInt(1); }
    BigInt from_int(std::int64_t v) const { return BigInt(v); }
    std::uint32_t characteristic() const { return 0; }

    BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
    BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
    BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
    BigInt neg(const BigInt& a) const { return -a; }
    bool is_zero(const BigInt& a) const { return a.is_zero(); }
    bool eq(const BigInt& a, const BigInt& b) const { return a == b; }

    // exact division; throws if not divisible (Bareiss guarantees exactness)
    BigInt divexact(const BigInt& a, const BigInt& b) const {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        if (!r.is_zero()) throw std::logic_error("IntRing: inexact division");
        return q;
    }

    std::string to_string(const BigInt& a) const { return a.to_string(); }
};

struct RatField {
    using Elt = BigRat;
    static constexpr bool is_field = true;

    BigRat zero() const { return BigRat(0); }
    BigRat one() const { return BigRat(1); }
    BigRat from_int(std::int64_t v) const { return BigRat(BigInt(v)); }
    std::uint32_t characteristic() const { return 0; }

    BigRat add(const BigRat& a, const BigRat& b) const { return a + b; }
    BigRat sub(const BigRat& a, const BigRat& b) const { return a - b; }
    BigRat mul(const BigRat& a, const BigRat& b) const { return a * b; }
    BigRat neg(const BigRat& a) const { return -a; }
    BigRat inv(const BigRat& a) const { return a.inv(); }
    BigRat divexact(const BigRat& a, const BigRat& b) const { return a / b; }
    bool is_zero(const BigRat& a) const { return a.is_zero(); }
    bool eq(const BigRat& a, const BigRat& b) const { return a == b; }

    std::string to_string(const BigRat& a) const { return a.to_string(); }
};

struct GfField {
    using Elt = Gf;
    static constexpr bool is_field = true;

    GfContextPtr ctx;

    explicit GfField(GfContextPtr c) : ctx(std::move(c)) {}
    GfField(std::uint32_t p, std::uint32_t k = 1) : ctx(GfContext::get(p, k)) {}

    Gf zero() const { return Gf(ctx, 0); }
    Gf one() const { return Gf(ctx, 1); }
    Gf from_int(std::int64_t v) const { return Gf(ctx, ctx->from_int(v)); }
    Gf element(std::uint32_t packed) const { return Gf(ctx, packed); }
    Gf generator() const { return Gf(ctx, ctx->generator()); }
    std::uint32_t characteristic() const { return ctx->p(); }
    std::uint32_t size() const { return ctx->q(); }

    Gf add(const Gf& a, const Gf& b) const { return a + b; }
    Gf sub(const Gf& a, const Gf& b) const { return a - b; }
    Gf mul(const Gf& a, const Gf& b) const { return a * b; }
    Gf neg(const Gf& a) const { return -a; }
    Gf inv(const Gf& a) const { return a.inv(); }
    Gf divexact(const Gf& a, const Gf& b) const { return a * b.inv(); }
    bool is_zero(const Gf& a) const { return a.is_zero(); }
    bool eq(const Gf& a, const Gf& b) const { return a == b; }

    std::string to_string(const Gf& a) const { return a.to_string(); }
};

} // namespace bisetring
