#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace bisetring {

class GfContext;
using GfContextPtr = std::shared_ptr<const GfContext>;

// A finite field GF(p^k) with p^k <= 2^16. Prime fields use modular
// arithmetic directly; extension fields are built on a fixed hard-coded
// irreducible polynomial (Conway polynomial, so x generates the
// multiplicative group). Elements are packed as base-p digit strings, and
// multiplication goes through exp/log tables.
class GfContext : public std::enable_shared_from_this<GfContext> {
public:
    // canonical shared context per (p, k); throws for unsupported fields
    static GfContextPtr get(std::uint32_t p, std::uint32_t k = 1);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // i mod p, embedded as a constant
    std::uint32_t from_int(std::int64_t i) const;
    // the multiplicative generator backing the exp table (for k > 1 this is
    // the class of x, e.g. alpha in GF(4))
    std::uint32_t generator() const { return gen_; }

    std::string elem_to_string(std::uint32_t a) const;

private:
    GfContext(std::uint32_t p, std::uint32_t k);

    std::uint32_t p_, k_, q_;
    std::uint32_t gen_ = 0;
    std::vector<std::uint32_t> irred_;  // monic, length k+1, base-p coeffs
    std::vector<std::uint32_t> exp_;    // exp_[i] = gen^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;    // inverse of exp_ on nonzero elements

    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;  // no tables
};

// Field element carrying its context. Operations require matching fields.
class Gf {
public:
    Gf() = default;
    Gf(GfContextPtr ctx, std::uint32_t v) : ctx_(std::move(ctx)), v_(v) {}

    const GfContextPtr& ctx() const { return ctx_; }
    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Gf operator+(const Gf& a, const Gf& b) { return Gf(a.ctx_, a.ctx_->add(a.v_, b.v_)); }
    friend Gf operator-(const Gf& a, const Gf& b) { return Gf(a.ctx_, a.ctx_->sub(a.v_, b.v_)); }
    friend Gf operator*(const Gf& a, const Gf& b) { return Gf(a.ctx_, a.ctx_->mul(a.v_, b.v_)); }
    Gf operator-() const { return Gf(ctx_, ctx_->neg(v_)); }
    Gf inv() const { return Gf(ctx_, ctx_->inv(v_)); }

    Gf& operator+=(const Gf& b) { v_ = ctx_->add(v_, b.v_); return *this; }
    Gf& operator-=(const Gf& b) { v_ = ctx_->sub(v_, b.v_); return *this; }
    Gf& operator*=(const Gf& b) { v_ = ctx_->mul(v_, b.v_); return *this; }

    friend bool operator==(const Gf& a, const Gf& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Gf& a, const Gf& b) { return a.v_ != b.v_; }

    std::string to_string() const { return ctx_->elem_to_string(v_); }

private:
    GfContextPtr ctx_;
    std::uint32_t v_ = 0;
};

} // namespace bisetring
