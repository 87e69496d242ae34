#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bisetring {

// Univariate polynomial with coefficients in an exact ring, low degree
// first, no trailing zeros. Arithmetic goes through a ring descriptor so the
// same code serves Z, Q and GF(q) coefficients.
template <class T>
struct Poly {
    std::vector<T> c;

    bool is_zero() const { return c.empty(); }
    std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

template <class R>
struct PolyRing {
    using Base = R;
    using Elt = Poly<typename R::Elt>;
    static constexpr bool is_field = false;

    R base;

    explicit PolyRing(R b) : base(std::move(b)) {}

    Elt zero() const { return {}; }
    Elt one() const { return from_coeffs({base.one()}); }
    Elt from_int(std::int64_t v) const { return from_coeffs({base.from_int(v)}); }
    Elt x() const { return from_coeffs({base.zero(), base.one()}); }
    std::uint32_t characteristic() const { return base.characteristic(); }

    Elt from_coeffs(std::vector<typename R::Elt> coeffs) const {
        Elt p{std::move(coeffs)};
        trim(p);
        return p;
    }

    void trim(Elt& p) const {
        while (!p.c.empty() && base.is_zero(p.c.back())) p.c.pop_back();
    }

    Elt add(const Elt& a, const Elt& b) const {
        Elt r;
        r.c.resize(std::max(a.c.size(), b.c.size()), base.zero());
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] = base.add(r.c[i], a.c[i]);
            if (i < b.c.size()) r.c[i] = base.add(r.c[i], b.c[i]);
        }
        trim(r);
        return r;
    }
    Elt sub(const Elt& a, const Elt& b) const { return add(a, neg(b)); }
    Elt neg(const Elt& a) const {
        Elt r = a;
        for (auto& x : r.c) x = base.neg(x);
        return r;
    }
    Elt mul(const Elt& a, const Elt& b) const {
        if (a.c.empty() || b.c.empty()) return {};
        Elt r;
        r.c.assign(a.c.size() + b.c.size() - 1, base.zero());
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = base.add(r.c[i + j], base.mul(a.c[i], b.c[j]));
        trim(r);
        return r;
    }
    bool is_zero(const Elt& a) const { return a.c.empty(); }
    bool eq(const Elt& a, const Elt& b) const {
        if (a.c.size() != b.c.size()) return false;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (!base.eq(a.c[i], b.c[i])) return false;
        return true;
    }

    Elt derivative(const Elt& a) const {
        Elt r;
        for (std::size_t i = 1; i < a.c.size(); ++i)
            r.c.push_back(base.mul(base.from_int(std::int64_t(i)), a.c[i]));
        trim(r);
        return r;
    }

    typename R::Elt coeff(const Elt& a, std::size_t i) const {
        return i < a.c.size() ? a.c[i] : base.zero();
    }

    std::string to_string(const Elt& a) const {
        if (a.c.empty()) return "0";
        std::string s;
        for (std::size_t i = a.c.size(); i-- > 0;) {
            if (base.is_zero(a.c[i])) continue;
            if (!s.empty()) s += " + ";
            s += base.to_string(a.c[i]);
            if (i > 0) s += "*t^" + std::to_string(i);
        }
        return s;
    }
};

// Division with remainder over field coefficients.
template <class F>
void poly_divmod(const PolyRing<F>& ring, typename PolyRing<F>::Elt a,
                 const typename PolyRing<F>::Elt& b, typename PolyRing<F>::Elt& q,
                 typename PolyRing<F>::Elt& r) {
    static_assert(F::is_field);
    q = ring.zero();
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
    const auto& base = ring.base;
    while (!a.is_zero() && a.c.size() >= b.c.size()) {
        auto lead = base.mul(a.c.back(), base.inv(b.c.back()));
        std::size_t shift = a.c.size() - b.c.size();
        if (q.c.size() < shift + 1) q.c.resize(shift + 1, base.zero());
        q.c[shift] = base.add(q.c[shift], lead);
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[shift + i] = base.sub(a.c[shift + i], base.mul(lead, b.c[i]));
        ring.trim(a);
    }
    ring.trim(q);
    r = std::move(a);
}

// Monic gcd over field coefficients.
template <class F>
typename PolyRing<F>::Elt poly_gcd(const PolyRing<F>& ring, typename PolyRing<F>::Elt a,
                                   typename PolyRing<F>::Elt b) {
    while (!b.is_zero()) {
        typename PolyRing<F>::Elt q, r;
        poly_divmod(ring, a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        auto d = ring.base.inv(a.c.back());
        for (auto& x : a.c) x = ring.base.mul(x, d);
    }
    return a;
}

} // namespace bisetring
