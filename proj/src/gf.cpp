#include "bisetring/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace bisetring {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t powmod(std::uint64_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return std::uint32_t(r);
}

std::uint32_t find_primitive_root(std::uint32_t p) {
    std::uint32_t phi = p - 1;
    std::vector<std::uint32_t> factors;
    std::uint32_t m = phi;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) factors.push_back(m);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint32_t f : factors)
            if (powmod(g, phi / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

// Conway polynomials for the extension fields in use, low coefficient first,
// monic of degree k. x generates the multiplicative group of each.
const std::uint32_t* conway_poly(std::uint32_t p, std::uint32_t k) {
    static const std::uint32_t c_2_2[] = {1, 1, 1};        // x^2 + x + 1
    static const std::uint32_t c_2_3[] = {1, 1, 0, 1};     // x^3 + x + 1
    static const std::uint32_t c_2_4[] = {1, 1, 0, 0, 1};  // x^4 + x + 1
    static const std::uint32_t c_3_2[] = {2, 2, 1};        // x^2 + 2x + 2
    static const std::uint32_t c_5_2[] = {2, 4, 1};        // x^2 + 4x + 2
    if (p == 2 && k == 2) return c_2_2;
    if (p == 2 && k == 3) return c_2_3;
    if (p == 2 && k == 4) return c_2_4;
    if (p == 3 && k == 2) return c_3_2;
    if (p == 5 && k == 2) return c_5_2;
    return nullptr;
}

} // namespace

GfContextPtr GfContext::get(std::uint32_t p, std::uint32_t k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, GfContextPtr> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    auto ctx = GfContextPtr(new GfContext(p, k));
    registry.emplace(key, ctx);
    return ctx;
}

GfContext::GfContext(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("GF: p is not prime");
    if (k == 0) throw std::invalid_argument("GF: k must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("GF: field size exceeds 2^16");
    }
    q_ = std::uint32_t(q);

    if (k == 1) {
        gen_ = p > 2 ? find_primitive_root(p) : 1;
    } else {
        const std::uint32_t* c = conway_poly(p, k);
        if (!c)
            throw std::invalid_argument("GF: no irreducible polynomial on file for GF(" +
                                        std::to_string(p) + "^" + std::to_string(k) + ")");
        irred_.assign(c, c + k + 1);
        gen_ = p;  // the element x, packed base p
    }

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_raw(cur, gen_);
    }
    if (cur != 1) throw std::logic_error("GF: generator does not have order q-1");
}

std::uint32_t GfContext::add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t GfContext::neg(std::uint32_t a) const {
    if (k_ == 1) return a ? p_ - a : 0;
    if (p_ == 2) return a;
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = a % p_;
        r += (d ? p_ - d : 0) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

std::uint32_t GfContext::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

// polynomial multiplication mod the irreducible; used only to build tables
std::uint32_t GfContext::mul_raw(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return std::uint32_t(std::uint64_t(a) * b % p_);
    std::uint32_t da[16], db[16], prod[32] = {0};
    for (std::uint32_t i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce by the monic irreducible
    for (std::uint32_t d = 2 * k_ - 2; d + 1 > k_; --d) {
        std::uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k_; ++i)
            prod[d - k_ + i] = (prod[d - k_ + i] + c * (p_ - irred_[i] % p_)) % p_;
    }
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        r += prod[i] * mult;
        mult *= p_;
    }
    return r;
}

std::uint32_t GfContext::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

std::uint32_t GfContext::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t GfContext::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t l = std::uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[l];
}

std::uint32_t GfContext::from_int(std::int64_t i) const {
    std::int64_t m = i % std::int64_t(p_);
    if (m < 0) m += p_;
    return std::uint32_t(m);
}

std::string GfContext::elem_to_string(std::uint32_t a) const {
    if (k_ == 1) return std::to_string(a);
    // digits of a base p, rendered over the generator symbol
    std::string s;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = a / mult % p_;
        if (d) {
            if (!s.empty()) s += "+";
            if (i == 0)
                s += std::to_string(d);
            else {
                if (d != 1) s += std::to_string(d) + "*";
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        mult *= p_;
    }
    return s.empty() ? "0" : s;
}

} // namespace bisetring
