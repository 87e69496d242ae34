#include "bisetring/span_pattern.hpp"

#include <stdexcept>

namespace bisetring {

SpanPattern SpanPattern::identity(std::uint32_t n) {
    SpanPattern p(n);
    for (std::uint32_t i = 0; i < n; ++i) p.set(i, i);
    return p;
}

SpanPattern SpanPattern::all(std::uint32_t n) {
    SpanPattern p(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) p.set(i, j);
    return p;
}

bool SpanPattern::diagonal_empty() const {
    for (std::uint32_t i = 0; i < n_; ++i)
        if (test(i, i)) return false;
    return true;
}

bool SpanPattern::contains_diagonal() const {
    for (std::uint32_t i = 0; i < n_; ++i)
        if (!test(i, i)) return false;
    return true;
}

SpanPattern SpanPattern::transpose() const {
    SpanPattern p(n_);
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = 0; j < n_; ++j)
            if (test(i, j)) p.set(j, i);
    return p;
}

SpanPattern operator|(const SpanPattern& a, const SpanPattern& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("SpanPattern: size mismatch");
    SpanPattern r = a;
    r.bits_ |= b.bits_;
    return r;
}

std::string SpanPattern::to_lines() const {
    std::string s;
    for (std::uint32_t i = 0; i < n_; ++i) {
        for (std::uint32_t j = 0; j < n_; ++j) s += test(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

SpanPattern span_product(const SpanPattern& a, const SpanPattern& b) {
    if (a.n() != b.n()) throw std::invalid_argument("span_product: size mismatch");
    const std::uint32_t n = a.n();
    SpanPattern r(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t k = 0; k < n; ++k) {
            if (!a.test(i, k)) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                if (b.test(k, j)) r.set(i, j);
        }
    return r;
}

SpanPattern phi_pattern(const HBiset& s) {
    const auto& ctx = *s.ctx();
    const auto& g = *ctx.group();
    const auto& reps = ctx.cosets().representatives;
    const std::uint32_t n = std::uint32_t(reps.size());
    SpanPattern p(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t ri_inv = g.inv(reps[i]);
        for (std::uint32_t j = 0; j < n; ++j)
            if (s.contains_element(g.mul(ri_inv, reps[j]))) p.set(i, j);
    }
    return p;
}

std::size_t pattern_dimension(const HBiset& s) {
    std::size_t sz = s.size(), h = s.ctx()->h().order();
    if (sz % h != 0)
        throw std::logic_error("pattern_dimension: |S| is not divisible by |H|");
    return sz / h;
}

} // namespace bisetring
