#pragma once

#include "bisetring/matrix.hpp"
#include "bisetring/prng.hpp"
#include "bisetring/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace bisetring {

// Characteristic coefficients rho_0..rho_n: (-1)^i rho_i is the coefficient
// of t^(n-i) in det(tI - a). Division-free, valid over any commutative ring.
// rho_1 is the trace and rho_n the determinant.
template <class R>
std::vector<typename R::Elt> char_coeffs(const R& ring, const Matrix<typename R::Elt>& a) {
    auto cp = char_poly(ring, a);  // monic, highest degree first
    for (std::size_t i = 1; i < cp.size(); i += 2) cp[i] = ring.neg(cp[i]);
    return cp;
}

template <class R>
typename R::Elt rho_k(const R& ring, const Matrix<typename R::Elt>& a, std::size_t k) {
    if (k > a.rows()) throw std::invalid_argument("rho_k: k exceeds the matrix size");
    return char_coeffs(ring, a)[k];
}

// k rho_k(a) = sum_{i=1..k} (-1)^(i-1) rho_{k-i}(a) tr(a^i), checked exactly
template <class R>
bool newton_identity_check(const R& ring, const Matrix<typename R::Elt>& a, std::size_t k) {
    if (k < 1 || k > a.rows())
        throw std::invalid_argument("newton_identity_check: need 1 <= k <= n");
    auto rho = char_coeffs(ring, a);
    std::vector<typename R::Elt> tr_pow;  // tr(a^i), i = 1..k
    auto p = a;
    for (std::size_t i = 1; i <= k; ++i) {
        tr_pow.push_back(mat_trace(ring, p));
        if (i < k) p = mat_mul(ring, p, a);
    }
    auto lhs = ring.mul(ring.from_int(std::int64_t(k)), rho[k]);
    auto rhs = ring.zero();
    for (std::size_t i = 1; i <= k; ++i) {
        auto term = ring.mul(rho[k - i], tr_pow[i - 1]);
        rhs = (i % 2 == 1) ? ring.add(rhs, term) : ring.sub(rhs, term);
    }
    return ring.eq(lhs, rhs);
}

// tr(a_1,...,a_k) = sum over permutations eta of {2..k} of
// tr(a_1 a_eta(2) ... a_eta(k)); symmetric in all k arguments
template <class R>
typename R::Elt symmetrized_trace(const R& ring,
                                  const std::vector<Matrix<typename R::Elt>>& as) {
    if (as.empty()) throw std::invalid_argument("symmetrized_trace: empty tuple");
    const std::size_t k = as.size();
    if (k == 1) return mat_trace(ring, as[0]);
    std::vector<std::size_t> idx(k - 1);
    for (std::size_t i = 0; i < k - 1; ++i) idx[i] = i + 1;
    auto total = ring.zero();
    do {
        auto prod = as[0];
        for (auto i : idx) prod = mat_mul(ring, prod, as[i]);
        total = ring.add(total, mat_trace(ring, prod));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return total;
}

// rho_k(a_1,...,a_k): the coefficient of t_1...t_k in rho_k(sum t_i a_i),
// computed by inclusion-exclusion over subsets; exact over any commutative
// ring since all non-multilinear monomials cancel
template <class R>
typename R::Elt polarized_rho(const R& ring,
                              const std::vector<Matrix<typename R::Elt>>& as) {
    if (as.empty()) throw std::invalid_argument("polarized_rho: empty tuple");
    const std::size_t k = as.size();
    const std::size_t n = as[0].rows();
    if (k > n) throw std::invalid_argument("polarized_rho: k exceeds the matrix size");
    auto total = ring.zero();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        auto sum = mat_zero(ring, n, n);
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) sum = mat_add(ring, sum, as[i]);
        auto term = rho_k(ring, sum, k);
        bool negate = (k - std::size_t(__builtin_popcount(mask))) % 2 == 1;
        total = negate ? ring.sub(total, term) : ring.add(total, term);
    }
    return total;
}

// Set partition of {1..r} (stored 0-based) with sign (-1)^(r - #blocks);
// blocks are ordered by smallest member.
struct SetPartition {
    std::vector<std::vector<std::uint8_t>> blocks;
    int sign = 1;
};

// all set partitions of {1..r} in restricted-growth-string order; r <= 9
std::vector<SetPartition> enumerate_partitions(unsigned r);

// rho_r(X_1,...,X_r) = sum over partitions of (-1)^Delta prod_blocks tr_block
template <class R>
bool verify_partition_identity(const R& ring, const std::vector<Matrix<typename R::Elt>>& as) {
    const std::size_t r = as.size();
    auto lhs = polarized_rho(ring, as);
    // symmetrized traces per subset of {0..r-1}, memoized
    std::vector<typename R::Elt> tr_subset(std::size_t(1) << r, ring.zero());
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        std::vector<Matrix<typename R::Elt>> tuple;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) tuple.push_back(as[i]);
        tr_subset[mask] = symmetrized_trace(ring, tuple);
    }
    auto rhs = ring.zero();
    for (const auto& part : enumerate_partitions(unsigned(r))) {
        auto prod = ring.one();
        for (const auto& block : part.blocks) {
            std::uint32_t mask = 0;
            for (auto i : block) mask |= 1u << i;
            prod = ring.mul(prod, tr_subset[mask]);
        }
        rhs = part.sign > 0 ? ring.add(rhs, prod) : ring.sub(rhs, prod);
    }
    return ring.eq(lhs, rhs);
}

// The two 6x6 diagonal families over GF(4) separating TT from TTL in
// characteristic 2 at r = 3.
struct Char2Report {
    bool family1_ttl_holds = false;
    bool family1_tt_fails = false;
    bool identity_value_ok = false;  // 1 + alpha^3 + alpha'^3 = alpha alpha' != 0
    bool family2_tt_holds = false;
    bool family2_ttl_fails = false;
    bool commuting_triples_vanish = false;
    std::string family1_witness;  // element and power with nonzero trace
    std::string family2_witness;  // basis pair with nonzero tr(a1 a2)
    bool ok() const {
        return family1_ttl_holds && family1_tt_fails && identity_value_ok &&
               family2_tt_holds && family2_ttl_fails && commuting_triples_vanish;
    }
};

Char2Report char2_example_suite();

// Evaluation of the four vanishing conditions on a spanned matrix space:
//   TR   rho_k(v) = 0          TT   tr(v^k) = 0          (v in the span)
//   TRL  polarized rho_k = 0   TTL  symmetrized traces = 0   (basis tuples)
// plus every implication among them that holds for the ring's
// characteristic.
struct TrTtReport {
    bool tr_holds = false, tt_holds = false, trl_holds = false, ttl_holds = false;
    bool exhaustive_span = false;  // span sampling covered every element
    std::vector<std::string> violated_implications;
    bool implications_ok() const { return violated_implications.empty(); }
};

namespace detail {

template <class R>
bool span_condition(const R& ring, const std::vector<Matrix<typename R::Elt>>& basis,
                    unsigned r, bool powers_of_rho, std::size_t samples, SplitMix64& rng,
                    bool& exhaustive);

template <class R>
bool tuple_condition(const R& ring, const std::vector<Matrix<typename R::Elt>>& basis,
                     unsigned r, bool polarized);

} // namespace detail

template <class R>
TrTtReport tr_tt_implication_check(const R& ring,
                                   const std::vector<Matrix<typename R::Elt>>& basis,
                                   unsigned r, std::size_t samples, std::uint64_t seed) {
    if (basis.empty()) throw std::invalid_argument("tr_tt_implication_check: empty basis");
    const std::size_t n = basis[0].rows();
    if (r < 1 || r > n)
        throw std::invalid_argument("tr_tt_implication_check: need 1 <= r <= n");
    SplitMix64 rng(seed);
    TrTtReport rep;
    bool ex1 = false, ex2 = false;
    rep.tr_holds = detail::span_condition(ring, basis, r, true, samples, rng, ex1);
    rep.tt_holds = detail::span_condition(ring, basis, r, false, samples, rng, ex2);
    rep.exhaustive_span = ex1 && ex2;
    rep.trl_holds = detail::tuple_condition(ring, basis, r, true);
    rep.ttl_holds = detail::tuple_condition(ring, basis, r, false);

    auto chr = ring.characteristic();
    auto factorial_invertible = [&](unsigned m) { return chr == 0 || chr > m; };
    if (rep.tr_holds && !rep.tt_holds)
        rep.violated_implications.push_back("TR => TT");
    if (rep.trl_holds != rep.ttl_holds)
        rep.violated_implications.push_back("TRL <=> TTL");
    if (factorial_invertible(r >= 1 ? r - 1 : 0) && rep.ttl_holds && !rep.tt_holds)
        rep.violated_implications.push_back("TTL => TT with (r-1)! invertible");
    if (factorial_invertible(r)) {
        if (rep.tt_holds && !rep.tr_holds)
            rep.violated_implications.push_back("TT => TR with r! invertible");
        bool all = rep.tr_holds && rep.tt_holds && rep.trl_holds && rep.ttl_holds;
        bool none = !rep.tr_holds && !rep.tt_holds && !rep.trl_holds && !rep.ttl_holds;
        if (!(all || none))
            rep.violated_implications.push_back("equivalence with r! invertible");
    }
    return rep;
}

namespace detail {

// walk span elements: exhaustively over GF(q)^d when small, sampled otherwise
template <class R, class Fn>
void for_span_elements(const R& ring, const std::vector<Matrix<typename R::Elt>>& basis,
                       std::size_t samples, SplitMix64& rng, bool& exhaustive, Fn&& fn) {
    const std::size_t d = basis.size();
    const std::size_t n = basis[0].rows();
    std::uint64_t total = 0;
    if constexpr (std::is_same_v<R, GfField>) {
        double cnt = 1;
        for (std::size_t i = 0; i < d; ++i) cnt *= ring.size();
        if (cnt <= 4096) total = std::uint64_t(cnt);
    }
    exhaustive = total != 0;
    if (exhaustive) {
        if constexpr (std::is_same_v<R, GfField>) {
            for (std::uint64_t code = 0; code < total; ++code) {
                auto v = mat_zero(ring, n, n);
                std::uint64_t c = code;
                for (std::size_t i = 0; i < d; ++i) {
                    auto coeff = ring.element(std::uint32_t(c % ring.size()));
                    c /= ring.size();
                    if (!ring.is_zero(coeff))
                        v = mat_add(ring, v, mat_scale(ring, coeff, basis[i]));
                }
                fn(v);
            }
        }
        return;
    }
    for (std::size_t s = 0; s < samples; ++s) {
        auto v = mat_zero(ring, n, n);
        for (std::size_t i = 0; i < d; ++i) {
            auto coeff = ring.from_int(rng.range(-5, 5));
            if constexpr (std::is_same_v<R, GfField>)
                coeff = ring.element(std::uint32_t(rng.below(ring.size())));
            if (!ring.is_zero(coeff)) v = mat_add(ring, v, mat_scale(ring, coeff, basis[i]));
        }
        fn(v);
    }
}

template <class R>
bool span_condition(const R& ring, const std::vector<Matrix<typename R::Elt>>& basis,
                    unsigned r, bool powers_of_rho, std::size_t samples, SplitMix64& rng,
                    bool& exhaustive) {
    bool holds = true;
    for_span_elements(ring, basis, samples, rng, exhaustive, [&](const auto& v) {
        if (!holds) return;
        if (powers_of_rho) {
            auto rho = char_coeffs(ring, v);
            for (unsigned k = 1; k <= r; ++k)
                if (!ring.is_zero(rho[k])) {
                    holds = false;
                    return;
                }
        } else {
            auto p = v;
            for (unsigned k = 1; k <= r; ++k) {
                if (!ring.is_zero(mat_trace(ring, p))) {
                    holds = false;
                    return;
                }
                if (k < r) p = mat_mul(ring, p, v);
            }
        }
    });
    return holds;
}

template <class R>
bool tuple_condition(const R& ring, const std::vector<Matrix<typename R::Elt>>& basis,
                     unsigned r, bool polarized) {
    const std::size_t d = basis.size();
    for (unsigned k = 1; k <= r; ++k) {
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            std::vector<Matrix<typename R::Elt>> tuple;
            for (auto i : idx) tuple.push_back(basis[i]);
            auto val = polarized ? polarized_rho(ring, tuple) : symmetrized_trace(ring, tuple);
            if (!ring.is_zero(val)) return false;
            std::size_t pos = 0;
            while (pos < k && idx[pos] + 1 == d) idx[pos++] = 0;
            if (pos == k) break;
            ++idx[pos];
        }
    }
    return true;
}

} // namespace detail

} // namespace bisetring
