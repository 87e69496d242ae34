#pragma once

#include "bisetring/biset.hpp"
#include "bisetring/matrix.hpp"
#include "bisetring/poly.hpp"
#include "bisetring/prng.hpp"
#include "bisetring/ring.hpp"
#include "bisetring/span_pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bisetring {

// nonzero-entry support of a matrix
SpanPattern support_pattern(const GfField& field, const Matrix<Gf>& a);

// Span of {d * a * d' : d, d' diagonal}, computed by actual span arithmetic
// over the field and returned as its matrix-unit support.
SpanPattern kk_span_pattern(const GfField& field, const Matrix<Gf>& a);

// uniform nonzero entries on the pattern, zero elsewhere
Matrix<Gf> random_patterned_element(const GfField& field, const SpanPattern& p,
                                    SplitMix64& rng);

// perfect matching inside the pattern, if one exists: a permutation matrix
// supported on the pattern (determinant +-1 over any field)
std::optional<std::vector<std::uint32_t>> pattern_matching(const SpanPattern& p);

struct MainIsomorphismReport {
    std::size_t classes = 0;
    std::size_t pairs_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Executable semiring isomorphism: checks phi(S*S') = phi(S)*phi(S') and
// phi(S u S') = phi(S) | phi(S') over all pairs of single-class bisets plus
// sampled unions, injectivity of phi, the transpose/involution law, and (over
// GF(q)) that products of random patterned elements land in and fill the
// predicted span.
MainIsomorphismReport verify_main_isomorphism(const PairContextPtr& ctx,
                                              std::size_t union_samples,
                                              std::uint64_t seed,
                                              std::uint32_t q = 101);

// True iff the n^2 products theta^i a theta^j span the full matrix algebra.
// theta must be separable (gcd of its characteristic polynomial and the
// derivative is 1); otherwise this throws std::invalid_argument.
template <class F>
bool generation_test(const F& field, const Matrix<typename F::Elt>& a,
                     const Matrix<typename F::Elt>& theta) {
    static_assert(F::is_field);
    const std::size_t n = a.rows();
    if (theta.rows() != n || theta.cols() != n || a.cols() != n)
        throw std::invalid_argument("generation_test: shape mismatch");

    PolyRing<F> pr(field);
    auto cp = pr.from_coeffs([&] {
        auto c = char_poly(field, theta);  // highest degree first
        return std::vector<typename F::Elt>(c.rbegin(), c.rend());
    }());
    if (poly_gcd(pr, cp, pr.derivative(cp)) != pr.one())
        throw std::invalid_argument("generation_test: theta is not separable");

    Matrix<typename F::Elt> rows(n * n, n * n, field.zero());
    auto ti = mat_identity(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto tia = mat_mul(field, ti, a);
        auto tiatj = tia;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    rows(i * n + j, r * n + c) = tiatj(r, c);
            tiatj = mat_mul(field, tiatj, theta);
        }
        ti = mat_mul(field, ti, theta);
    }
    return mat_rank(field, rows) == n * n;
}

struct InvertibleSearch {
    bool found = false;
    bool used_permutation = false;  // came from the matching strategy
    Matrix<Gf> element;
    Gf determinant;
};

// An invertible element supported on phi(S): first the permutation element
// given by a perfect matching inside the pattern, then random fills.
InvertibleSearch find_invertible_in_span(const GfField& field, const HBiset& s,
                                         std::size_t attempts, std::uint64_t seed);

// True iff the span has zero trace, i.e. the pattern diagonal is empty,
// which happens exactly when H is not contained in S. Both routes are
// evaluated and must agree.
bool trace_zero_check(const HBiset& s);

// phi(H') for an intermediate subgroup H <= H' <= G; verified against the
// commutant pattern of the diagonal matrices constant on H'-blocks.
SpanPattern centralizer_pattern(const PairContextPtr& ctx, const SubgroupH& hprime);

// phi(N sigma) for sigma normalizing N >= H; verified against the
// permuted-block description g_i N sigma = g_j N.
SpanPattern twisted_centralizer_pattern(const PairContextPtr& ctx, const SubgroupH& n,
                                        std::uint32_t sigma);

struct KakChainReport {
    std::vector<std::size_t> power_dims;       // dim_K (KaK)^m for m = 1..m_max
    std::vector<SpanPattern> power_patterns;   // span support per power
    std::vector<std::size_t> conj_chain_dims;  // dim over L of K(a,m), m = 0..
    std::uint32_t algebra_height = 0;
    std::uint32_t biset_height = 0;
    std::size_t retries = 0;  // non-generic samples that were rejected
};

// Powers of the actual span K a K for a random generic invertible a
// supported on phi(S), S a single class, with the algebra-side height read
// off the chain K(a,m) = (KaK)^m a^{-m} and checked against the biset side.
KakChainReport kak_power_chain(const GfField& field, const HBiset& s, std::uint32_t m_max,
                               std::uint64_t seed);

} // namespace bisetring
