#include "bisetring/kummer.hpp"

#include "bisetring/matrix.hpp"
#include "bisetring/matrix_model.hpp"
#include "bisetring/newton.hpp"
#include "bisetring/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisetring {

namespace {

// witness tuple g_1..g_k in S with product 1, by depth-first search guided
// by elementwise power masks
std::vector<std::uint32_t> reconstruct_identity_tuple(const HBiset& s, std::uint32_t k) {
    const auto& ctx = *s.ctx();
    const auto& g = *ctx.group();
    std::vector<Bitset> powers{s.element_mask()};  // powers[m] = elements of S^(m+1)
    for (std::uint32_t m = 1; m < k; ++m)
        powers.push_back(ctx.product_elementwise(powers.back(), s.element_mask()));
    if (!powers[k - 1].test(0))
        throw std::logic_error("kummer witness: identity is not a k-fold product");

    std::vector<std::uint32_t> tuple;
    std::uint32_t prefix = 0;  // identity
    for (std::uint32_t depth = 0; depth < k; ++depth) {
        std::uint32_t remaining = k - depth - 1;
        bool advanced = false;
        for (auto cand = s.element_mask().first(); cand < g.order();
             cand = s.element_mask().next(cand)) {
            std::uint32_t next = g.mul(prefix, std::uint32_t(cand));
            bool closes = remaining == 0 ? next == 0 : powers[remaining - 1].test(g.inv(next));
            if (closes) {
                tuple.push_back(std::uint32_t(cand));
                prefix = next;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("kummer witness: dead end in search");
    }
    return tuple;
}

// one closed walk of length k in the pattern digraph, as unit coordinates
std::vector<std::pair<std::uint32_t, std::uint32_t>> closed_walk(const SpanPattern& p,
                                                                 std::uint32_t k) {
    const std::uint32_t n = p.n();
    // reach[m](i,j) true iff a length-m path i -> j exists
    std::vector<SpanPattern> reach{SpanPattern::identity(n), p};
    for (std::uint32_t m = 2; m <= k; ++m) reach.push_back(span_product(reach.back(), p));
    std::uint32_t start = n;
    for (std::uint32_t v = 0; v < n; ++v)
        if (reach[k].test(v, v)) {
            start = v;
            break;
        }
    if (start == n) return {};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> walk;
    std::uint32_t cur = start;
    for (std::uint32_t m = 0; m < k; ++m) {
        std::uint32_t remaining = k - m - 1;
        for (std::uint32_t w = 0; w < n; ++w) {
            if (!p.test(cur, w) || !reach[remaining].test(w, start)) continue;
            walk.push_back({cur, w});
            cur = w;
            break;
        }
    }
    if (walk.size() != k || cur != start)
        throw std::logic_error("kummer: closed-walk reconstruction failed");
    return walk;
}

} // namespace

BisetKummerResult biset_kummer_check(const HBiset& s, unsigned r) {
    const auto& ctx = s.ctx();
    if (r > ctx->coset_count())
        throw std::invalid_argument("biset_kummer_check: r exceeds [G:H]");
    BisetKummerResult out;
    HBiset power = HBiset::unit(ctx);
    for (unsigned k = 1; k <= r; ++k) {
        power = power * s;
        // 1 in S^k iff H subset of S^k, S^k being an H-biset
        bool has_unit_class = power.contains_unit_class();
        if (has_unit_class != power.contains_element(0))
            throw std::logic_error("biset_kummer_check: H-subset and identity tests differ");
        if (has_unit_class) {
            out.ok = false;
            out.failure_k = k;
            out.witness = reconstruct_identity_tuple(s, k);
            // the witness really multiplies to the identity inside S
            std::uint32_t prod = 0;
            for (auto x : out.witness) {
                if (!s.contains_element(x))
                    throw std::logic_error("biset_kummer_check: witness leaves S");
                prod = ctx->group()->mul(prod, x);
            }
            if (prod != 0)
                throw std::logic_error("biset_kummer_check: witness product is not 1");
            break;
        }
    }
    return out;
}

MatrixKummerResult matrix_kummer_check(const HBiset& s, unsigned r) {
    const auto& ctx = s.ctx();
    if (r > ctx->coset_count())
        throw std::invalid_argument("matrix_kummer_check: r exceeds [G:H]");
    MatrixKummerResult out;
    SpanPattern p = phi_pattern(s);
    const std::uint32_t n = p.n();
    for (unsigned k = 1; k <= r; ++k) {
        auto walk = closed_walk(p, k);
        if (walk.empty()) continue;
        out.ok = false;
        out.failure_k = k;
        out.witness = walk;
        // ground the witness in actual matrix arithmetic over Z (exact in Q)
        IntRing z;
        std::vector<Matrix<BigInt>> tuple;
        for (auto [i, j] : walk) {
            Matrix<BigInt> e(n, n, z.zero());
            e(i, j) = z.one();
            tuple.push_back(std::move(e));
        }
        out.witness_value = symmetrized_trace(z, tuple);
        if (out.witness_value.is_zero())
            throw std::logic_error("matrix_kummer_check: witness has zero symmetrized trace");
        break;
    }
    return out;
}

KummerVerdict kummer_verdict(const HBiset& s, unsigned r) {
    KummerVerdict v;
    v.r = r;
    v.biset_side = biset_kummer_check(s, r);
    v.matrix_side = matrix_kummer_check(s, r);
    if (v.biset_side.ok != v.matrix_side.ok ||
        v.biset_side.failure_k != v.matrix_side.failure_k)
        throw std::logic_error("kummer_verdict: biset and matrix sides disagree");
    return v;
}

KummerSweepReport kummer_equivalence_sweep(const std::vector<PairContextPtr>& family,
                                     unsigned r_cap) {
    KummerSweepReport rep;
    for (const auto& ctx : family) {
        const std::size_t nc = ctx->class_count();
        std::vector<HBiset> bisets;
        for (std::uint32_t c = 0; c < nc; ++c)
            bisets.push_back(HBiset::from_classes(ctx, {c}));
        for (std::uint32_t c1 = 0; c1 < nc; ++c1)
            for (std::uint32_t c2 = c1 + 1; c2 < nc; ++c2)
                bisets.push_back(HBiset::from_classes(ctx, {c1, c2}));
        unsigned r_max = unsigned(std::min<std::size_t>(r_cap, ctx->coset_count()));
        for (const auto& s : bisets)
            for (unsigned r = 1; r <= r_max; ++r) {
                ++rep.instances;
                try {
                    kummer_verdict(s, r);
                } catch (const std::logic_error& e) {
                    rep.mismatches.push_back(e.what());
                }
            }
    }
    return rep;
}

KaKakReport ka_vs_kak_check(const HBiset& s, unsigned r) {
    if (s.class_mask().count() != 1)
        throw std::invalid_argument("ka_vs_kak_check: S must be a single class");
    KaKakReport rep;
    rep.r = r;
    rep.family_note =
        "Ka side quantifies over diagonal multiples of a generic pattern element; "
        "rho_k vanishes on all of them iff every principal k x k pattern minor is "
        "identically zero, i.e. no k-subset of cosets carries a permutation inside "
        "the pattern";

    SpanPattern p = phi_pattern(s);
    const std::uint32_t n = p.n();
    if (r > n) throw std::invalid_argument("ka_vs_kak_check: r exceeds [G:H]");

    // Ka side: search for a k-subset of coset indices whose induced pattern
    // block admits a perfect matching
    for (unsigned k = 1; k <= r && rep.ka_ok; ++k) {
        // enumerate k-subsets of {0..n-1}
        std::vector<std::uint32_t> idx(k);
        for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            SpanPattern block(k);
            for (std::uint32_t a = 0; a < k; ++a)
                for (std::uint32_t b = 0; b < k; ++b)
                    if (p.test(idx[a], idx[b])) block.set(a, b);
            if (pattern_matching(block)) {
                rep.ka_ok = false;
                rep.ka_failure_k = k;
                rep.ka_witness_subset = idx;
                break;
            }
            // next combination
            std::int32_t pos = std::int32_t(k) - 1;
            while (pos >= 0 && idx[pos] == n - k + std::uint32_t(pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::uint32_t q = std::uint32_t(pos) + 1; q < k; ++q)
                idx[q] = idx[q - 1] + 1;
        }
    }

    auto kak = matrix_kummer_check(s, r);
    rep.kak_ok = kak.ok;
    rep.kak_failure_k = kak.failure_k;

    // cumulative verdicts must agree at every r' (Ka Kummer iff KaK Kummer)
    bool ka_cum = true, kak_cum = true;
    for (unsigned rp = 1; rp <= r; ++rp) {
        if (rep.ka_failure_k != 0 && rp >= rep.ka_failure_k) ka_cum = false;
        if (rep.kak_failure_k != 0 && rp >= rep.kak_failure_k) kak_cum = false;
        if (ka_cum != kak_cum)
            throw std::logic_error("ka_vs_kak_check: Ka and KaK Kummer verdicts diverge");
    }
    return rep;
}

TraceVariantSearch trace_variant_transfer_search(const std::vector<PairContextPtr>& family,
                                             unsigned r_cap, std::uint64_t seed,
                                             std::uint32_t q, std::size_t samples) {
    TraceVariantSearch out;
    GfField field(q);
    SplitMix64 rng(seed);
    for (const auto& ctx : family) {
        const std::uint32_t n = std::uint32_t(ctx->coset_count());
        unsigned r_max = std::min<unsigned>(r_cap, n);
        for (std::uint32_t c = 0; c < ctx->class_count(); ++c) {
            SpanPattern p = phi_pattern(HBiset::from_classes(ctx, {c}));
            auto a = random_patterned_element(field, p, rng);
            for (unsigned k = 1; k <= r_max; ++k) {
                ++out.instances;
                bool ka_tr_holds = true;   // tr((d a)^k) = 0 on sampled diagonals d
                bool kak_tr_holds = true;  // tr(x^k) = 0 on sampled pattern elements x
                for (std::size_t t = 0; t < samples; ++t) {
                    Matrix<Gf> da = a;
                    for (std::uint32_t i = 0; i < n; ++i) {
                        Gf d = field.element(std::uint32_t(rng.below(q)));
                        for (std::uint32_t j = 0; j < n; ++j) da(i, j) = d * a(i, j);
                    }
                    if (!field.is_zero(mat_trace(field, mat_pow(field, da, k))))
                        ka_tr_holds = false;
                    auto x = random_patterned_element(field, p, rng);
                    if (!field.is_zero(mat_trace(field, mat_pow(field, x, k))))
                        kak_tr_holds = false;
                }
                if (ka_tr_holds && !kak_tr_holds) {
                    ++out.candidates;
                    out.notes.push_back("class " + std::to_string(c) + ", k = " +
                                        std::to_string(k));
                }
            }
        }
    }
    return out;
}

KummerClassReport classify_kummer_class(const HBiset& s) {
    if (s.class_mask().count() != 1)
        throw std::invalid_argument("classify_kummer_class: S must be a single class");
    const auto& ctx = s.ctx();
    const auto& g = *ctx->group();
    const std::size_t n = ctx->coset_count();
    if (n < 2) throw std::invalid_argument("classify_kummer_class: needs [G:H] >= 2");

    KummerClassReport rep;
    auto check = biset_kummer_check(s, unsigned(n - 1));
    rep.kummer = check.ok;
    rep.failure_k = check.failure_k;
    rep.witness = check.witness;
    if (!rep.kummer) return rep;

    rep.h_trivial = ctx->h().order() == 1;
    rep.single_element = s.size() == 1;
    if (!rep.h_trivial || !rep.single_element)
        throw std::logic_error("classify_kummer_class: Kummer class with nontrivial structure");

    std::uint32_t gen = std::uint32_t(s.element_mask().first());
    rep.generator = gen;
    // cosets H, gH, ..., g^(n-1)H distinct; since H = 1 these are the powers
    std::vector<bool> seen(g.order(), false);
    rep.cosets_distinct = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t x = g.pow(gen, std::int64_t(i));
        if (seen[x]) rep.cosets_distinct = false;
        seen[x] = true;
    }
    rep.g_cyclic = g.order() == n && g.order_of(gen) == n;
    if (!rep.cosets_distinct || !rep.g_cyclic)
        throw std::logic_error("classify_kummer_class: Kummer class fails the cyclic classification");
    return rep;
}

} // namespace bisetring
