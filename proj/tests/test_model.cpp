#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bisetring/group_spec.hpp"
#include "bisetring/matrix_model.hpp"

#include <vector>

using namespace bisetring;

namespace {

PairContextPtr make_ctx(const char* spec) {
    auto [g, h] = build_group_with_stabilizer(spec);
    return PairContext::make(g, h);
}

// every intermediate subgroup H <= H' <= G, found as the subgroup bisets
std::vector<SubgroupH> intermediate_subgroups(const PairContextPtr& ctx) {
    std::vector<SubgroupH> out;
    const std::size_t nc = ctx->class_count();
    for (std::uint64_t mask = 1; mask < (1ull << nc); ++mask) {
        if (!(mask & 1)) continue;  // must contain H
        Bitset cm(nc);
        for (std::size_t c = 0; c < nc; ++c)
            if (mask >> c & 1) cm.set(c);
        HBiset s = HBiset::from_class_mask(ctx, std::move(cm));
        if (s.is_subgroup())
            out.push_back(SubgroupH::from_mask(ctx->group(), s.element_mask()));
    }
    return out;
}

} // namespace

TEST_CASE("phi patterns: frozen shapes") {
    auto ctx = make_ctx("dihedral:4");
    auto h = HBiset::unit(ctx);
    auto full = HBiset::full(ctx);
    CHECK(phi_pattern(h) == SpanPattern::identity(4));
    CHECK(phi_pattern(full) == SpanPattern::all(4));

    auto s = HBiset::from_classes(ctx, {1});  // H sigma H
    auto p = phi_pattern(s);
    CHECK(p.count() == 8);
    CHECK(pattern_dimension(s) == 2);
    CHECK(p.diagonal_empty());

    // pattern lines serialization: diagonal for H
    CHECK(phi_pattern(h).to_lines() == "1000\n0100\n0010\n0001\n");

    // unit and absorbing laws of the boolean product
    CHECK(span_product(SpanPattern::identity(4), p) == p);
    CHECK(span_product(p, SpanPattern::identity(4)) == p);
    CHECK(span_product(SpanPattern::all(4), SpanPattern::all(4)) == SpanPattern::all(4));
}

TEST_CASE("pattern dimension formula across the family") {
    for (const char* spec : {"cyclic:6", "dihedral:5", "symmetric:4", "alternating:4",
                             "frobenius:7:3:2", "frobenius:5:4:2"}) {
        auto ctx = make_ctx(spec);
        const std::size_t n = ctx->coset_count();
        for (std::uint64_t mask = 0; mask < (1ull << ctx->class_count()); ++mask) {
            Bitset cm(ctx->class_count());
            for (std::size_t c = 0; c < ctx->class_count(); ++c)
                if (mask >> c & 1) cm.set(c);
            HBiset s = HBiset::from_class_mask(ctx, std::move(cm));
            CHECK(phi_pattern(s).count() == n * s.size() / ctx->h().order());
            if (!s.is_empty())
                CHECK(pattern_dimension(s) == s.size() / ctx->h().order());
        }
    }
}

TEST_CASE("main isomorphism verification: exhaustive families") {
    for (const char* spec : {"symmetric:3", "dihedral:4", "frobenius:7:3:2"}) {
        auto rep = verify_main_isomorphism(make_ctx(spec), 6, 42);
        CHECK(rep.ok());
        CHECK(rep.pairs_checked > 0);
        for (const auto& f : rep.failures) MESSAGE(f);
    }
}

TEST_CASE("generation test") {
    GfField F(101);
    // all-ones a with distinct diagonal theta spans everything
    for (std::size_t n = 2; n <= 4; ++n) {
        Matrix<Gf> a(n, n, F.one());
        Matrix<Gf> theta(n, n, F.zero());
        for (std::size_t i = 0; i < n; ++i) theta(i, i) = F.from_int(std::int64_t(i + 1));
        CHECK(generation_test(F, a, theta));

        // diagonal a generates only the diagonal
        Matrix<Gf> d(n, n, F.zero());
        for (std::size_t i = 0; i < n; ++i) d(i, i) = F.from_int(std::int64_t(2 * i + 1));
        CHECK(!generation_test(F, d, theta));
    }
    // e_12 in M_2: KaK is one-dimensional
    {
        Matrix<Gf> e12(2, 2, F.zero());
        e12(0, 1) = F.one();
        Matrix<Gf> theta(2, 2, F.zero());
        theta(0, 0) = F.from_int(1);
        theta(1, 1) = F.from_int(2);
        CHECK(!generation_test(F, e12, theta));
    }
    // non-separable theta is reported
    {
        Matrix<Gf> a(3, 3, F.one());
        Matrix<Gf> theta(3, 3, F.zero());
        theta(0, 0) = theta(1, 1) = F.one();
        theta(2, 2) = F.from_int(2);
        CHECK_THROWS_AS(generation_test(F, a, theta), std::invalid_argument);
    }
    // rationals work through the same template
    {
        RatField Q;
        Matrix<BigRat> a(2, 2, Q.one());
        Matrix<BigRat> theta(2, 2, Q.zero());
        theta(0, 0) = Q.from_int(1);
        theta(1, 1) = Q.from_int(2);
        CHECK(generation_test(Q, a, theta));
    }
}

TEST_CASE("invertible elements in spans") {
    // S = H gives the identity matrix
    {
        auto ctx = make_ctx("dihedral:4");
        GfField F(5);
        auto r = find_invertible_in_span(F, HBiset::unit(ctx), 10, 1);
        CHECK(r.found);
        CHECK(r.used_permutation);
        CHECK(r.element == mat_identity(F, 4));
    }
    // D4 sigma class over GF(5)
    {
        auto ctx = make_ctx("dihedral:4");
        GfField F(5);
        auto s = HBiset::from_classes(ctx, {1});
        auto r = find_invertible_in_span(F, s, 10, 1);
        CHECK(r.found);
        CHECK(!F.is_zero(r.determinant));
        CHECK(phi_pattern(s).contains(support_pattern(F, r.element)));
    }
    // GF(2) still works: the permutation element has det 1
    {
        auto ctx = make_ctx("frobenius:7:3:2");
        GfField F(2);
        for (std::uint32_t c = 0; c < ctx->class_count(); ++c) {
            auto r = find_invertible_in_span(F, HBiset::from_classes(ctx, {c}), 10, 1);
            CHECK(r.found);
            CHECK(r.used_permutation);
            CHECK(r.determinant == F.one());
        }
    }
    // every nonempty pattern in the family groups carries a permutation element
    for (const char* spec : {"cyclic:8", "dihedral:6", "symmetric:4", "alternating:4"}) {
        auto ctx = make_ctx(spec);
        GfField F(101);
        for (std::uint32_t c = 0; c < ctx->class_count(); ++c) {
            auto r = find_invertible_in_span(F, HBiset::from_classes(ctx, {c}), 5, 9);
            CHECK(r.found);
            CHECK(r.used_permutation);
        }
    }
    CHECK_THROWS_AS(
        find_invertible_in_span(GfField(5), HBiset::empty(make_ctx("cyclic:4")), 5, 0),
        std::invalid_argument);
}

TEST_CASE("trace lemma: zero trace iff empty diagonal iff H not in S") {
    auto ctx = make_ctx("dihedral:4");
    CHECK(!trace_zero_check(HBiset::unit(ctx)));
    CHECK(trace_zero_check(HBiset::from_classes(ctx, {1})));
    CHECK(!trace_zero_check(HBiset::full(ctx)));
    for (const char* spec : {"symmetric:4", "frobenius:7:3:2", "cyclic:6"}) {
        auto c = make_ctx(spec);
        for (std::uint32_t cls = 0; cls < c->class_count(); ++cls) {
            auto s = HBiset::from_classes(c, {cls});
            CHECK(trace_zero_check(s) == (cls != 0));
        }
    }
}

TEST_CASE("centralizer patterns for every intermediate subgroup") {
    for (const char* spec :
         {"dihedral:4", "dihedral:6", "symmetric:4", "frobenius:7:3:2", "cyclic:8"}) {
        auto ctx = make_ctx(spec);
        for (const auto& hp : intermediate_subgroups(ctx)) {
            auto p = centralizer_pattern(ctx, hp);  // throws on mismatch
            CHECK(p.count() ==
                  ctx->coset_count() * (hp.order() / ctx->h().order()));
            CHECK(p.contains_diagonal());
        }
        // H' = H gives the diagonal, H' = G everything
        auto ph = centralizer_pattern(ctx, ctx->h());
        CHECK(ph == SpanPattern::identity(std::uint32_t(ctx->coset_count())));
        auto pg = centralizer_pattern(ctx, SubgroupH::whole(ctx->group()));
        CHECK(pg == SpanPattern::all(std::uint32_t(ctx->coset_count())));
    }
    // H' failing to contain H is rejected: use a point stabilizer of another point
    auto ctx = make_ctx("symmetric:3");
    auto other = point_stabilizer(ctx->group(), 1);
    CHECK_THROWS_AS(centralizer_pattern(ctx, other), std::invalid_argument);
}

TEST_CASE("twisted centralizer patterns") {
    // sigma = 1 reduces to the centralizer
    {
        auto ctx = make_ctx("dihedral:4");
        for (const auto& hp : intermediate_subgroups(ctx))
            CHECK(twisted_centralizer_pattern(ctx, hp, 0) == centralizer_pattern(ctx, hp));
    }
    // D4: N = Klein four, sigma the rotation; phi(N sigma) has dimension 2
    {
        auto ctx = make_ctx("dihedral:4");
        std::uint32_t sigma = ctx->group()->index_of(Permutation({1, 2, 3, 0}));
        auto klein = HBiset::unit(ctx) | HBiset::from_classes(ctx, {2});
        auto n_sub = SubgroupH::from_mask(ctx->group(), klein.element_mask());
        auto p = twisted_centralizer_pattern(ctx, n_sub, sigma);
        auto coset = HBiset::from_element_mask(
            ctx, ctx->right_translate(klein.element_mask(), sigma));
        CHECK(p == phi_pattern(coset));
        CHECK(pattern_dimension(coset) == 2);
    }
    // C_n regular with N = 1: the pattern of a single off-diagonal permutation
    {
        auto ctx = make_ctx("cyclic:5");
        auto triv = SubgroupH::trivial(ctx->group());
        std::uint32_t sigma = ctx->group()->index_of(Permutation({1, 2, 3, 4, 0}));
        auto p = twisted_centralizer_pattern(ctx, triv, sigma);
        CHECK(p.count() == 5);
        CHECK(p.diagonal_empty());
        CHECK(pattern_matching(p).has_value());
    }
}

TEST_CASE("kak power chains") {
    GfField F(101);
    // D4, sigma class: dims over K are 2, 2, heights agree at 1
    {
        auto ctx = make_ctx("dihedral:4");
        auto s = HBiset::from_classes(ctx, {1});
        auto rep = kak_power_chain(F, s, 5, 7);
        REQUIRE(rep.power_dims.size() == 5);
        CHECK(rep.power_dims[0] == 2);
        CHECK(rep.power_dims[1] == 2);
        CHECK(rep.algebra_height == 1);
        CHECK(rep.biset_height == 1);
    }
    // cyclic C4: dims 1,1,1,1 and (KaK)^4 = K
    {
        auto ctx = make_ctx("cyclic:4");
        auto s = HBiset::from_classes(ctx, {1});
        auto rep = kak_power_chain(F, s, 4, 7);
        CHECK(rep.power_dims == std::vector<std::size_t>{1, 1, 1, 1});
        CHECK(rep.power_patterns[3] == SpanPattern::identity(4));
        CHECK(rep.algebra_height == 0);
        CHECK(rep.biset_height == 0);
    }
    // diagonal support: constant chain at K
    {
        auto ctx = make_ctx("dihedral:4");
        auto rep = kak_power_chain(F, HBiset::unit(ctx), 3, 7);
        CHECK(rep.power_dims == std::vector<std::size_t>{1, 1, 1});
        CHECK(rep.algebra_height == 0);
        for (const auto& p : rep.power_patterns) CHECK(p == SpanPattern::identity(4));
    }
    // heights agree on every class of the frobenius group, and the
    // conjugate-chain dimensions track the biset chain sizes:
    // dim_L K(a,m) = n |H(g,m)| / |H|
    {
        auto ctx = make_ctx("frobenius:7:3:2");
        const std::size_t n = ctx->coset_count();
        const std::size_t h = ctx->h().order();
        for (std::uint32_t c = 1; c < ctx->class_count(); ++c) {
            auto s = HBiset::from_classes(ctx, {c});
            auto rep = kak_power_chain(F, s, 8, 11);
            CHECK(rep.algebra_height == rep.biset_height);
            auto hp = height_profile(
                ctx, ctx->dcosets().representatives[std::uint32_t(s.class_mask().first())]);
            for (std::size_t m = 0; m < hp.chain.size(); ++m) {
                REQUIRE(m < rep.conj_chain_dims.size());
                CHECK(rep.conj_chain_dims[m] * h == n * hp.chain[m]);
            }
        }
    }
}

TEST_CASE("random specialization: spans realize their full pattern") {
    GfField F(101);
    SplitMix64 rng(99);
    auto ctx = make_ctx("dihedral:6");
    for (std::uint32_t c = 0; c < ctx->class_count(); ++c) {
        auto p = phi_pattern(HBiset::from_classes(ctx, {c}));
        for (int trial = 0; trial < 50; ++trial) {
            auto a = random_patterned_element(F, p, rng);
            CHECK(support_pattern(F, a) == p);
            CHECK(kk_span_pattern(F, a) == p);
        }
    }
}
