#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bisetring/group.hpp"
#include "bisetring/group_spec.hpp"
#include "bisetring/prng.hpp"

#include <algorithm>
#include <set>

using namespace bisetring;

namespace {

// independent oracle: the double coset HgH assembled element by element from
// raw permutation products
Bitset double_coset_oracle(const GroupPtr& g, const SubgroupH& h, std::uint32_t x) {
    Bitset out(g->order());
    const Permutation& px = g->element(x);
    for (auto a : h.elements())
        for (auto b : h.elements())
            out.set(g->index_of(g->element(a) * px * g->element(b)));
    return out;
}

bool factorial_divisible_by(std::uint32_t degree, std::size_t order) {
    // degree! mod order, computed iteratively
    std::uint64_t m = 1;
    for (std::uint32_t i = 2; i <= degree; ++i) m = m * i % order;
    return m % order == 0;
}

} // namespace

TEST_CASE("close_generators: orders, canonical order, identity at index 0") {
    auto c4 = parse_group_spec("cyclic:4");
    CHECK(c4->order() == 4);
    auto s3 = parse_group_spec("symmetric:3");
    CHECK(s3->order() == 6);
    auto d8 = parse_group_spec("dihedral:8");
    CHECK(d8->order() == 16);

    for (const auto& g : {c4, s3, d8}) {
        CHECK(g->element(0).is_identity());
        CHECK(std::is_sorted(g->elements().begin(), g->elements().end()));
        CHECK(factorial_divisible_by(g->degree(), g->order()));
        // closure sanity: products and inverses stay inside
        for (std::uint32_t i = 0; i < g->order(); ++i) {
            CHECK(g->mul(i, g->inv(i)) == 0);
            for (std::uint32_t j = 0; j < g->order(); ++j)
                CHECK(g->mul(i, j) < g->order());
        }
    }
}

TEST_CASE("close_generators: rejections") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(
        FiniteGroup::close_generators(3, {Permutation::identity(4)}), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("symmetric:8", 100), std::length_error);
}

TEST_CASE("point stabilizers") {
    auto s3 = parse_group_spec("symmetric:3");
    CHECK(point_stabilizer(s3, 0).order() == 2);
    auto s4 = parse_group_spec("symmetric:4");
    CHECK(point_stabilizer(s4, 0).order() == 6);
    auto c4 = parse_group_spec("cyclic:4");
    CHECK(point_stabilizer(c4, 0).order() == 1);
    CHECK_THROWS_AS(point_stabilizer(c4, 7), std::invalid_argument);

    // |G|/|H| = orbit size of the point
    for (const char* spec : {"symmetric:4", "dihedral:5", "frobenius:7:3:2"}) {
        auto g = parse_group_spec(spec);
        auto h = point_stabilizer(g, 0);
        CHECK(g->order() / h.order() == g->orbit_of_point(0).size());
        for (auto i : h.elements()) CHECK(g->element(i)(0) == 0);
    }
}

TEST_CASE("coset space: counts, canonical representatives, membership") {
    auto s3 = parse_group_spec("symmetric:3");
    auto h3 = point_stabilizer(s3, 0);
    auto cs3 = coset_space(s3, h3);
    CHECK(cs3.count() == 3);

    auto d4 = parse_group_spec("dihedral:4");
    auto hd = point_stabilizer(d4, 0);
    CHECK(coset_space(d4, hd).count() == 4);

    auto whole = SubgroupH::whole(s3);
    CHECK(coset_space(s3, whole).count() == 1);

    for (const char* spec : {"symmetric:3", "dihedral:4", "frobenius:7:3:2", "alternating:4"}) {
        auto g = parse_group_spec(spec);
        auto h = point_stabilizer(g, 0);
        auto cs = coset_space(g, h);
        CHECK(cs.count() == g->order() / h.order());
        CHECK(cs.representatives[0] == 0);
        CHECK(cs.coset_of[0] == 0);
        for (std::uint32_t x = 0; x < g->order(); ++x) {
            // x lies in rep * H
            std::uint32_t rep = cs.representatives[cs.coset_of[x]];
            bool found = false;
            for (auto a : h.elements()) found |= g->mul(rep, a) == x;
            CHECK(found);
            CHECK(rep <= x);  // representative is minimal
        }
    }
}

TEST_CASE("double cosets: frozen class structures") {
    // S_n natural is doubly transitive: exactly 2 classes
    for (const char* spec : {"symmetric:3", "symmetric:4", "symmetric:5"}) {
        auto g = parse_group_spec(spec);
        auto t = enumerate_double_cosets(g, point_stabilizer(g, 0));
        CHECK(t.count() == 2);
    }

    auto d4 = parse_group_spec("dihedral:4");
    auto td = enumerate_double_cosets(d4, point_stabilizer(d4, 0));
    REQUIRE(td.count() == 3);
    std::multiset<std::size_t> d4_sizes(td.sizes.begin(), td.sizes.end());
    CHECK(d4_sizes == std::multiset<std::size_t>{2, 2, 4});

    auto f = parse_group_spec("frobenius:7:3:2");
    auto tf = enumerate_double_cosets(f, point_stabilizer(f, 0));
    REQUIRE(tf.count() == 3);
    std::multiset<std::size_t> f_sizes(tf.sizes.begin(), tf.sizes.end());
    CHECK(f_sizes == std::multiset<std::size_t>{3, 9, 9});
}

TEST_CASE("double cosets: partition laws and the elementwise oracle") {
    for (const char* spec :
         {"symmetric:4", "dihedral:4", "dihedral:5", "frobenius:7:3:2", "alternating:4",
          "cyclic:6", "frobenius:5:4:2"}) {
        auto g = parse_group_spec(spec);
        auto h = point_stabilizer(g, 0);
        auto t = enumerate_double_cosets(g, h);

        // class 0 is H itself
        CHECK(t.classes[0] == h.mask());
        std::size_t total = 0;
        for (std::size_t c = 0; c < t.count(); ++c) {
            total += t.sizes[c];
            CHECK(t.sizes[c] % h.order() == 0);
            CHECK(t.sizes[c] == t.classes[c].count());
            // same class bitsets from any member (HgH = Hg'H)
            std::uint32_t rep = t.representatives[c];
            CHECK(t.classes[c] == double_coset_oracle(g, h, rep));
            std::uint32_t other = std::uint32_t(t.classes[c].first());
            CHECK(t.classes[c] == double_coset_oracle(g, h, other));
        }
        CHECK(total == g->order());

        // class-of(h g h') = class-of(g)
        SplitMix64 rng(11);
        for (int it = 0; it < 50; ++it) {
            std::uint32_t x = std::uint32_t(rng.below(g->order()));
            auto hs = h.elements();
            std::uint32_t a = hs[rng.below(hs.size())], b = hs[rng.below(hs.size())];
            CHECK(t.class_of[g->mul(g->mul(a, x), b)] == t.class_of[x]);
        }

        // doubly transitive iff exactly 2 classes, against the pair-orbit count
        bool dt = g->orbit_count_on_ordered_pairs() == 1;
        CHECK(dt == (t.count() == 2));
    }
}

TEST_CASE("degenerate H = G: one coset, one class") {
    auto s3 = parse_group_spec("symmetric:3");
    auto whole = SubgroupH::whole(s3);
    CHECK(coset_space(s3, whole).count() == 1);
    auto t = enumerate_double_cosets(s3, whole);
    CHECK(t.count() == 1);
    CHECK(t.sizes[0] == 6);
}

TEST_CASE("subgroup core") {
    // stabilizers in faithful primitive actions have trivial core
    auto s4 = parse_group_spec("symmetric:4");
    CHECK(subgroup_core(s4, point_stabilizer(s4, 0)).count() == 1);
    // the Klein four subgroup of D4 (order 8) is normal: core is itself
    auto d4 = parse_group_spec("dihedral:4");
    auto t = enumerate_double_cosets(d4, point_stabilizer(d4, 0));
    // union of H and the sigma^2 class is the Klein four subgroup
    Bitset klein = t.classes[0] | t.classes[2];
    auto k4 = SubgroupH::from_mask(d4, klein);
    CHECK(k4.order() == 4);
    CHECK(k4.is_normal_in_parent());
    CHECK(subgroup_core(d4, k4) == klein);
    // regular actions: core of the trivial stabilizer is trivial
    auto c6 = parse_group_spec("cyclic:6");
    CHECK(subgroup_core(c6, point_stabilizer(c6, 0)).count() == 1);
}

TEST_CASE("group spec parser: families and explicit permutations") {
    auto g1 = parse_group_spec("perm: (0 1 2), (0 1)");
    CHECK(g1->order() == 6);
    CHECK(g1->degree() == 3);
    auto g2 = parse_group_spec("perm: (0 1 2 3)(4 5), (6 7)");
    CHECK(g2->degree() == 8);
    auto g3 = parse_group_spec("regular:dihedral:4");
    CHECK(g3->degree() == 8);
    CHECK(g3->order() == 8);
    CHECK(point_stabilizer(g3, 0).order() == 1);
    auto g4 = parse_group_spec("alternating:4");
    CHECK(g4->order() == 12);
    auto g5 = parse_group_spec("frobenius:5:4:2");
    CHECK(g5->order() == 20);
    auto g6 = parse_group_spec("perm: ()");
    CHECK(g6->order() == 1);

    CHECK_THROWS_AS(parse_group_spec("dihedral:2"), GroupSpecError);
    CHECK_THROWS_AS(parse_group_spec("frobenius:8:3:2"), GroupSpecError);
    CHECK_THROWS_AS(parse_group_spec("frobenius:7:3:3"), GroupSpecError);  // order(3)=6
    CHECK_THROWS_AS(parse_group_spec("nosuch:4"), GroupSpecError);
    CHECK_THROWS_AS(parse_group_spec("perm: (0 1"), GroupSpecError);
    CHECK_THROWS_AS(parse_group_spec("perm: (0 0 1)"), GroupSpecError);
    CHECK_THROWS_AS(parse_group_spec("cyclic:4 extra"), GroupSpecError);

    try {
        parse_group_spec("perm: (0 1");
    } catch (const GroupSpecError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("permutation cycle printing round-trips through the parser") {
    SplitMix64 rng(12);
    auto s5 = parse_group_spec("symmetric:5");
    for (int it = 0; it < 40; ++it) {
        const auto& p = s5->element(std::uint32_t(rng.below(s5->order())));
        if (p.is_identity()) continue;
        auto g = parse_group_spec("perm: " + p.to_cycles());
        bool found = false;
        for (const auto& q : g->elements()) {
            // degrees may differ when trailing points are fixed
            bool same = true;
            for (std::uint32_t x = 0; x < std::min(p.degree(), q.degree()); ++x)
                same &= p(x) == q(x);
            if (same && q.degree() <= p.degree()) found = true;
        }
        CHECK(found);
    }
}
