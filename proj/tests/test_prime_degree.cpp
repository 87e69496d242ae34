#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bisetring/group_spec.hpp"
#include "bisetring/prime_degree.hpp"
#include "bisetring/span_pattern.hpp"

#include <set>

using namespace bisetring;

TEST_CASE("affine builds: frozen shapes") {
    // p = 7, t = 2: order 21, |H| = 3, orbits {0},{1,2,4},{3,5,6}
    {
        auto ab = build_affine_group(7, 2);
        CHECK(ab.group->order() == 21);
        CHECK(ab.h.order() == 3);
        CHECK(ab.model.r == 3);
        CHECK(!ab.model.full_order);
        REQUIRE(ab.model.orbits.size() == 3);
        CHECK(ab.model.orbits[0] == std::vector<std::uint32_t>{0});
        CHECK(ab.model.orbits[1] == std::vector<std::uint32_t>{1, 2, 4});
        CHECK(ab.model.orbits[2] == std::vector<std::uint32_t>{3, 5, 6});
        std::multiset<std::size_t> sizes(ab.ctx->dcosets().sizes.begin(),
                                         ab.ctx->dcosets().sizes.end());
        CHECK(sizes == std::multiset<std::size_t>{3, 9, 9});
    }
    // p = 5, t = 4: the dihedral group of order 10
    {
        auto ab = build_affine_group(5, 4);
        CHECK(ab.group->order() == 10);
        CHECK(ab.model.r == 2);
        REQUIRE(ab.model.orbits.size() == 3);
        CHECK(ab.model.orbits[1] == std::vector<std::uint32_t>{1, 4});
        CHECK(ab.model.orbits[2] == std::vector<std::uint32_t>{2, 3});
    }
    // p = 3, t = 2: S_3, doubly transitive, 2 classes
    {
        auto ab = build_affine_group(3, 2);
        CHECK(ab.group->order() == 6);
        CHECK(ab.model.full_order);
        CHECK(ab.ctx->class_count() == 2);
    }
    CHECK_THROWS_AS(build_affine_group(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_affine_group(7, 1), std::invalid_argument);
}

TEST_CASE("orbit products: frozen examples") {
    // 0-orbit is the unit
    auto ab7 = build_affine_group(7, 2);
    for (std::uint32_t o = 0; o < 3; ++o)
        CHECK(orbit_semiring_product(ab7.model, 0, o) == std::vector<std::uint32_t>{o});
    // p = 7: 1H + 1H covers both nonzero orbits, no zero
    CHECK(orbit_semiring_product(ab7.model, 1, 1) == std::vector<std::uint32_t>{1, 2});
    // p = 5: 1H + 1H = {0} u 2H
    auto ab5 = build_affine_group(5, 4);
    CHECK(orbit_semiring_product(ab5.model, 1, 1) == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("orbit correspondence and product tables, exhaustive p <= 13") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        for (std::uint32_t t = 2; t < p; ++t) {
            auto ab = build_affine_group(p, t);
            verify_orbit_products(ab);  // throws on any disagreement
            auto oc = orbit_double_cosets(ab);
            CHECK(oc.class_of_orbit.size() == ab.ctx->class_count());
        }
    }
}

TEST_CASE("nonzero orbits form the quotient group F_p^x / <t>") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        for (std::uint32_t t = 2; t < p; ++t) {
            auto ab = build_affine_group(p, t);
            auto iso = nonzero_orbit_group_iso(ab.model);
            CHECK(iso.m == (p - 1) / ab.model.r);
            CHECK(iso.log_of_orbit.size() == ab.model.orbits.size());
            // labels enumerate Z/m exactly once (checked inside, spot-check here)
            std::set<std::uint32_t> labels(iso.log_of_orbit.begin() + 1,
                                           iso.log_of_orbit.end());
            CHECK(labels.size() == iso.m);
        }
    }
}

TEST_CASE("prime-degree classifier") {
    // S_5 natural: doubly transitive, one class of dimension 4
    {
        auto rep = prime_degree_classifier(parse_group_spec("symmetric:5"));
        CHECK(rep.case_id == 1);
        CHECK(rep.class_dims == std::vector<std::size_t>{4});
    }
    // C7 x| C3: case 2 with r = 3
    {
        auto rep = prime_degree_classifier(parse_group_spec("frobenius:7:3:2"));
        CHECK(rep.case_id == 2);
        CHECK(rep.r == 3);
        CHECK(rep.dims_uniform);
        CHECK((rep.t == 2 || rep.t == 4));  // either generator of <2>
    }
    // D5 on 5 points: case 2 with r = 2, dimension exactly 2
    {
        auto rep = prime_degree_classifier(parse_group_spec("dihedral:5"));
        CHECK(rep.case_id == 2);
        CHECK(rep.r == 2);
        CHECK(rep.t == 4);  // the only element of order 2 in F_5^x
        CHECK(rep.class_dims == std::vector<std::size_t>{2, 2});
    }
    // C_p itself: case 2 with r = 1
    {
        auto rep = prime_degree_classifier(parse_group_spec("cyclic:7"));
        CHECK(rep.case_id == 2);
        CHECK(rep.r == 1);
        CHECK(rep.t == 1);
        CHECK(rep.dims_uniform);
    }
    // full-order multiplier: sharply 2-transitive, case 1
    {
        auto ab = build_affine_group(5, 2);
        CHECK(ab.model.full_order);
        auto rep = prime_degree_classifier(ab.group);
        CHECK(rep.case_id == 1);
        CHECK(rep.class_dims == std::vector<std::size_t>{4});
    }
    // A_5 natural on 5 points is doubly transitive
    {
        auto rep = prime_degree_classifier(parse_group_spec("alternating:5"));
        CHECK(rep.case_id == 1);
    }
    CHECK_THROWS_AS(prime_degree_classifier(parse_group_spec("symmetric:4")),
                    std::invalid_argument);
}

TEST_CASE("case 2 dimension uniformity across all (p, t)") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u})
        for (std::uint32_t t = 2; t < p; ++t) {
            auto ab = build_affine_group(p, t);
            auto rep = prime_degree_classifier(ab.group);
            if (ab.model.full_order) {
                CHECK(rep.case_id == 1);
            } else {
                CHECK(rep.case_id == 2);
                CHECK(rep.r == ab.model.r);
                CHECK(rep.dims_uniform);
                for (auto d : rep.class_dims) CHECK(d == ab.model.r);
            }
        }
}
