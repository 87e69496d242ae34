#pragma once

#include "bisetring/biset.hpp"
#include "bisetring/group.hpp"

#include <cstdint>
#include <vector>

namespace bisetring {

// G = C_p x| C_r inside the affine group of F_p: i -> i+1 and i -> t*i. The
// double cosets of H = <t> correspond to the multiplication orbits of <t>
// on F_p, and the biset product becomes Minkowski addition of orbits.
struct AffineModel {
    std::uint32_t p = 0;
    std::uint32_t t = 0;
    std::uint32_t r = 0;                           // multiplicative order of t
    bool full_order = false;                       // r = p-1: sharply 2-transitive
    std::vector<std::vector<std::uint32_t>> orbits;  // orbit 0 is {0}
    std::vector<std::uint32_t> orbit_of;             // F_p -> orbit index
};

struct AffineBuild {
    GroupPtr group;
    SubgroupH h;  // stabilizer of 0, equal to <tau>
    PairContextPtr ctx;
    AffineModel model;
};

// p prime, t of order r with 1 < r <= p-1; r = p-1 only sets the
// full_order warning flag
AffineBuild build_affine_group(std::uint32_t p, std::uint32_t t);

// class index <-> orbit index, verified: bijective, sizes |HgH| = |H| |orbit|
struct OrbitCorrespondence {
    std::vector<std::uint32_t> class_of_orbit;
    std::vector<std::uint32_t> orbit_of_class;
};

OrbitCorrespondence orbit_double_cosets(const AffineBuild& ab);

// Minkowski sum of two orbits, decomposed into orbits again (sorted indices)
std::vector<std::uint32_t> orbit_semiring_product(const AffineModel& m, std::uint32_t oi,
                                                  std::uint32_t oj);

// exhaustive check that orbit sums match the generic class products through
// the correspondence; throws on any mismatch
void verify_orbit_products(const AffineBuild& ab);

// The nonzero orbits form a group under setwise multiplication, isomorphic
// to F_p^x / <t>, cyclic of order (p-1)/r; log_of_orbit gives the explicit
// isomorphism table onto Z/m.
struct QuotientGroupIso {
    std::uint32_t m = 0;  // (p-1)/r
    std::uint32_t primitive_root = 0;
    std::vector<std::uint32_t> log_of_orbit;  // nonzero orbit index -> Z/m
};

QuotientGroupIso nonzero_orbit_group_iso(const AffineModel& model);

// Prime-degree classification for a transitive group on p points: either
// doubly transitive (one nontrivial class of dimension p-1), or affine
// C_p x| C_r with every nontrivial class of dimension r.
struct PrimeDegreeReport {
    int case_id = 0;  // 1 or 2
    std::uint32_t p = 0;
    std::uint32_t r = 0;  // case 2
    std::uint32_t t = 0;  // case 2: detected multiplier (1 when r = 1)
    std::vector<std::size_t> class_dims;
    bool dims_uniform = false;
};

PrimeDegreeReport prime_degree_classifier(const GroupPtr& group);

} // namespace bisetring
