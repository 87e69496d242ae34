#pragma once

#include "bisetring/group.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bisetring {

struct GroupSpecError : std::runtime_error {
    GroupSpecError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Group specification text accepted by the CLI:
//
//   perm: (0 1 2 3)(4 5), (6 7)   explicit generators, cycles on 0-based
//                                 points; within a generator the leftmost
//                                 cycle acts first; degree = max point + 1
//   cyclic:n                      C_n on n points
//   dihedral:n                    order 2n on n points (n >= 3); the
//                                 reflection fixes point 0
//   symmetric:n                   S_n natural
//   alternating:n                 A_n natural (n >= 3)
//   frobenius:p:r:t               C_p x| C_r on p points: i -> i+1 and
//                                 i -> t*i mod p, t of order r mod p
//   regular:<inner spec>          regular action of the inner group on its
//                                 own elements
//
// The distinguished subgroup used downstream is the stabilizer of point 0.
GroupPtr parse_group_spec(const std::string& spec,
                          std::size_t budget = FiniteGroup::kDefaultBudget);

struct GroupWithSubgroup {
    GroupPtr group;
    SubgroupH h;  // stabilizer of point 0
};

GroupWithSubgroup build_group_with_stabilizer(
    const std::string& spec, std::size_t budget = FiniteGroup::kDefaultBudget);

// single permutation in cycle notation, padded with fixed points to the
// requested degree
Permutation parse_permutation_cycles(const std::string& text, std::uint32_t degree);

} // namespace bisetring
