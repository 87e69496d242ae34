#pragma once

#include "bisetring/bitset.hpp"
#include "bisetring/perm.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace bisetring {

// A finite permutation group, fully enumerated. Elements are kept in
// lexicographic order of their image arrays, which puts the identity at
// index 0 and makes every downstream index, coset and class label
// deterministic.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    static constexpr std::size_t kDefaultBudget = 100000;

    // closure of the generators; throws on invalid generators or budget
    static std::shared_ptr<const FiniteGroup> close_generators(
        std::uint32_t degree, const std::vector<Permutation>& generators,
        std::size_t budget = kDefaultBudget);

    std::uint32_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }

    const Permutation& element(std::uint32_t i) const { return elements_[i]; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<std::uint32_t>& generator_indices() const { return gen_indices_; }

    bool contains(const Permutation& p) const { return index_.count(p) != 0; }
    std::uint32_t index_of(const Permutation& p) const;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
    std::uint32_t order_of(std::uint32_t a) const;

    std::vector<std::uint32_t> orbit_of_point(std::uint32_t point) const;
    bool is_transitive() const;
    // orbit count of the action on ordered pairs of distinct points
    std::size_t orbit_count_on_ordered_pairs() const;

private:
    FiniteGroup() = default;

    std::uint32_t degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> gen_indices_;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup given by a membership mask over the parent's element indices.
class SubgroupH {
public:
    SubgroupH() = default;

    // validates closure under product and inverse, and 1 in H
    static SubgroupH from_mask(GroupPtr parent, Bitset mask);
    static SubgroupH from_indices(GroupPtr parent, const std::vector<std::uint32_t>& idx);
    static SubgroupH generated_by(GroupPtr parent, const std::vector<std::uint32_t>& idx);
    static SubgroupH trivial(GroupPtr parent);
    static SubgroupH whole(GroupPtr parent);

    const GroupPtr& parent() const { return parent_; }
    const Bitset& mask() const { return mask_; }
    const std::vector<std::uint32_t>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }
    bool contains(std::uint32_t i) const { return mask_.test(i); }

    bool is_normal_in_parent() const;

private:
    GroupPtr parent_;
    Bitset mask_;
    std::vector<std::uint32_t> elems_;
};

// stabilizer of a point in the natural action
SubgroupH point_stabilizer(const GroupPtr& group, std::uint32_t point);

// largest normal subgroup of G contained in H (the kernel of the coset action)
Bitset subgroup_core(const GroupPtr& group, const SubgroupH& h);

// Left cosets gH with canonical representatives (minimal element index).
// Coset 0 is H itself.
struct CosetSpace {
    std::vector<std::uint32_t> representatives;
    std::vector<std::uint32_t> coset_of;  // element index -> coset index

    std::size_t count() const { return representatives.size(); }
};

CosetSpace coset_space(const GroupPtr& group, const SubgroupH& h);

// Partition of G into double cosets HgH, ordered by minimal element index;
// class 0 is H itself.
struct DoubleCosetTable {
    std::vector<Bitset> classes;
    std::vector<std::uint32_t> class_of;  // element index -> class index
    std::vector<std::size_t> sizes;
    std::vector<std::uint32_t> representatives;  // minimal element index per class

    std::size_t count() const { return classes.size(); }
};

DoubleCosetTable enumerate_double_cosets(const GroupPtr& group, const SubgroupH& h);

} // namespace bisetring
