#pragma once

#include "bisetring/group.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace bisetring {

class PairContext;
using PairContextPtr = std::shared_ptr<const PairContext>;

// Immutable bundle for a pair (G, H): coset space, double-coset table, and
// the class-level multiplication table. The product of two double cosets is
// a union of double cosets that depends only on their classes, so the table
// makes biset products and powers cheap.
class PairContext : public std::enable_shared_from_this<PairContext> {
public:
    static PairContextPtr make(GroupPtr group, SubgroupH h);

    const GroupPtr& group() const { return group_; }
    const SubgroupH& h() const { return h_; }
    const CosetSpace& cosets() const { return cosets_; }
    const DoubleCosetTable& dcosets() const { return dcosets_; }

    std::size_t class_count() const { return dcosets_.count(); }
    std::size_t coset_count() const { return cosets_.count(); }

    // sorted class indices of (class i) * (class j)
    const std::vector<std::uint32_t>& class_product(std::uint32_t i, std::uint32_t j) const {
        return class_table_[i * class_count() + j];
    }
    std::uint32_t class_inverse(std::uint32_t i) const { return class_inverse_[i]; }

    Bitset right_translate(const Bitset& s, std::uint32_t g) const;
    Bitset left_translate(std::uint32_t g, const Bitset& s) const;
    Bitset product_elementwise(const Bitset& a, const Bitset& b) const;
    Bitset inverse_elementwise(const Bitset& s) const;

private:
    PairContext() = default;

    GroupPtr group_;
    SubgroupH h_;
    CosetSpace cosets_;
    DoubleCosetTable dcosets_;
    std::vector<std::vector<std::uint32_t>> class_table_;
    std::vector<std::uint32_t> class_inverse_;
};

// An H-biset: a union of double cosets HgH, the element of the semiring
// with union as addition and setwise product as multiplication. Immutable.
class HBiset {
public:
    HBiset() = default;

    static HBiset empty(PairContextPtr ctx);
    static HBiset unit(PairContextPtr ctx);  // H itself
    static HBiset full(PairContextPtr ctx);  // all of G
    static HBiset from_classes(PairContextPtr ctx, const std::vector<std::uint32_t>& classes);
    static HBiset from_class_mask(PairContextPtr ctx, Bitset class_mask);
    // validates that the element set is a union of double cosets
    static HBiset from_element_mask(PairContextPtr ctx, const Bitset& elems);

    const PairContextPtr& ctx() const { return ctx_; }
    const Bitset& class_mask() const { return class_mask_; }
    const Bitset& element_mask() const { return elem_mask_; }
    std::vector<std::uint32_t> class_indices() const { return class_mask_.to_indices(); }

    std::size_t size() const { return elem_mask_.count(); }
    bool is_empty() const { return class_mask_.none(); }
    bool contains_element(std::uint32_t g) const { return elem_mask_.test(g); }
    bool contains_unit_class() const { return class_mask_.test(0); }  // H subset of S

    friend HBiset operator|(const HBiset& a, const HBiset& b);
    friend HBiset operator*(const HBiset& a, const HBiset& b);
    friend bool operator==(const HBiset& a, const HBiset& b) {
        return a.ctx_ == b.ctx_ && a.class_mask_ == b.class_mask_;
    }
    friend bool operator!=(const HBiset& a, const HBiset& b) { return !(a == b); }

    HBiset inverse() const;
    HBiset power(std::uint64_t m) const;  // S^0 = H
    bool is_subgroup() const;

private:
    PairContextPtr ctx_;
    Bitset class_mask_;  // over double-coset classes
    Bitset elem_mask_;   // over group element indices
};

// The chain H(g,m) = (HgH)^m g^{-m} ascends from H and stabilizes at the
// height; its stable value N is the smallest subgroup of G' = <H, g>
// containing H and normal in G'.
struct HeightProfile {
    std::uint32_t g = 0;
    std::uint32_t height = 0;
    std::vector<std::size_t> chain;  // |H(g,m)| for m = 0..height
    HBiset normal_closure;           // N
    HBiset generated_subgroup;       // G'
    std::uint32_t cyclic_order = 0;  // order of gN in G'/N
};

HeightProfile height_profile(const PairContextPtr& ctx, std::uint32_t g);

// (HgH)^m together with the certificate that it equals N g^m as a set;
// requires m >= height(g)
struct StabilizedPowerForm {
    HBiset power;
    Bitset normal_coset;  // N g^m
    bool matches = false;
};

StabilizedPowerForm stabilized_power_form(const PairContextPtr& ctx, std::uint32_t g,
                                          std::uint64_t m);

} // namespace bisetring
