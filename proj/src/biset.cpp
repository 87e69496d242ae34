#include "bisetring/biset.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisetring {

PairContextPtr PairContext::make(GroupPtr group, SubgroupH h) {
    if (h.parent() != group)
        throw std::invalid_argument("PairContext: subgroup belongs to a different group");
    auto ctx = std::shared_ptr<PairContext>(new PairContext());
    ctx->group_ = std::move(group);
    ctx->h_ = std::move(h);
    ctx->cosets_ = coset_space(ctx->group_, ctx->h_);
    ctx->dcosets_ = enumerate_double_cosets(ctx->group_, ctx->h_);

    const std::size_t nc = ctx->dcosets_.count();
    const auto& g = *ctx->group_;
    ctx->class_table_.resize(nc * nc);
    for (std::size_t i = 0; i < nc; ++i) {
        std::uint32_t ri = ctx->dcosets_.representatives[i];
        for (std::size_t j = 0; j < nc; ++j) {
            std::uint32_t rj = ctx->dcosets_.representatives[j];
            // H ri H * H rj H = union over x in H of H (ri x rj) H
            std::vector<std::uint32_t> out;
            for (auto x : ctx->h_.elements()) {
                std::uint32_t c = ctx->dcosets_.class_of[g.mul(g.mul(ri, x), rj)];
                out.push_back(c);
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            ctx->class_table_[i * nc + j] = std::move(out);
        }
    }
    ctx->class_inverse_.resize(nc);
    for (std::size_t i = 0; i < nc; ++i)
        ctx->class_inverse_[i] =
            ctx->dcosets_.class_of[g.inv(ctx->dcosets_.representatives[i])];
    return ctx;
}

Bitset PairContext::right_translate(const Bitset& s, std::uint32_t g) const {
    Bitset out(group_->order());
    s.for_each([&](std::uint32_t x) { out.set(group_->mul(x, g)); });
    return out;
}

Bitset PairContext::left_translate(std::uint32_t g, const Bitset& s) const {
    Bitset out(group_->order());
    s.for_each([&](std::uint32_t x) { out.set(group_->mul(g, x)); });
    return out;
}

Bitset PairContext::product_elementwise(const Bitset& a, const Bitset& b) const {
    Bitset out(group_->order());
    a.for_each([&](std::uint32_t x) {
        b.for_each([&](std::uint32_t y) { out.set(group_->mul(x, y)); });
    });
    return out;
}

Bitset PairContext::inverse_elementwise(const Bitset& s) const {
    Bitset out(group_->order());
    s.for_each([&](std::uint32_t x) { out.set(group_->inv(x)); });
    return out;
}

namespace {

void require_same_ctx(const HBiset& a, const HBiset& b) {
    if (a.ctx() != b.ctx())
        throw std::invalid_argument("HBiset: operands live over different (G, H) pairs");
}

} // namespace

HBiset HBiset::from_class_mask(PairContextPtr ctx, Bitset class_mask) {
    HBiset s;
    s.elem_mask_ = Bitset(ctx->group()->order());
    class_mask.for_each([&](std::uint32_t c) {
        if (c >= ctx->class_count())
            throw std::invalid_argument("HBiset: class index out of range");
        s.elem_mask_ |= ctx->dcosets().classes[c];
    });
    s.class_mask_ = std::move(class_mask);
    s.ctx_ = std::move(ctx);
    return s;
}

HBiset HBiset::from_classes(PairContextPtr ctx, const std::vector<std::uint32_t>& classes) {
    Bitset m(ctx->class_count());
    for (auto c : classes) {
        if (c >= ctx->class_count())
            throw std::invalid_argument("HBiset: class index out of range");
        m.set(c);
    }
    return from_class_mask(std::move(ctx), std::move(m));
}

HBiset HBiset::empty(PairContextPtr ctx) { return from_classes(std::move(ctx), {}); }

HBiset HBiset::unit(PairContextPtr ctx) { return from_classes(std::move(ctx), {0}); }

HBiset HBiset::full(PairContextPtr ctx) {
    Bitset m(ctx->class_count());
    for (std::size_t c = 0; c < ctx->class_count(); ++c) m.set(c);
    return from_class_mask(std::move(ctx), std::move(m));
}

HBiset HBiset::from_element_mask(PairContextPtr ctx, const Bitset& elems) {
    Bitset classes(ctx->class_count());
    elems.for_each([&](std::uint32_t x) { classes.set(ctx->dcosets().class_of[x]); });
    HBiset s = from_class_mask(std::move(ctx), std::move(classes));
    if (s.elem_mask_ != elems)
        throw std::invalid_argument("HBiset: element set is not a union of double cosets");
    return s;
}

HBiset operator|(const HBiset& a, const HBiset& b) {
    require_same_ctx(a, b);
    HBiset r = a;
    r.class_mask_ |= b.class_mask_;
    r.elem_mask_ |= b.elem_mask_;
    return r;
}

HBiset operator*(const HBiset& a, const HBiset& b) {
    require_same_ctx(a, b);
    Bitset classes(a.ctx_->class_count());
    a.class_mask_.for_each([&](std::uint32_t i) {
        b.class_mask_.for_each([&](std::uint32_t j) {
            for (auto c : a.ctx_->class_product(i, j)) classes.set(c);
        });
    });
    return HBiset::from_class_mask(a.ctx_, std::move(classes));
}

HBiset HBiset::inverse() const {
    Bitset classes(ctx_->class_count());
    class_mask_.for_each([&](std::uint32_t c) { classes.set(ctx_->class_inverse(c)); });
    return from_class_mask(ctx_, std::move(classes));
}

HBiset HBiset::power(std::uint64_t m) const {
    HBiset r = unit(ctx_);
    for (std::uint64_t i = 0; i < m; ++i) r = r * *this;
    return r;
}

bool HBiset::is_subgroup() const {
    if (is_empty()) return false;
    return *this * *this == *this && inverse() == *this && contains_unit_class();
}

HeightProfile height_profile(const PairContextPtr& ctx, std::uint32_t g) {
    const auto& G = *ctx->group();
    if (g >= G.order()) throw std::invalid_argument("height_profile: element out of range");

    HBiset s = HBiset::from_classes(ctx, {ctx->dcosets().class_of[g]});
    const std::size_t index = ctx->coset_count();

    HeightProfile hp;
    hp.g = g;

    // H(g,m) = (HgH)^m g^{-m}, ascending from H(g,0) = H
    std::vector<Bitset> chain_sets{ctx->h().mask()};
    HBiset p = HBiset::unit(ctx);
    std::uint32_t m = 0;
    while (true) {
        p = p * s;
        ++m;
        Bitset t = ctx->right_translate(p.element_mask(), G.pow(g, -std::int64_t(m)));
        if (!t.contains(chain_sets.back()))
            throw std::logic_error("height_profile: chain failed to ascend");
        if (t == chain_sets.back()) break;
        chain_sets.push_back(std::move(t));
        if (m > index + 1)
            throw std::logic_error("height_profile: chain exceeded the index bound");
    }
    hp.height = std::uint32_t(chain_sets.size() - 1);
    if (hp.height > index)
        throw std::logic_error("height_profile: height exceeds [G:H]");
    for (const auto& t : chain_sets) hp.chain.push_back(t.count());

    // stability is permanent: two more steps stay put
    {
        HBiset q = s.power(hp.height);
        for (std::uint32_t extra = 1; extra <= 2; ++extra) {
            q = q * s;
            Bitset t = ctx->right_translate(q.element_mask(),
                                            G.pow(g, -std::int64_t(hp.height + extra)));
            if (t != chain_sets.back())
                throw std::logic_error("height_profile: chain moved after stabilizing");
        }
    }

    // N = H(g, height) must be a subgroup; from_mask validates closure
    Bitset n_mask = chain_sets.back();
    SubgroupH n_sub = SubgroupH::from_mask(ctx->group(), n_mask);

    // G' = <H, g>
    std::vector<std::uint32_t> gens = ctx->h().elements();
    gens.push_back(g);
    SubgroupH gprime = SubgroupH::generated_by(ctx->group(), gens);

    // independent oracle: normal closure of H in G' by conjugation closure
    {
        Bitset cur = ctx->h().mask();
        bool changed = true;
        while (changed) {
            changed = false;
            Bitset conj(G.order());
            for (auto x : gprime.elements()) {
                std::uint32_t xi = G.inv(x);
                cur.for_each([&](std::uint32_t y) { conj.set(G.mul(G.mul(x, y), xi)); });
            }
            if (!cur.contains(conj)) {
                cur |= conj;
                cur = SubgroupH::generated_by(ctx->group(), cur.to_indices()).mask();
                changed = true;
            }
        }
        if (cur != n_mask)
            throw std::logic_error(
                "height_profile: stabilized chain differs from the normal closure of H");
    }
    if (!n_mask.contains(ctx->h().mask()))
        throw std::logic_error("height_profile: N does not contain H");
    for (auto x : n_sub.elements())
        if (!gprime.contains(x))
            throw std::logic_error("height_profile: N is not inside G'");

    hp.normal_closure = HBiset::from_element_mask(ctx, n_mask);
    hp.generated_subgroup = HBiset::from_element_mask(ctx, gprime.mask());

    // order of gN in G'/N, and the coset decomposition G' = N g^0 u ... u N g^(d-1)
    std::uint32_t d = 1;
    std::uint32_t cur = g;
    while (!n_mask.test(cur)) {
        cur = G.mul(cur, g);
        ++d;
    }
    hp.cyclic_order = d;
    {
        Bitset cover(G.order());
        for (std::uint32_t i = 0; i < d; ++i)
            cover |= ctx->right_translate(n_mask, G.pow(g, i));
        if (cover != gprime.mask())
            throw std::logic_error("height_profile: G'/N is not generated by gN");
    }
    return hp;
}

StabilizedPowerForm stabilized_power_form(const PairContextPtr& ctx, std::uint32_t g,
                                          std::uint64_t m) {
    HeightProfile hp = height_profile(ctx, g);
    if (m < hp.height)
        throw std::invalid_argument("stabilized_power_form: m is below the height of g");
    HBiset s = HBiset::from_classes(ctx, {ctx->dcosets().class_of[g]});
    StabilizedPowerForm out;
    out.power = s.power(m);
    out.normal_coset = ctx->right_translate(hp.normal_closure.element_mask(),
                                            ctx->group()->pow(g, std::int64_t(m)));
    out.matches = out.power.element_mask() == out.normal_coset;
    if (!out.matches)
        throw std::logic_error("stabilized_power_form: (HgH)^m differs from N g^m");
    return out;
}

} // namespace bisetring
