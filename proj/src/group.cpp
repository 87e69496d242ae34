#include "bisetring/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace bisetring {

std::shared_ptr<const FiniteGroup> FiniteGroup::close_generators(
    std::uint32_t degree, const std::vector<Permutation>& generators, std::size_t budget) {
    for (const auto& g : generators) {
        if (g.degree() != degree)
            throw std::invalid_argument("close_generators: generator degree mismatch");
        if (!Permutation::is_valid_image_array(g.images()))
            throw std::invalid_argument("close_generators: generator is not a bijection");
    }

    std::unordered_map<Permutation, std::uint32_t, PermutationHash> seen;
    std::vector<Permutation> elems;
    std::deque<std::uint32_t> work;
    auto push = [&](const Permutation& p) -> bool {
        if (seen.count(p)) return false;
        if (elems.size() >= budget)
            throw std::length_error("close_generators: element budget exceeded");
        seen.emplace(p, std::uint32_t(elems.size()));
        elems.push_back(p);
        work.push_back(std::uint32_t(elems.size() - 1));
        return true;
    };
    push(Permutation::identity(degree));
    for (const auto& g : generators) push(g);
    while (!work.empty()) {
        Permutation cur = elems[work.front()];
        work.pop_front();
        for (const auto& g : generators) push(cur * g);
    }

    std::sort(elems.begin(), elems.end());

    auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    group->degree_ = degree;
    group->elements_ = std::move(elems);
    group->index_.reserve(group->elements_.size() * 2);
    for (std::uint32_t i = 0; i < group->elements_.size(); ++i)
        group->index_.emplace(group->elements_[i], i);
    group->inverse_.resize(group->elements_.size());
    for (std::uint32_t i = 0; i < group->elements_.size(); ++i)
        group->inverse_[i] = group->index_.at(group->elements_[i].inverse());
    for (const auto& g : generators) group->gen_indices_.push_back(group->index_.at(g));
    return group;
}

std::uint32_t FiniteGroup::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("index_of: element not in group");
    return it->second;
}

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const {
    return index_.at(elements_[a] * elements_[b]);
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    std::uint32_t r = 0;  // identity
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FiniteGroup::order_of(std::uint32_t a) const {
    std::uint32_t cur = a, n = 1;
    while (cur != 0) {
        cur = mul(cur, a);
        ++n;
    }
    return n;
}

std::vector<std::uint32_t> FiniteGroup::orbit_of_point(std::uint32_t point) const {
    std::vector<bool> seen(degree_, false);
    std::vector<std::uint32_t> orbit;
    seen[point] = true;
    orbit.push_back(point);
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (auto gi : gen_indices_) {
            std::uint32_t y = elements_[gi](orbit[i]);
            if (!seen[y]) {
                seen[y] = true;
                orbit.push_back(y);
            }
        }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

bool FiniteGroup::is_transitive() const {
    return degree_ > 0 && orbit_of_point(0).size() == degree_;
}

std::size_t FiniteGroup::orbit_count_on_ordered_pairs() const {
    std::size_t count = 0;
    std::vector<bool> seen(std::size_t(degree_) * degree_, false);
    for (std::uint32_t a = 0; a < degree_; ++a)
        for (std::uint32_t b = 0; b < degree_; ++b) {
            if (a == b || seen[std::size_t(a) * degree_ + b]) continue;
            ++count;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{a, b}};
            seen[std::size_t(a) * degree_ + b] = true;
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                for (auto gi : gen_indices_) {
                    std::uint32_t nx = elements_[gi](x), ny = elements_[gi](y);
                    if (!seen[std::size_t(nx) * degree_ + ny]) {
                        seen[std::size_t(nx) * degree_ + ny] = true;
                        stack.push_back({nx, ny});
                    }
                }
            }
        }
    return count;
}

SubgroupH SubgroupH::from_mask(GroupPtr parent, Bitset mask) {
    SubgroupH h;
    h.parent_ = std::move(parent);
    h.mask_ = std::move(mask);
    h.elems_ = h.mask_.to_indices();
    if (!h.mask_.test(0)) throw std::invalid_argument("SubgroupH: missing identity");
    for (auto a : h.elems_) {
        if (!h.mask_.test(h.parent_->inv(a)))
            throw std::invalid_argument("SubgroupH: not closed under inverse");
        for (auto b : h.elems_)
            if (!h.mask_.test(h.parent_->mul(a, b)))
                throw std::invalid_argument("SubgroupH: not closed under product");
    }
    return h;
}

SubgroupH SubgroupH::from_indices(GroupPtr parent, const std::vector<std::uint32_t>& idx) {
    Bitset m(parent->order());
    for (auto i : idx) m.set(i);
    return from_mask(std::move(parent), std::move(m));
}

SubgroupH SubgroupH::generated_by(GroupPtr parent, const std::vector<std::uint32_t>& idx) {
    Bitset m(parent->order());
    m.set(0);
    std::vector<std::uint32_t> work{0};
    auto add = [&](std::uint32_t i) {
        if (!m.test(i)) {
            m.set(i);
            work.push_back(i);
        }
    };
    for (auto i : idx) add(i);
    for (std::size_t w = 0; w < work.size(); ++w) {
        add(parent->inv(work[w]));
        for (std::size_t v = 0; v < work.size(); ++v) {
            add(parent->mul(work[w], work[v]));
            add(parent->mul(work[v], work[w]));
        }
    }
    return from_mask(std::move(parent), std::move(m));
}

SubgroupH SubgroupH::trivial(GroupPtr parent) {
    Bitset m(parent->order());
    m.set(0);
    return from_mask(std::move(parent), std::move(m));
}

SubgroupH SubgroupH::whole(GroupPtr parent) {
    Bitset m(parent->order());
    for (std::size_t i = 0; i < parent->order(); ++i) m.set(i);
    return from_mask(std::move(parent), std::move(m));
}

bool SubgroupH::is_normal_in_parent() const {
    for (std::uint32_t g = 0; g < parent_->order(); ++g) {
        std::uint32_t gi = parent_->inv(g);
        for (auto h : elems_)
            if (!mask_.test(parent_->mul(parent_->mul(g, h), gi))) return false;
    }
    return true;
}

SubgroupH point_stabilizer(const GroupPtr& group, std::uint32_t point) {
    if (point >= group->degree())
        throw std::invalid_argument("point_stabilizer: point out of range");
    Bitset m(group->order());
    for (std::uint32_t i = 0; i < group->order(); ++i)
        if (group->element(i)(point) == point) m.set(i);
    return SubgroupH::from_mask(group, std::move(m));
}

Bitset subgroup_core(const GroupPtr& group, const SubgroupH& h) {
    Bitset core = h.mask();
    for (std::uint32_t g = 0; g < group->order(); ++g) {
        Bitset conj(group->order());
        std::uint32_t gi = group->inv(g);
        for (auto x : h.elements()) conj.set(group->mul(group->mul(g, x), gi));
        core &= conj;
        if (core.count() == 1) break;
    }
    return core;
}

CosetSpace coset_space(const GroupPtr& group, const SubgroupH& h) {
    const std::uint32_t n = std::uint32_t(group->order());
    CosetSpace cs;
    cs.coset_of.assign(n, UINT32_MAX);
    for (std::uint32_t g = 0; g < n; ++g) {
        if (cs.coset_of[g] != UINT32_MAX) continue;
        std::uint32_t id = std::uint32_t(cs.representatives.size());
        cs.representatives.push_back(g);  // minimal index, by scan order
        for (auto x : h.elements()) cs.coset_of[group->mul(g, x)] = id;
    }
    return cs;
}

DoubleCosetTable enumerate_double_cosets(const GroupPtr& group, const SubgroupH& h) {
    const std::uint32_t n = std::uint32_t(group->order());
    DoubleCosetTable t;
    t.class_of.assign(n, UINT32_MAX);
    for (std::uint32_t g = 0; g < n; ++g) {
        if (t.class_of[g] != UINT32_MAX) continue;
        std::uint32_t id = std::uint32_t(t.classes.size());
        Bitset cls(n);
        for (auto a : h.elements()) {
            std::uint32_t ag = group->mul(a, g);
            for (auto b : h.elements()) cls.set(group->mul(ag, b));
        }
        cls.for_each([&](std::uint32_t x) { t.class_of[x] = id; });
        t.sizes.push_back(cls.count());
        t.representatives.push_back(g);
        t.classes.push_back(std::move(cls));
    }
    return t;
}

} // namespace bisetring
