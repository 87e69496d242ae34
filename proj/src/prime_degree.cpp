#include "bisetring/prime_degree.hpp"

#include "bisetring/span_pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisetring {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t order_mod(std::uint32_t t, std::uint32_t p) {
    std::uint64_t cur = t % p;
    std::uint32_t ord = 1;
    while (cur != 1) {
        cur = cur * t % p;
        ++ord;
        if (ord > p) throw std::logic_error("order_mod: runaway");
    }
    return ord;
}

AffineModel build_model(std::uint32_t p, std::uint32_t t, std::uint32_t r) {
    AffineModel m;
    m.p = p;
    m.t = t;
    m.r = r;
    m.full_order = (r == p - 1);
    m.orbit_of.assign(p, UINT32_MAX);
    for (std::uint32_t c = 0; c < p; ++c) {
        if (m.orbit_of[c] != UINT32_MAX) continue;
        std::uint32_t id = std::uint32_t(m.orbits.size());
        std::vector<std::uint32_t> orbit;
        std::uint64_t x = c;
        do {
            m.orbit_of[x] = id;
            orbit.push_back(std::uint32_t(x));
            x = x * t % p;
        } while (x != c);
        std::sort(orbit.begin(), orbit.end());
        m.orbits.push_back(std::move(orbit));
    }
    return m;
}

} // namespace

AffineBuild build_affine_group(std::uint32_t p, std::uint32_t t) {
    if (!is_prime_u32(p)) throw std::invalid_argument("build_affine_group: p must be prime");
    if (p == 2 || t % p == 0 || t % p == 1)
        throw std::invalid_argument("build_affine_group: need an odd prime and t of order > 1");
    t %= p;
    std::uint32_t r = order_mod(t, p);

    std::vector<std::uint32_t> sigma(p), tau(p);
    for (std::uint32_t i = 0; i < p; ++i) {
        sigma[i] = (i + 1) % p;
        tau[i] = std::uint32_t(std::uint64_t(t) * i % p);
    }
    AffineBuild ab;
    ab.group = FiniteGroup::close_generators(
        p, {Permutation(std::move(sigma)), Permutation(std::move(tau))});
    ab.h = point_stabilizer(ab.group, 0);
    if (ab.group->order() != std::size_t(p) * r || ab.h.order() != r)
        throw std::logic_error("build_affine_group: unexpected group shape");
    ab.ctx = PairContext::make(ab.group, ab.h);
    ab.model = build_model(p, t, r);
    return ab;
}

OrbitCorrespondence orbit_double_cosets(const AffineBuild& ab) {
    const auto& m = ab.model;
    const auto& dct = ab.ctx->dcosets();
    if (m.orbits.size() != dct.count())
        throw std::logic_error("orbit_double_cosets: class and orbit counts differ");

    // sigma^c: the translation i -> i + c
    auto sigma_power = [&](std::uint32_t c) {
        std::vector<std::uint32_t> im(m.p);
        for (std::uint32_t i = 0; i < m.p; ++i) im[i] = (i + c) % m.p;
        return ab.group->index_of(Permutation(std::move(im)));
    };

    OrbitCorrespondence oc;
    oc.class_of_orbit.assign(m.orbits.size(), UINT32_MAX);
    oc.orbit_of_class.assign(dct.count(), UINT32_MAX);
    for (std::uint32_t o = 0; o < m.orbits.size(); ++o) {
        std::uint32_t c = m.orbits[o].front();
        std::uint32_t cls = dct.class_of[sigma_power(c)];
        // every member of the orbit lands in the same class
        for (auto cc : m.orbits[o])
            if (dct.class_of[sigma_power(cc)] != cls)
                throw std::logic_error("orbit_double_cosets: orbit split across classes");
        if (dct.sizes[cls] != ab.h.order() * m.orbits[o].size())
            throw std::logic_error("orbit_double_cosets: size mismatch |HgH| != |H||orbit|");
        oc.class_of_orbit[o] = cls;
        if (oc.orbit_of_class[cls] != UINT32_MAX)
            throw std::logic_error("orbit_double_cosets: correspondence not injective");
        oc.orbit_of_class[cls] = o;
    }
    return oc;
}

std::vector<std::uint32_t> orbit_semiring_product(const AffineModel& m, std::uint32_t oi,
                                                  std::uint32_t oj) {
    std::vector<bool> hit(m.orbits.size(), false);
    for (auto a : m.orbits[oi])
        for (auto b : m.orbits[oj]) hit[m.orbit_of[(a + b) % m.p]] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t o = 0; o < hit.size(); ++o)
        if (hit[o]) out.push_back(o);
    return out;
}

void verify_orbit_products(const AffineBuild& ab) {
    auto oc = orbit_double_cosets(ab);
    const auto& m = ab.model;
    for (std::uint32_t oi = 0; oi < m.orbits.size(); ++oi)
        for (std::uint32_t oj = 0; oj < m.orbits.size(); ++oj) {
            auto orbit_side = orbit_semiring_product(m, oi, oj);
            auto classes = ab.ctx->class_product(oc.class_of_orbit[oi], oc.class_of_orbit[oj]);
            std::vector<std::uint32_t> mapped;
            for (auto c : classes) mapped.push_back(oc.orbit_of_class[c]);
            std::sort(mapped.begin(), mapped.end());
            if (mapped != orbit_side)
                throw std::logic_error("verify_orbit_products: tables disagree");
        }
    // the inverse of an orbit is its negation
    for (std::uint32_t o = 0; o < m.orbits.size(); ++o) {
        std::uint32_t c = m.orbits[o].front();
        std::uint32_t neg_orbit = m.orbit_of[(m.p - c) % m.p];
        if (oc.class_of_orbit[neg_orbit] != ab.ctx->class_inverse(oc.class_of_orbit[o]))
            throw std::logic_error("verify_orbit_products: inverse orbits disagree");
    }
}

QuotientGroupIso nonzero_orbit_group_iso(const AffineModel& model) {
    QuotientGroupIso iso;
    iso.m = (model.p - 1) / model.r;
    // find a primitive root mod p
    for (std::uint32_t g = 2; g < model.p; ++g)
        if (order_mod(g, model.p) == model.p - 1) {
            iso.primitive_root = g;
            break;
        }
    // dlog table
    std::vector<std::uint32_t> dlog(model.p, 0);
    std::uint64_t cur = 1;
    for (std::uint32_t e = 0; e + 1 < model.p; ++e) {
        dlog[cur] = e;
        cur = cur * iso.primitive_root % model.p;
    }
    iso.log_of_orbit.assign(model.orbits.size(), UINT32_MAX);
    for (std::uint32_t o = 1; o < model.orbits.size(); ++o) {
        std::uint32_t label = dlog[model.orbits[o].front()] % iso.m;
        // well defined: all members share the label
        for (auto c : model.orbits[o])
            if (dlog[c] % iso.m != label)
                throw std::logic_error("nonzero_orbit_group_iso: label not constant on orbit");
        iso.log_of_orbit[o] = label;
    }
    // bijective onto Z/m and multiplicative: orbit(a) * orbit(b) = orbit(ab)
    std::vector<bool> seen(iso.m, false);
    for (std::uint32_t o = 1; o < model.orbits.size(); ++o) {
        if (seen[iso.log_of_orbit[o]])
            throw std::logic_error("nonzero_orbit_group_iso: labels collide");
        seen[iso.log_of_orbit[o]] = true;
    }
    for (std::uint32_t a = 1; a < model.orbits.size(); ++a)
        for (std::uint32_t b = 1; b < model.orbits.size(); ++b) {
            std::uint64_t prod =
                std::uint64_t(model.orbits[a].front()) * model.orbits[b].front() % model.p;
            std::uint32_t label = iso.log_of_orbit[model.orbit_of[prod]];
            if (label != (iso.log_of_orbit[a] + iso.log_of_orbit[b]) % iso.m)
                throw std::logic_error("nonzero_orbit_group_iso: not a homomorphism");
        }
    return iso;
}

PrimeDegreeReport prime_degree_classifier(const GroupPtr& group) {
    const std::uint32_t p = group->degree();
    if (!is_prime_u32(p))
        throw std::invalid_argument("prime_degree_classifier: degree is not prime");
    if (!group->is_transitive())
        throw std::invalid_argument("prime_degree_classifier: group is not transitive");

    auto h = point_stabilizer(group, 0);
    auto ctx = PairContext::make(group, h);
    PrimeDegreeReport rep;
    rep.p = p;
    for (std::uint32_t c = 1; c < ctx->class_count(); ++c)
        rep.class_dims.push_back(pattern_dimension(HBiset::from_classes(ctx, {c})));

    if (ctx->class_count() == 2) {
        rep.case_id = 1;
        rep.dims_uniform = rep.class_dims == std::vector<std::size_t>{p - 1};
        if (!rep.dims_uniform)
            throw std::logic_error("prime_degree_classifier: doubly transitive case broken");
        return rep;
    }

    // affine case: relabel points along a p-cycle and read off multipliers
    std::uint32_t sigma = UINT32_MAX;
    for (std::uint32_t i = 0; i < group->order(); ++i)
        if (group->order_of(i) == p) {
            sigma = i;
            break;
        }
    if (sigma == UINT32_MAX)
        throw std::logic_error("prime_degree_classifier: no element of order p");

    std::vector<std::uint32_t> label(p), point(p);  // label: point -> F_p
    {
        const auto& sp = group->element(sigma);
        std::uint32_t cur = 0;
        for (std::uint32_t i = 0; i < p; ++i) {
            point[i] = cur;
            label[cur] = i;
            cur = sp(cur);
        }
    }
    auto relabeled = [&](const Permutation& g, std::uint32_t x) {
        return label[g(point[x])];
    };
    // every generator must act affinely: x -> u x + v
    for (auto gi : group->generator_indices()) {
        const auto& perm = group->element(gi);
        std::uint32_t v = relabeled(perm, 0);
        std::uint32_t u = (relabeled(perm, 1) + p - v) % p;
        for (std::uint32_t x = 0; x < p; ++x)
            if (relabeled(perm, x) != (std::uint64_t(u) * x + v) % p)
                throw std::logic_error(
                    "prime_degree_classifier: transitive prime-degree group is neither "
                    "doubly transitive nor affine");
    }

    rep.case_id = 2;
    rep.r = std::uint32_t(h.order());
    // multiplier of a generator of the stabilizer of the base point
    rep.t = 1;
    for (auto hi : h.elements()) {
        const auto& perm = group->element(hi);
        if (relabeled(perm, 0) != 0)
            throw std::logic_error("prime_degree_classifier: stabilizer moved the base point");
        std::uint32_t u = relabeled(perm, 1);
        if (order_mod(u == 0 ? 1 : u, p) == rep.r) {
            rep.t = u;
            break;
        }
    }
    if (rep.r > 1 && order_mod(rep.t, p) != rep.r)
        throw std::logic_error("prime_degree_classifier: stabilizer is not cyclic of order r");

    rep.dims_uniform = true;
    for (auto d : rep.class_dims) rep.dims_uniform = rep.dims_uniform && d == rep.r;
    if (!rep.dims_uniform)
        throw std::logic_error("prime_degree_classifier: class dimensions are not uniform");
    return rep;
}

} // namespace bisetring
