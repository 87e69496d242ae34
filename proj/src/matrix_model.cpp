#include "bisetring/matrix_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisetring {

namespace {

std::vector<Gf> flatten(const Matrix<Gf>& a) {
    std::vector<Gf> v;
    v.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
    return v;
}

// augmenting-path bipartite matching on the pattern graph
bool try_augment(const SpanPattern& p, std::uint32_t row, std::vector<int>& match_col,
                 std::vector<bool>& visited) {
    for (std::uint32_t j = 0; j < p.n(); ++j) {
        if (!p.test(row, j) || visited[j]) continue;
        visited[j] = true;
        if (match_col[j] < 0 ||
            try_augment(p, std::uint32_t(match_col[j]), match_col, visited)) {
            match_col[j] = int(row);
            return true;
        }
    }
    return false;
}

} // namespace

SpanPattern support_pattern(const GfField& field, const Matrix<Gf>& a) {
    SpanPattern p(std::uint32_t(a.rows()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!field.is_zero(a(i, j))) p.set(std::uint32_t(i), std::uint32_t(j));
    return p;
}

SpanPattern kk_span_pattern(const GfField& field, const Matrix<Gf>& a) {
    const std::uint32_t n = std::uint32_t(a.rows());
    RowSpace<GfField> space(field, std::size_t(n) * n);
    // d a d' for diagonal idempotent pairs; these already span the closure
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            Matrix<Gf> e(n, n, field.zero());
            e(i, j) = a(i, j);
            space.insert(flatten(e));
        }
    SpanPattern p(n);
    for (const auto& row : space.basis()) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                if (!field.is_zero(row[std::size_t(i) * n + j])) p.set(i, j);
    }
    return p;
}

Matrix<Gf> random_patterned_element(const GfField& field, const SpanPattern& p,
                                    SplitMix64& rng) {
    const std::uint32_t n = p.n();
    Matrix<Gf> a(n, n, field.zero());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (p.test(i, j))
                a(i, j) = field.element(1 + std::uint32_t(rng.below(field.size() - 1)));
    return a;
}

std::optional<std::vector<std::uint32_t>> pattern_matching(const SpanPattern& p) {
    const std::uint32_t n = p.n();
    std::vector<int> match_col(n, -1);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<bool> visited(n, false);
        if (!try_augment(p, i, match_col, visited)) return std::nullopt;
    }
    std::vector<std::uint32_t> row_to_col(n, 0);
    for (std::uint32_t j = 0; j < n; ++j) row_to_col[std::uint32_t(match_col[j])] = j;
    return row_to_col;
}

MainIsomorphismReport verify_main_isomorphism(const PairContextPtr& ctx,
                                              std::size_t union_samples,
                                              std::uint64_t seed, std::uint32_t q) {
    MainIsomorphismReport report;
    const std::size_t nc = ctx->class_count();
    report.classes = nc;
    SplitMix64 rng(seed);
    GfField field(q);

    std::vector<HBiset> bisets;
    for (std::uint32_t c = 0; c < nc; ++c) bisets.push_back(HBiset::from_classes(ctx, {c}));
    for (std::size_t k = 0; k < union_samples; ++k) {
        Bitset m(nc);
        for (std::size_t c = 0; c < nc; ++c)
            if (rng.below(2)) m.set(c);
        bisets.push_back(HBiset::from_class_mask(ctx, std::move(m)));
    }

    // injectivity: distinct bisets must give distinct patterns
    for (std::size_t i = 0; i < bisets.size(); ++i)
        for (std::size_t j = i + 1; j < bisets.size(); ++j)
            if (bisets[i] != bisets[j] &&
                phi_pattern(bisets[i]) == phi_pattern(bisets[j]))
                report.failures.push_back("phi not injective on biset pair " +
                                          std::to_string(i) + "," + std::to_string(j));

    for (const auto& s : bisets) {
        if (phi_pattern(s.inverse()) != phi_pattern(s).transpose())
            report.failures.push_back("involution mismatch");
        if (!s.is_empty() && pattern_dimension(s) * ctx->coset_count() != phi_pattern(s).count())
            report.failures.push_back("dimension mismatch");
    }

    for (const auto& a : bisets)
        for (const auto& b : bisets) {
            ++report.pairs_checked;
            SpanPattern pa = phi_pattern(a), pb = phi_pattern(b);
            SpanPattern predicted = phi_pattern(a * b);
            if (span_product(pa, pb) != predicted) {
                report.failures.push_back("product mismatch");
                continue;
            }
            if (phi_pattern(a | b) != (pa | pb)) {
                report.failures.push_back("union mismatch");
                continue;
            }
            if (a.is_empty() || b.is_empty()) continue;
            // concrete products over GF(q): each must lie in the predicted
            // span, and together they must span it (not merely touch every
            // entry), so accumulate an actual row space
            const std::uint32_t n = predicted.n();
            RowSpace<GfField> span(field, std::size_t(n) * n);
            bool contained = true;
            for (int trial = 0; trial < 32 && span.dim() < predicted.count(); ++trial) {
                auto x = random_patterned_element(field, pa, rng);
                auto y = random_patterned_element(field, pb, rng);
                auto prod = mat_mul(field, x, y);
                contained = contained && predicted.contains(support_pattern(field, prod));
                std::vector<Gf> flat;
                flat.reserve(std::size_t(n) * n);
                for (std::uint32_t i = 0; i < n; ++i)
                    for (std::uint32_t j = 0; j < n; ++j) flat.push_back(prod(i, j));
                span.insert(flat);
                // the product span is closed under diagonal multiplication
                // (d (xy) d' = (dx)(yd')), so its unit slices belong to it too
                for (std::uint32_t i = 0; i < n; ++i)
                    for (std::uint32_t j = 0; j < n; ++j) {
                        if (field.is_zero(prod(i, j))) continue;
                        std::vector<Gf> slice(std::size_t(n) * n, field.zero());
                        slice[std::size_t(i) * n + j] = prod(i, j);
                        span.insert(std::move(slice));
                    }
            }
            if (!contained)
                report.failures.push_back("matrix product escaped the predicted span");
            if (span.dim() != predicted.count())
                report.failures.push_back("matrix products failed to span the prediction");
        }
    return report;
}

InvertibleSearch find_invertible_in_span(const GfField& field, const HBiset& s,
                                         std::size_t attempts, std::uint64_t seed) {
    if (s.is_empty())
        throw std::invalid_argument("find_invertible_in_span: empty biset");
    SpanPattern p = phi_pattern(s);
    InvertibleSearch out;
    out.element = Matrix<Gf>(p.n(), p.n(), field.zero());

    if (auto matching = pattern_matching(p)) {
        for (std::uint32_t i = 0; i < p.n(); ++i) out.element(i, (*matching)[i]) = field.one();
        out.determinant = mat_det_gauss(field, out.element);
        out.found = true;
        out.used_permutation = true;
        return out;
    }
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < attempts; ++t) {
        auto a = random_patterned_element(field, p, rng);
        Gf d = mat_det_gauss(field, a);
        if (!field.is_zero(d)) {
            out.element = std::move(a);
            out.determinant = d;
            out.found = true;
            return out;
        }
    }
    return out;
}

bool trace_zero_check(const HBiset& s) {
    bool by_pattern = phi_pattern(s).diagonal_empty();
    bool by_biset = !s.contains_unit_class();
    if (by_pattern != by_biset)
        throw std::logic_error("trace_zero_check: pattern and biset disagree");
    return by_pattern;
}

SpanPattern centralizer_pattern(const PairContextPtr& ctx, const SubgroupH& hprime) {
    if (hprime.parent() != ctx->group())
        throw std::invalid_argument("centralizer_pattern: wrong parent group");
    if (!hprime.mask().contains(ctx->h().mask()))
        throw std::invalid_argument("centralizer_pattern: H' does not contain H");

    HBiset s = HBiset::from_element_mask(ctx, hprime.mask());
    SpanPattern p = phi_pattern(s);

    // commutant route: block-diagonal over H'-cosets of the representatives
    const auto& g = *ctx->group();
    const auto& reps = ctx->cosets().representatives;
    const std::uint32_t n = std::uint32_t(reps.size());
    std::vector<std::uint32_t> block(n);
    {
        // label each coset rep by its H'-coset (minimal member index)
        std::vector<std::uint32_t> label(g.order(), UINT32_MAX);
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            if (label[x] != UINT32_MAX) continue;
            for (auto a : hprime.elements()) label[g.mul(x, a)] = x;
        }
        for (std::uint32_t i = 0; i < n; ++i) block[i] = label[reps[i]];
    }
    SpanPattern commutant(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (block[i] == block[j]) commutant.set(i, j);
    if (commutant != p)
        throw std::logic_error("centralizer_pattern: phi(H') differs from the commutant");
    return p;
}

SpanPattern twisted_centralizer_pattern(const PairContextPtr& ctx, const SubgroupH& n_sub,
                                        std::uint32_t sigma) {
    const auto& g = *ctx->group();
    if (!n_sub.mask().contains(ctx->h().mask()))
        throw std::invalid_argument("twisted_centralizer_pattern: N does not contain H");
    // sigma must normalize N
    std::uint32_t si = g.inv(sigma);
    for (auto x : n_sub.elements())
        if (!n_sub.contains(g.mul(g.mul(sigma, x), si)))
            throw std::invalid_argument("twisted_centralizer_pattern: sigma does not normalize N");

    Bitset coset = ctx->right_translate(n_sub.mask(), sigma);  // N sigma
    HBiset s = HBiset::from_element_mask(ctx, coset);
    SpanPattern p = phi_pattern(s);

    // permuted-block route: (i,j) set iff g_j N = g_i sigma N
    const auto& reps = ctx->cosets().representatives;
    const std::uint32_t n = std::uint32_t(reps.size());
    std::vector<std::uint32_t> label(g.order(), UINT32_MAX);
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (label[x] != UINT32_MAX) continue;
        for (auto a : n_sub.elements()) label[g.mul(x, a)] = x;
    }
    SpanPattern blocks(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (label[reps[j]] == label[g.mul(reps[i], sigma)]) blocks.set(i, j);
    if (blocks != p)
        throw std::logic_error(
            "twisted_centralizer_pattern: phi(N sigma) differs from the block description");
    return p;
}

KakChainReport kak_power_chain(const GfField& field, const HBiset& s, std::uint32_t m_max,
                               std::uint64_t seed) {
    if (s.class_mask().count() != 1)
        throw std::invalid_argument("kak_power_chain: S must be a single class");
    const auto& ctx = s.ctx();
    const std::uint32_t g_elt = ctx->dcosets().representatives[std::uint32_t(s.class_mask().first())];
    const std::uint32_t n = std::uint32_t(ctx->coset_count());
    SpanPattern p1 = phi_pattern(s);

    KakChainReport report;
    report.biset_height = height_profile(ctx, g_elt).height;

    // generic invertible element on the pattern
    SplitMix64 rng(seed);
    Matrix<Gf> a(n, n, field.zero());
    while (true) {
        a = random_patterned_element(field, p1, rng);
        if (support_pattern(field, a) == p1 && !field.is_zero(mat_det_gauss(field, a)))
            break;
        ++report.retries;
        if (report.retries > 200)
            throw std::runtime_error("kak_power_chain: no generic invertible sample found");
    }

    // inverse of a via Gauss-Jordan
    Matrix<Gf> ainv = mat_identity(field, n);
    {
        Matrix<Gf> work = a;
        for (std::uint32_t col = 0; col < n; ++col) {
            std::uint32_t piv = col;
            while (field.is_zero(work(piv, col))) ++piv;
            if (piv != col)
                for (std::uint32_t j = 0; j < n; ++j) {
                    std::swap(work(piv, j), work(col, j));
                    std::swap(ainv(piv, j), ainv(col, j));
                }
            Gf d = field.inv(work(col, col));
            for (std::uint32_t j = 0; j < n; ++j) {
                work(col, j) = work(col, j) * d;
                ainv(col, j) = ainv(col, j) * d;
            }
            for (std::uint32_t i = 0; i < n; ++i) {
                if (i == col || field.is_zero(work(i, col))) continue;
                Gf f = work(i, col);
                for (std::uint32_t j = 0; j < n; ++j) {
                    work(i, j) = work(i, j) - f * work(col, j);
                    ainv(i, j) = ainv(i, j) - f * ainv(col, j);
                }
            }
        }
    }

    // span bases of (K a K)^m, by repeated span products with K-K closure
    auto closure_basis = [&](const std::vector<Matrix<Gf>>& gens) {
        RowSpace<GfField> space(field, std::size_t(n) * n);
        std::vector<Matrix<Gf>> basis;
        for (const auto& mmat : gens)
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 0; j < n; ++j) {
                    if (field.is_zero(mmat(i, j))) continue;
                    Matrix<Gf> e(n, n, field.zero());
                    e(i, j) = mmat(i, j);
                    if (space.insert(flatten(e))) basis.push_back(std::move(e));
                }
        return std::make_pair(std::move(space), std::move(basis));
    };

    auto [v1_space, v1_basis] = closure_basis({a});
    std::vector<Matrix<Gf>> vm_basis = v1_basis;
    RowSpace<GfField> vm_space = v1_space;

    HBiset power = s;
    std::vector<RowSpace<GfField>> w_chain;  // K(a,m) spans, m = 0..
    {
        RowSpace<GfField> w0(field, std::size_t(n) * n);
        for (std::uint32_t i = 0; i < n; ++i) {
            Matrix<Gf> e(n, n, field.zero());
            e(i, i) = field.one();
            w0.insert(flatten(e));
        }
        w_chain.push_back(std::move(w0));  // K itself
    }
    report.conj_chain_dims.push_back(w_chain[0].dim());

    Matrix<Gf> ainv_m = mat_identity(field, n);
    bool algebra_height_found = false;
    for (std::uint32_t m = 1; m <= m_max; ++m) {
        if (m > 1) {
            std::vector<Matrix<Gf>> products;
            for (const auto& x : vm_basis)
                for (const auto& y : v1_basis) products.push_back(mat_mul(field, x, y));
            auto [sp, bs] = closure_basis(products);
            vm_space = std::move(sp);
            vm_basis = std::move(bs);
            power = power * s;
        }
        // support of the actual span must match the predicted pattern
        SpanPattern actual(n);
        for (const auto& b : vm_basis)
            actual = actual | support_pattern(field, b);
        SpanPattern predicted = phi_pattern(power);
        if (actual != predicted)
            throw std::logic_error("kak_power_chain: actual span differs from phi(S^m)");
        report.power_patterns.push_back(actual);
        if (vm_space.dim() % n != 0)
            throw std::logic_error("kak_power_chain: span dimension not divisible by n");
        report.power_dims.push_back(vm_space.dim() / n);

        // K(a,m) = (KaK)^m a^{-m}
        ainv_m = mat_mul(field, ainv_m, ainv);
        RowSpace<GfField> wm(field, std::size_t(n) * n);
        for (const auto& b : vm_basis) wm.insert(flatten(mat_mul(field, b, ainv_m)));
        if (!wm.contains(w_chain.back()))
            throw std::logic_error("kak_power_chain: conjugate chain failed to ascend");
        if (!algebra_height_found && wm == w_chain.back()) {
            report.algebra_height = m - 1;
            algebra_height_found = true;
        }
        report.conj_chain_dims.push_back(wm.dim());
        w_chain.push_back(std::move(wm));
    }
    if (!algebra_height_found)
        throw std::logic_error("kak_power_chain: chain did not stabilize within m_max");
    if (report.algebra_height != report.biset_height)
        throw std::logic_error("kak_power_chain: algebra and biset heights disagree");
    return report;
}

} // namespace bisetring
