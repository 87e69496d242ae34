#include "bisetring/newton.hpp"

#include <stdexcept>

namespace bisetring {

std::vector<SetPartition> enumerate_partitions(unsigned r) {
    if (r < 1) throw std::invalid_argument("enumerate_partitions: need r >= 1");
    if (r > 9) throw std::invalid_argument("enumerate_partitions: r capped at 9");
    std::vector<SetPartition> out;
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    std::vector<std::uint8_t> a(r, 0);
    while (true) {
        std::uint8_t nblocks = 0;
        for (auto x : a) nblocks = std::max<std::uint8_t>(nblocks, x + 1);
        SetPartition part;
        part.blocks.assign(nblocks, {});
        for (std::uint8_t i = 0; i < r; ++i) part.blocks[a[i]].push_back(i);
        part.sign = (r - nblocks) % 2 == 0 ? 1 : -1;
        out.push_back(std::move(part));

        // next RGS
        bool advanced = false;
        for (std::size_t i = r; i-- > 1;) {
            std::uint8_t maxp = 0;
            for (std::size_t j = 0; j < i; ++j) maxp = std::max(maxp, a[j]);
            if (a[i] <= maxp) {
                ++a[i];
                for (std::size_t j = i + 1; j < r; ++j) a[j] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) return out;
    }
}

Char2Report char2_example_suite() {
    Char2Report rep;
    GfField f4(2, 2);
    const Gf zero = f4.zero(), one = f4.one();
    const Gf alpha = f4.generator();
    const Gf alphap = alpha + one;

    auto diag = [&](std::initializer_list<Gf> entries) {
        Matrix<Gf> m(6, 6, zero);
        std::size_t i = 0;
        for (const auto& e : entries) m(i, i) = e, ++i;
        return m;
    };

    // family 1: TTL holds for r = 3, TT fails
    std::vector<Matrix<Gf>> fam1{diag({one, zero, zero, zero, alpha, alphap}),
                                 diag({zero, one, zero, zero, alphap, alpha}),
                                 diag({zero, zero, one, one, zero, zero})};
    {
        auto rep1 = tr_tt_implication_check(f4, fam1, 3, 0, 1);
        rep.family1_ttl_holds = rep1.ttl_holds;
        rep.family1_tt_fails = !rep1.tt_holds;
        if (!rep1.implications_ok())
            throw std::logic_error("char2_example_suite: family 1 broke an implication");
        // explicit witness: tr(a1^3) = 1 + alpha^3 + alpha'^3
        auto cube = mat_mul(f4, mat_mul(f4, fam1[0], fam1[0]), fam1[0]);
        Gf val = mat_trace(f4, cube);
        Gf expected = alpha * alphap;
        rep.identity_value_ok = (val == expected) && !val.is_zero();
        rep.family1_witness = "tr(a1^3) = " + val.to_string();
    }

    // family 2: TT holds for r = 3, TTL fails (rho = alpha, a primitive cube root)
    const Gf rho = alpha;
    std::vector<Matrix<Gf>> fam2{diag({one, zero, zero, one, rho, rho}),
                                 diag({zero, one, zero, rho, one, rho}),
                                 diag({zero, zero, one, rho, rho, one})};
    {
        auto rep2 = tr_tt_implication_check(f4, fam2, 3, 0, 2);
        rep.family2_tt_holds = rep2.tt_holds;
        rep.family2_ttl_fails = !rep2.ttl_holds;
        if (!rep2.implications_ok())
            throw std::logic_error("char2_example_suite: family 2 broke an implication");
        Gf val = mat_trace(f4, mat_mul(f4, fam2[0], fam2[1]));
        rep.family2_witness = "tr(a1*a2) = " + val.to_string();
        if (val.is_zero()) rep.family2_ttl_fails = false;
    }

    // commuting diagonal matrices: tr(a1,a2,a3) = 2 tr(a1 a2 a3) = 0 in char 2
    rep.commuting_triples_vanish = true;
    SplitMix64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Matrix<Gf>> triple;
        for (int i = 0; i < 3; ++i) {
            Matrix<Gf> m(6, 6, zero);
            for (int d = 0; d < 6; ++d)
                m(d, d) = f4.element(std::uint32_t(rng.below(4)));
            triple.push_back(std::move(m));
        }
        if (!f4.is_zero(symmetrized_trace(f4, triple))) rep.commuting_triples_vanish = false;
    }
    return rep;
}

} // namespace bisetring
