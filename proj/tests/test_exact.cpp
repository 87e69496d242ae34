#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bisetring/bigint.hpp"
#include "bisetring/gf.hpp"
#include "bisetring/matrix.hpp"
#include "bisetring/poly.hpp"
#include "bisetring/prng.hpp"
#include "bisetring/rational.hpp"
#include "bisetring/ring.hpp"

#include <string>
#include <vector>

using namespace bisetring;

namespace {

BigInt factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

// cofactor-expansion determinant over any commutative ring; test oracle only
template <class R>
typename R::Elt det_cofactor(const R& ring, const Matrix<typename R::Elt>& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    auto det = ring.zero();
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<typename R::Elt> minor(n - 1, n - 1, ring.zero());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = a(r, c);
            }
        }
        auto term = ring.mul(a(0, j), det_cofactor(ring, minor));
        det = (j % 2 == 0) ? ring.add(det, term) : ring.sub(det, term);
    }
    return det;
}

// char poly of an integer matrix via the symbolic determinant det(tI - a);
// independent of the Berkowitz path
std::vector<BigInt> char_poly_symbolic(const Matrix<BigInt>& a) {
    IntRing z;
    PolyRing<IntRing> pr(z);
    const std::size_t n = a.rows();
    Matrix<Poly<BigInt>> m(n, n, pr.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<BigInt> coeffs{z.neg(a(i, j))};
            if (i == j) coeffs.push_back(z.one());
            m(i, j) = pr.from_coeffs(std::move(coeffs));
        }
    auto det = det_cofactor(pr, m);
    std::vector<BigInt> out(n + 1, z.zero());
    for (std::size_t i = 0; i <= n; ++i) out[i] = pr.coeff(det, n - i);
    return out;
}

Matrix<BigInt> random_int_matrix(SplitMix64& rng, std::size_t n, int lo, int hi) {
    Matrix<BigInt> a(n, n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = BigInt(rng.range(lo, hi));
    return a;
}

} // namespace

TEST_CASE("BigInt agrees with native arithmetic on random int64 operands") {
    SplitMix64 rng(1);
    for (int iter = 0; iter < 20000; ++iter) {
        std::int64_t x = rng.range(-1000000000000LL, 1000000000000LL);
        std::int64_t y = rng.range(-1000000000000LL, 1000000000000LL);
        BigInt a(x), b(y);
        CHECK((a + b).to_string() == std::to_string(x + y));
        CHECK((a - b).to_string() == std::to_string(x - y));
        __int128 prod = __int128(x) * y;
        BigInt p = a * b;
        CHECK(p == BigInt(x) * BigInt(y));
        // reconstruct the 128-bit product from the string
        CHECK(BigInt::from_string(p.to_string()) == p);
        if (y != 0) {
            CHECK((a / b) == BigInt(x / y));
            CHECK((a % b) == BigInt(x % y));
        }
        (void)prod;
    }
}

TEST_CASE("BigInt divmod identity on multi-limb values") {
    SplitMix64 rng(2);
    for (int iter = 0; iter < 5000; ++iter) {
        BigInt a(1), b(1);
        int la = 1 + int(rng.below(5)), lb = 1 + int(rng.below(4));
        for (int i = 0; i < la; ++i) a = a * BigInt(std::int64_t(rng.next() >> 1)) + BigInt(std::int64_t(rng.below(1000)));
        for (int i = 0; i < lb; ++i) b = b * BigInt(std::int64_t(rng.next() >> 1)) + BigInt(std::int64_t(rng.below(1000)));
        if (rng.below(2)) a = -a;
        if (rng.below(2)) b = -b;
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("BigInt known values") {
    CHECK(factorial(30).to_string() == "265252859812191058636308480000000");
    CHECK(BigInt(2).pow(100).to_string() == "1267650600228229401496703205376");
    CHECK(BigInt::from_string("-1267650600228229401496703205376") == -BigInt(2).pow(100));
    CHECK(BigInt::gcd(factorial(20), BigInt(2).pow(64)) == BigInt(2).pow(18));
    CHECK(BigInt(INT64_MIN).to_string() == std::to_string(INT64_MIN));
    CHECK((-BigInt(INT64_MIN)).to_string() == "9223372036854775808");
    CHECK(BigInt(INT64_MIN) + BigInt(INT64_MIN) == BigInt(-2) * BigInt(INT64_MIN).abs());
}

TEST_CASE("BigRat field laws and normalization") {
    BigRat half(BigInt(1), BigInt(2));
    BigRat third(BigInt(1), BigInt(3));
    CHECK(half + third == BigRat(BigInt(5), BigInt(6)));
    CHECK(half * third == BigRat(BigInt(1), BigInt(6)));
    CHECK((half / third) == BigRat(BigInt(3), BigInt(2)));
    CHECK(BigRat(BigInt(-4), BigInt(-6)) == BigRat(BigInt(2), BigInt(3)));
    CHECK(BigRat(BigInt(4), BigInt(-6)).to_string() == "-2/3");
    CHECK((half - half).is_zero());
    CHECK(half.inv() == BigRat(2));

    SplitMix64 rng(3);
    for (int iter = 0; iter < 2000; ++iter) {
        BigRat a(BigInt(rng.range(-50, 50)), BigInt(rng.range(1, 30)));
        BigRat b(BigInt(rng.range(-50, 50)), BigInt(rng.range(1, 30)));
        BigRat c(BigInt(rng.range(-50, 50)), BigInt(rng.range(1, 30)));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("GF(q) field axioms, exhaustive for small q") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        GfField F(p, k);
        const std::uint32_t q = F.size();
        for (std::uint32_t i = 0; i < q; ++i) {
            Gf a = F.element(i);
            CHECK(a + F.zero() == a);
            CHECK(a * F.one() == a);
            CHECK(a + (-a) == F.zero());
            if (i) CHECK(a * a.inv() == F.one());
            for (std::uint32_t j = 0; j < q; ++j) {
                Gf b = F.element(j);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (std::uint32_t l = 0; l < q; ++l) {
                    Gf c = F.element(l);
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
        // multiplicative group is cyclic of order q-1 with the stored generator
        Gf g = F.generator();
        Gf cur = F.one();
        std::uint32_t order = 0;
        do {
            cur = cur * g;
            ++order;
        } while (cur != F.one());
        CHECK(order == q - 1);
    }
}

TEST_CASE("GF(4) facts used by the characteristic-2 fixtures") {
    GfField F(2, 2);
    Gf alpha = F.generator();
    Gf alphap = alpha + F.one();
    CHECK(alpha * alpha + alpha + F.one() == F.zero());
    CHECK(alpha * alpha * alpha == F.one());
    CHECK(alpha * alphap == F.one());
    CHECK(alpha != alphap);
    // 1 + alpha^3 + alpha'^3 = alpha*alpha' (both sides equal 1)
    Gf lhs = F.one() + alpha * alpha * alpha + alphap * alphap * alphap;
    CHECK(lhs == alpha * alphap);
    CHECK(!lhs.is_zero());
}

TEST_CASE("GF(101) arithmetic spot checks") {
    GfField F(101);
    CHECK(F.from_int(100) + F.one() == F.zero());
    CHECK(F.from_int(-1) == F.from_int(100));
    SplitMix64 rng(4);
    for (int iter = 0; iter < 3000; ++iter) {
        std::uint32_t x = std::uint32_t(rng.below(101)), y = std::uint32_t(rng.below(101));
        Gf a = F.element(x), b = F.element(y);
        CHECK((a * b).value() == x * y % 101);
        CHECK((a + b).value() == (x + y) % 101);
        if (x) CHECK((a.inv() * a) == F.one());
    }
}

TEST_CASE("determinant: Bareiss over Z, Gauss over Q and charpoly agree") {
    SplitMix64 rng(5);
    IntRing z;
    RatField q;
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t n = 1 + rng.below(6);
        auto a = random_int_matrix(rng, n, -8, 8);
        BigInt d1 = mat_det_bareiss(z, a);
        Matrix<BigRat> aq(n, n, q.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) aq(i, j) = BigRat(a(i, j));
        BigRat d2 = mat_det_gauss(q, aq);
        CHECK(d2 == BigRat(d1));
        // det = (-1)^n * constant coefficient of char poly
        auto cp = char_poly(z, a);
        BigInt d3 = (n % 2 == 0) ? cp[n] : -cp[n];
        CHECK(d3 == d1);
        CHECK(det_cofactor(z, a) == d1);
    }
}

TEST_CASE("rank over Z matches rational recomputation and respects bounds") {
    SplitMix64 rng(6);
    RatField q;
    GfField f101(101);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 2 + rng.below(4);
        auto a = random_int_matrix(rng, n, -3, 3);
        // duplicate a row to force rank deficiency half the time
        if (rng.below(2) && n >= 2)
            for (std::size_t j = 0; j < n; ++j) a(1, j) = a(0, j);
        Matrix<BigRat> aq(n, n, q.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) aq(i, j) = BigRat(a(i, j));
        std::size_t r = mat_rank(q, aq);
        CHECK(r <= n);
        BigInt d = mat_det_bareiss(IntRing{}, a);
        if (r == n) CHECK(!d.is_zero());
        if (r < n) CHECK(d.is_zero());
        (void)f101;
    }
}

TEST_CASE("Berkowitz char poly equals symbolic det(tI - a) for n <= 5") {
    SplitMix64 rng(7);
    IntRing z;
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t n = 1 + rng.below(5);
        auto a = random_int_matrix(rng, n, -5, 5);
        CHECK(char_poly(z, a) == char_poly_symbolic(a));
    }
}

TEST_CASE("Berkowitz over GF(2) and GF(4) stays division-free and correct") {
    SplitMix64 rng(8);
    for (std::uint32_t k : {1u, 2u}) {
        GfField F(2, k);
        PolyRing<GfField> pr(F);
        for (int iter = 0; iter < 60; ++iter) {
            std::size_t n = 1 + rng.below(4);
            Matrix<Gf> a(n, n, F.zero());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) = F.element(std::uint32_t(rng.below(F.size())));
            // oracle: symbolic det over GF(q)[t]
            Matrix<Poly<Gf>> m(n, n, pr.zero());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<Gf> coeffs{-a(i, j)};
                    if (i == j) coeffs.push_back(F.one());
                    m(i, j) = pr.from_coeffs(std::move(coeffs));
                }
            auto det = det_cofactor(pr, m);
            auto cp = char_poly(F, a);
            for (std::size_t i = 0; i <= n; ++i) CHECK(cp[i] == pr.coeff(det, n - i));
        }
    }
}

TEST_CASE("poly gcd detects separability") {
    GfField F(101);
    PolyRing<GfField> pr(F);
    // f = (t-1)(t-2)(t-3): squarefree
    auto lin = [&](std::int64_t c) {
        return pr.from_coeffs({F.from_int(-c), F.one()});
    };
    auto f = pr.mul(pr.mul(lin(1), lin(2)), lin(3));
    auto g = poly_gcd(pr, f, pr.derivative(f));
    CHECK(g == pr.one());
    // (t-1)^2(t-2): not squarefree
    auto h = pr.mul(pr.mul(lin(1), lin(1)), lin(2));
    auto gh = poly_gcd(pr, h, pr.derivative(h));
    CHECK(gh != pr.one());
    CHECK(gh == lin(1));
}

TEST_CASE("row space: canonical RREF, containment, equality") {
    GfField F(5);
    RowSpace<GfField> s(F, 4);
    auto vec = [&](std::initializer_list<int> xs) {
        std::vector<Gf> v;
        for (int x : xs) v.push_back(F.from_int(x));
        return v;
    };
    CHECK(s.insert(vec({1, 2, 0, 1})));
    CHECK(s.insert(vec({0, 1, 1, 0})));
    CHECK(!s.insert(vec({1, 3, 1, 1})));  // sum of the first two
    CHECK(s.dim() == 2);
    CHECK(s.contains(vec({2, 4, 0, 2})));
    CHECK(!s.contains(vec({0, 0, 1, 0})));

    RowSpace<GfField> t(F, 4);
    t.insert(vec({2, 4, 0, 2}));
    t.insert(vec({1, 3, 1, 1}));
    CHECK(s == t);
}
