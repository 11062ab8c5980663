#include <algorithm>

#include "doctest.h"
#include "modlie/poly.hpp"

using namespace modlie;

namespace {

Poly make(std::initializer_list<unsigned> low_first, unsigned p) {
    return Poly(Vec(low_first), p);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    Poly a = make({1, 1}, 3);  // x + 1
    CHECK(a.mul(a) == make({1, 2, 1}, 3));
    Poly b = make({1, 1}, 2);
    CHECK(b.mul(b) == make({1, 0, 1}, 2));
    CHECK(a.add(make({2, 2}, 3)).is_zero());
    CHECK(a.sub(a).is_zero());
    CHECK(a.degree() == 1);
    CHECK(Poly::zero(3).degree() == -1);
    CHECK(make({0, 0, 0}, 3).is_zero());  // trailing zeros trimmed
    CHECK(a.scaled(2) == make({2, 2}, 3));
    CHECK(Poly::x(5).coeffs() == Vec{0, 1});
}

TEST_CASE("division with remainder") {
    Poly f = make({1, 1, 0, 1}, 2);  // x^3 + x + 1
    Poly d = make({1, 0, 1}, 2);     // x^2 + 1
    auto [q, r] = f.divmod(d);
    CHECK(q == Poly::x(2));
    CHECK(r == Poly::one(2));
    CHECK(q.mul(d).add(r) == f);
    CHECK(f.mod(d) == r);
    CHECK(f.div(d) == q);

    Poly g = make({2, 0, 1}, 5);  // x^2 + 2
    Poly e = make({3, 1}, 5);     // x + 3
    auto [q2, r2] = g.divmod(e);
    CHECK(q2.mul(e).add(r2) == g);
    CHECK(r2.degree() < e.degree());
}

TEST_CASE("derivative and gcd") {
    // d/dx (x^3 + x + 1) = 3x^2 + 1 = 1 over F_3
    CHECK(make({1, 1, 0, 1}, 3).derivative() == Poly::one(3));
    CHECK(make({1, 0, 1}, 2).derivative().is_zero());
    // x^2 + 1 = (x+1)^2 over F_2
    CHECK(gcd(make({1, 0, 1}, 2), make({1, 1}, 2)) == make({1, 1}, 2));
    CHECK(gcd(make({1, 1}, 2), Poly::zero(2)) == make({1, 1}, 2));
    Poly m = make({2, 4}, 5);
    CHECK(m.monic() == make({3, 1}, 5));
    CHECK(gcd(m, m).is_monic());
}

TEST_CASE("evaluation at scalars and matrices") {
    Poly f = make({1, 0, 1}, 5);  // x^2 + 1
    CHECK(f.eval(2u) == 0);
    CHECK(f.eval(1u) == 2);
    FpMatrix m(2, 2, 5);
    m.at(0, 1) = 1; m.at(1, 0) = 4;  // M^2 = -I
    CHECK(f.eval(m).is_zero());
    FpMatrix sw(2, 2, 2);
    sw.at(0, 1) = 1; sw.at(1, 0) = 1;
    Poly f2 = make({1, 0, 1}, 2);
    CHECK(f2.eval(sw).is_zero());  // M^2 = I, so M^2 + I = 0 over F_2
    CHECK_FALSE(make({0, 1}, 2).eval(sw).is_zero());
}

TEST_CASE("characteristic polynomials") {
    // Companion matrix of x^2 + x + 1 over F_2.
    FpMatrix c(2, 2, 2);
    c.at(0, 1) = 1; c.at(1, 0) = 1; c.at(1, 1) = 1;
    CHECK(charpoly(c) == make({1, 1, 1}, 2));

    FpMatrix d(2, 2, 5);
    d.at(0, 0) = 1; d.at(1, 1) = 2;
    CHECK(charpoly(d) == make({2, 2, 1}, 5));  // (x-1)(x-2) = x^2 + 2x + 2

    CHECK(charpoly(FpMatrix(0, 0, 3)) == Poly::one(3));
    // (x-1)^3 = x^3 + 2 over F_3
    CHECK(charpoly(FpMatrix::identity(3, 3)) == make({2, 0, 0, 1}, 3));
}

TEST_CASE("cayley-hamilton on random matrices") {
    SplitMix64 rng(99);
    for (unsigned p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 20; ++trial) {
            size_t n = 1 + rng.next_below(4);
            FpMatrix m(n, n, p);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    m.at(i, j) = static_cast<unsigned>(rng.next_below(p));
            Poly cp = charpoly(m);
            CHECK(cp.degree() == static_cast<int>(n));
            CHECK(cp.is_monic());
            CHECK(cp.eval(m).is_zero());
        }
    }
}

TEST_CASE("factorization into irreducibles") {
    SplitMix64 rng(7);
    auto fs = factor(make({1, 0, 1}, 2), rng);  // (x+1)^2
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == make({1, 1}, 2));
    CHECK(fs[0].second == 2);

    auto gs = factor(make({1, 0, 1}, 5), rng);  // (x+2)(x+3)
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].first == make({2, 1}, 5));
    CHECK(gs[1].first == make({3, 1}, 5));
    CHECK(gs[0].second == 1);
    CHECK(gs[1].second == 1);

    // x (x^2+x+1)^2 over F_2; canonical order lists the linear factor first.
    Poly h = Poly::x(2).mul(make({1, 1, 1}, 2)).mul(make({1, 1, 1}, 2));
    auto hs = factor(h, rng);
    REQUIRE(hs.size() == 2);
    CHECK(hs[0].first == Poly::x(2));
    CHECK(hs[0].second == 1);
    CHECK(hs[1].first == make({1, 1, 1}, 2));
    CHECK(hs[1].second == 2);
}

TEST_CASE("factorization with vanishing derivative") {
    // (x^3 + 2x + 1)^3 = x^9 + 2x^3 + 1 over F_3 (Frobenius); the cube has
    // zero derivative, exercising the p-th-root branch.
    Poly f = make({1, 2, 0, 1}, 3);
    Poly f3 = f.mul(f).mul(f);
    CHECK(f3 == make({1, 0, 0, 2, 0, 0, 0, 0, 0, 1}, 3));
    CHECK(f3.derivative().is_zero());
    SplitMix64 rng(11);
    auto fs = factor(f3, rng);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == f);
    CHECK(fs[0].second == 3);
}

TEST_CASE("irreducibility certificates") {
    CHECK(is_irreducible(make({1, 1, 1}, 2)));
    CHECK_FALSE(is_irreducible(make({1, 0, 1}, 2)));
    CHECK(is_irreducible(make({1, 0, 1}, 3)));   // -1 is not a square mod 3
    CHECK(is_irreducible(make({1, 2, 0, 1}, 3)));
    CHECK_FALSE(is_irreducible(Poly::one(2)));
}

TEST_CASE("factor output is seed-stable") {
    Poly f = make({1, 0, 0, 0, 1, 1}, 2).mul(make({1, 1}, 2)).mul(make({0, 1}, 2));
    SplitMix64 a(3), b(3);
    auto fa = factor(f, a);
    auto fb = factor(f, b);
    REQUIRE(fa.size() == fb.size());
    for (size_t i = 0; i < fa.size(); ++i) {
        CHECK(fa[i].first == fb[i].first);
        CHECK(fa[i].second == fb[i].second);
    }
    // Products reassemble the input (monic case).
    Poly prod = Poly::one(2);
    for (auto& [g, e] : fa)
        for (unsigned k = 0; k < e; ++k) prod = prod.mul(g);
    CHECK(prod == f.monic());
}
