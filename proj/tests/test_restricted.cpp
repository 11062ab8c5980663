#include "doctest.h"
#include "modlie/corpus.hpp"
#include "modlie/pmap.hpp"

using namespace modlie;

namespace {

CorpusEntry by_name(const std::string& n) {
    for (auto& e : builtin_corpus())
        if (e.name == n) return e;
    throw std::runtime_error("missing corpus entry " + n);
}

RestrictedAlgebra restricted(const std::string& n) {
    CorpusEntry e = by_name(n);
    return {e.algebra, *e.pmap};
}

}  // namespace

TEST_CASE("power sum terms at p = 2") {
    CorpusEntry e = by_name("NA2p2");
    auto s = power_sum_terms(e.algebra, {1, 0}, {0, 1});
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Vec{0, 1});  // [y, x] = y over F_2
}

TEST_CASE("power sum terms vanish for the heisenberg algebra at p = 3") {
    CorpusEntry e = by_name("H3p3");
    // Brackets land in the centre, so every iterated term dies.
    for (unsigned ai = 0; ai < 3; ++ai)
        for (unsigned bi = 0; bi < 3; ++bi) {
            auto s = power_sum_terms(e.algebra, unit_vec(3, ai), unit_vec(3, bi));
            REQUIRE(s.size() == 2);
            CHECK(vec_is_zero(s[0]));
            CHECK(vec_is_zero(s[1]));
        }
}

TEST_CASE("power sum terms live in the derived algebra") {
    for (const char* name : {"NA2p3", "H3p2", "SL2p5"}) {
        CorpusEntry e = by_name(name);
        Subspace der = e.algebra.derived();
        SplitMix64 rng(13);
        for (int t = 0; t < 25; ++t) {
            Vec a(e.algebra.dim()), b(e.algebra.dim());
            for (auto& x : a) x = static_cast<unsigned>(rng.next_below(e.algebra.p()));
            for (auto& x : b) x = static_cast<unsigned>(rng.next_below(e.algebra.p()));
            for (const Vec& s : power_sum_terms(e.algebra, a, b))
                CHECK(der.contains(s));
        }
    }
}

TEST_CASE("p-th powers by folding") {
    RestrictedAlgebra r2 = restricted("NA2p2");
    CHECK(p_power(r2, {1, 0}) == Vec{1, 0});
    CHECK(p_power(r2, {0, 1}) == Vec{0, 0});
    CHECK(p_power(r2, {1, 1}) == Vec{1, 1});

    RestrictedAlgebra r3 = restricted("NA2p3");
    CHECK(p_power(r3, {1, 1}) == Vec{1, 1});
    CHECK(p_power(r3, {2, 0}) == Vec{2, 0});  // (2x)^[3] = 8 x^[3] = 2x

    // Defining law on arbitrary elements: ad(v^[p]) = ad(v)^p.
    for (const char* name : {"NA2p2", "NA2p3", "NA2p5", "H3p2", "H3p3", "SL2p5",
                             "W15p5"}) {
        RestrictedAlgebra r = restricted(name);
        const unsigned p = r.algebra.p();
        SplitMix64 rng(17);
        for (int t = 0; t < 20; ++t) {
            Vec v(r.algebra.dim());
            for (auto& x : v) x = static_cast<unsigned>(rng.next_below(p));
            CHECK(r.algebra.ad(p_power(r, v)) == r.algebra.ad(v).powed(p));
        }
    }
}

TEST_CASE("jacobson sum formula") {
    for (const char* name : {"NA2p2", "NA2p3", "H3p2", "SL2p5"}) {
        RestrictedAlgebra r = restricted(name);
        const unsigned p = r.algebra.p();
        const Fp f(p);
        SplitMix64 rng(23);
        for (int t = 0; t < 20; ++t) {
            Vec a(r.algebra.dim()), b(r.algebra.dim());
            for (auto& x : a) x = static_cast<unsigned>(rng.next_below(p));
            for (auto& x : b) x = static_cast<unsigned>(rng.next_below(p));
            Vec lhs = p_power(r, vec_add(f, a, b));
            Vec rhs = vec_add(f, p_power(r, a), p_power(r, b));
            for (const Vec& s : power_sum_terms(r.algebra, a, b))
                rhs = vec_add(f, rhs, s);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("p-map verification accepts the corpus structures") {
    for (const char* name : {"Ab1", "Ab2", "Ab3", "NA2p2", "NA2p3", "NA2p5",
                             "H3p2", "H3p3", "SL2p5", "W15p5"})
        CHECK(verify_p_map(restricted(name)));
}

TEST_CASE("p-map verification rejects a wrong image") {
    CorpusEntry e = by_name("NA2p2");
    PMap bad = *e.pmap;
    bad.images[1] = {0, 1};  // y^[2] = y contradicts ad(y)^2 = 0
    CHECK_FALSE(verify_p_map({e.algebra, bad}));
}

TEST_CASE("solving for a restricted structure") {
    CorpusEntry na2 = by_name("NA2p2");
    auto pm = solve_restriction(na2.algebra);
    REQUIRE(pm.has_value());
    CHECK(pm->images[0] == Vec{1, 0});
    CHECK(pm->images[1] == Vec{0, 0});

    CorpusEntry h3 = by_name("H3p2");
    auto hm = solve_restriction(h3.algebra);
    REQUIRE(hm.has_value());
    for (const Vec& im : hm->images) CHECK(vec_is_zero(im));

    CorpusEntry w = by_name("W15p5");
    auto wm = solve_restriction(w.algebra);
    REQUIRE(wm.has_value());
    CHECK(wm->images == w.pmap->images);

    // The filtration-shifted algebra is not restrictable.
    CorpusEntry nr = by_name("NR3p2");
    CHECK_FALSE(nr.pmap.has_value());
    CHECK_FALSE(solve_restriction(nr.algebra).has_value());
}

TEST_CASE("p-powers over a non-standard basis") {
    RestrictedAlgebra r = restricted("NA2p3");
    std::vector<Vec> rows = {{1, 1}, {0, 1}};
    std::vector<Vec> images = {p_power(r, {1, 1}), p_power(r, {0, 1})};
    CHECK(p_power_in_basis(r.algebra, rows, images, Vec{1, 1}) ==
          p_power(r, Vec{1, 1}));
    CHECK(p_power_in_basis(r.algebra, rows, images, Vec{1, 2}) ==
          p_power(r, Vec{1, 2}));
    CHECK(p_power_in_basis(r.algebra, rows, images, Vec{2, 0}) ==
          p_power(r, Vec{2, 0}));
}

TEST_CASE("forcing the p-map to vanish on an abelian ideal") {
    RestrictedAlgebra r = restricted("NA2p2");
    Subspace y = Subspace::span({{0, 1}}, 2, 2);
    PMap adj = zero_on_abelian_ideal(r, y);
    CHECK(adj.images == r.pmap.images);  // already vanishing there

    LieAlgebra ab(2, 2);
    RestrictedAlgebra rab{ab, PMap{{{0, 1}, {1, 0}}}};
    REQUIRE(verify_p_map(rab));
    PMap zx = zero_on_abelian_ideal(rab, Subspace::span({{1, 0}}, 2, 2));
    CHECK(vec_is_zero(zx.images[0]));
    CHECK(zx.images[1] == Vec{1, 0});
    CHECK(verify_p_map({ab, zx}));
}

TEST_CASE("adjusting the p-map on the abelian socle") {
    RestrictedAlgebra r = restricted("NA2p2");
    RestrictedAlgebra adj = zero_on_abelian_socle(r, 5);
    CHECK(adj.pmap.images == r.pmap.images);
    CHECK(adj.algebra == r.algebra);

    LieAlgebra ab(2, 2);
    RestrictedAlgebra rab{ab, PMap{{{1, 0}, {0, 0}}}};
    RestrictedAlgebra zeroed = zero_on_abelian_socle(rab, 5);
    for (const Vec& im : zeroed.pmap.images) CHECK(vec_is_zero(im));
    CHECK(verify_p_map(zeroed));

    RestrictedAlgebra sl = restricted("SL2p5");
    RestrictedAlgebra kept = zero_on_abelian_socle(sl, 5);
    CHECK(kept.pmap.images == sl.pmap.images);
}

TEST_CASE("p-ideal closures") {
    RestrictedAlgebra r = restricted("NA2p2");
    Subspace y = Subspace::span({{0, 1}}, 2, 2);
    CHECK(p_ideal_closure(r, y) == y);
    CHECK(is_p_ideal(r, y));
    Subspace x = Subspace::span({{1, 0}}, 2, 2);
    CHECK(p_ideal_closure(r, x).is_full());
    CHECK_FALSE(is_p_ideal(r, x));

    RestrictedAlgebra h = restricted("H3p2");
    Subspace z = Subspace::span({{0, 0, 1}}, 3, 2);
    CHECK(p_ideal_closure(h, z) == z);
    CHECK(is_p_ideal(h, z));

    // An ideal that is not p-closed: <x> inside Ab2 with x^[2] = z.
    LieAlgebra ab(2, 2);
    RestrictedAlgebra rz{ab, PMap{{{0, 1}, {0, 0}}}};
    Subspace line = Subspace::span({{1, 0}}, 2, 2);
    CHECK_FALSE(is_p_ideal(rz, line));
    CHECK(p_ideal_closure(rz, line).is_full());
}

TEST_CASE("minimal p-ideal reports") {
    PIdealReport na2 = minimal_p_ideals(restricted("NA2p2"), 1);
    CHECK(na2.unique);
    REQUIRE(na2.witnesses.size() == 1);
    CHECK(na2.witnesses[0] == Subspace::span({{0, 1}}, 2, 2));

    // Ab2 with x^[2] = x, z^[2] = 0: exactly <x> and <z> are minimal.
    LieAlgebra ab(2, 2);
    RestrictedAlgebra r{ab, PMap{{{1, 0}, {0, 0}}}};
    PIdealReport rep = minimal_p_ideals(r, 1);
    CHECK_FALSE(rep.unique);
    REQUIRE(rep.witnesses.size() == 2);
    Subspace ex = Subspace::span({{1, 0}}, 2, 2);
    Subspace ez = Subspace::span({{0, 1}}, 2, 2);
    bool found_x = rep.witnesses[0] == ex || rep.witnesses[1] == ex;
    bool found_z = rep.witnesses[0] == ez || rep.witnesses[1] == ez;
    CHECK(found_x);
    CHECK(found_z);
    for (const Subspace& w : rep.witnesses) CHECK(is_p_ideal(r, w));

    PIdealReport ab1 = minimal_p_ideals(restricted("Ab1"), 1);
    CHECK(ab1.unique);
    REQUIRE(ab1.witnesses.size() == 1);
    CHECK(ab1.witnesses[0].is_full());
}

TEST_CASE("restricted quotients") {
    RestrictedAlgebra r = restricted("NA2p2");
    RestrictedQuotient q =
        quotient_restricted(r, Subspace::span({{0, 1}}, 2, 2));
    CHECK(q.algebra.algebra.dim() == 1);
    CHECK(q.algebra.pmap.images[0] == Vec{1});  // x^[2] = x descends
    CHECK(verify_p_map(q.algebra));
    CHECK(q.projection.mul(q.section) == FpMatrix::identity(1, 2));

    RestrictedAlgebra h = restricted("H3p2");
    RestrictedQuotient qh =
        quotient_restricted(h, Subspace::span({{0, 0, 1}}, 3, 2));
    CHECK(qh.algebra.algebra.dim() == 2);
    CHECK(qh.algebra.algebra.is_abelian_algebra());
    for (const Vec& im : qh.algebra.pmap.images) CHECK(vec_is_zero(im));
}
