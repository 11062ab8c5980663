#include "doctest.h"
#include "modlie/corpus.hpp"
#include "modlie/induced.hpp"
#include "modlie/meataxe.hpp"

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

TEST_CASE("character selection") {
    RestrictedAlgebra r = restricted("NA2p2");
    Subspace y = Subspace::span({{0, 1}}, 2, 2);
    Character c = choose_character(r, y);
    CHECK(c.c == Vec{0, 1});
    CHECK_THROWS_AS(choose_character(r, Subspace(2, 2)), std::invalid_argument);
}

TEST_CASE("induced module of the nonabelian 2-dim algebra at p = 2") {
    RestrictedAlgebra r = restricted("NA2p2");
    Subspace y = Subspace::span({{0, 1}}, 2, 2);
    LieModule m = induced_module(r, y, choose_character(r, y), 4096);
    REQUIRE(m.dim() == 2);
    CHECK(m.verify(r.algebra));
    // Frozen matrices on the basis {1 (x) w, x (x) w}.
    FpMatrix rx(2, 2, 2), ry(2, 2, 2);
    rx.at(1, 0) = 1; rx.at(1, 1) = 1;
    ry.at(0, 0) = 1; ry.at(0, 1) = 1; ry.at(1, 1) = 1;
    CHECK(m.action(0) == rx);
    CHECK(m.action(1) == ry);
    CHECK(is_faithful(m));
    CHECK(chop(m, 1).irreducible());
}

TEST_CASE("induced module of the nonabelian 2-dim algebra at p = 3") {
    RestrictedAlgebra r = restricted("NA2p3");
    Subspace y = Subspace::span({{0, 1}}, 2, 3);
    LieModule m = induced_module(r, y, choose_character(r, y), 4096);
    REQUIRE(m.dim() == 3);
    CHECK(m.verify(r.algebra));
    // x cycles the monomial ladder with x^3 = x^[3] = x at the top.
    FpMatrix rx(3, 3, 3);
    rx.at(1, 0) = 1; rx.at(2, 1) = 1; rx.at(1, 2) = 1;
    CHECK(m.action(0) == rx);
    // y acts triangularly: y(x^k (x) w) = x^k (x) w - k x^{k-1} (x) w + ...
    FpMatrix ry(3, 3, 3);
    ry.at(0, 0) = 1; ry.at(0, 1) = 2; ry.at(0, 2) = 1;
    ry.at(1, 1) = 1; ry.at(1, 2) = 1;
    ry.at(2, 2) = 1;
    CHECK(m.action(1) == ry);
    CHECK(is_faithful(m));
}

TEST_CASE("induced modules stay faithful and the right size for every prime") {
    for (const char* name : {"NA2p2", "NA2p3", "NA2p5"}) {
        RestrictedAlgebra r = restricted(name);
        const unsigned p = r.algebra.p();
        Subspace y = Subspace::span({{0, 1}}, 2, p);
        LieModule m = induced_module(r, y, choose_character(r, y), 4096);
        CHECK(m.dim() == p);
        CHECK(m.verify(r.algebra));
        CHECK(is_faithful(m));
        CHECK(chop(m, 7).irreducible());
    }
}

TEST_CASE("central character makes the centre act as identity") {
    RestrictedAlgebra r = restricted("H3p2");
    Subspace z = Subspace::span({{0, 0, 1}}, 3, 2);
    LieModule m = induced_module(r, z, choose_character(r, z), 4096);
    REQUIRE(m.dim() == 4);
    CHECK(m.verify(r.algebra));
    CHECK(m.action(2) == FpMatrix::identity(4, 2));
    CHECK(is_faithful(m));
    auto fs = composition_factors(m, 3);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].module.dim() == 2);
    CHECK(fs[1].module.dim() == 2);
    // The central action survives in every factor.
    for (const auto& fe : fs)
        CHECK(fe.module.action(2) == FpMatrix::identity(2, 2));
}

TEST_CASE("inducing from a larger subalgebra gives a smaller module") {
    RestrictedAlgebra r = restricted("H3p2");
    Subspace yz = Subspace::span({{0, 1, 0}, {0, 0, 1}}, 3, 2);
    Character c = choose_character(r, yz);
    CHECK(c.c == Vec{0, 1, 0});
    LieModule m = induced_module(r, yz, c, 4096);
    REQUIRE(m.dim() == 2);
    CHECK(m.verify(r.algebra));
    // With c(z) = 0 the centre acts as zero, so this one is not faithful.
    CHECK(m.action(2).is_zero());
    CHECK_FALSE(is_faithful(m));
    FpMatrix rx(2, 2, 2);
    rx.at(1, 0) = 1;
    CHECK(m.action(0) == rx);
}

TEST_CASE("induction from a non-ideal subalgebra") {
    RestrictedAlgebra r = restricted("SL2p5");
    // <f> is an abelian subalgebra with f^[5] = 0.
    Subspace fsub = Subspace::span({{0, 0, 1}}, 3, 5);
    LieModule m = induced_module(r, fsub, choose_character(r, fsub), 4096);
    CHECK(m.dim() == 25);
    CHECK(m.verify(r.algebra));
}

TEST_CASE("induction preconditions") {
    RestrictedAlgebra r = restricted("SL2p5");
    // The whole algebra is not abelian.
    CHECK_THROWS_AS(
        induced_module(r, Subspace::full(3, 5), Character{{0, 0, 0}}, 4096),
        std::invalid_argument);
    // h^[5] = h, and the dual character of <h> does not vanish on it.
    Subspace h = Subspace::span({{1, 0, 0}}, 3, 5);
    CHECK_THROWS_AS(induced_module(r, h, choose_character(r, h), 4096),
                    std::invalid_argument);
    // Character vector of the wrong length.
    Subspace f = Subspace::span({{0, 0, 1}}, 3, 5);
    CHECK_THROWS_AS(induced_module(r, f, Character{{0, 1}}, 4096),
                    std::invalid_argument);
}

TEST_CASE("dimension ceiling") {
    RestrictedAlgebra r = restricted("NA2p5");
    Subspace y = Subspace::span({{0, 1}}, 2, 5);
    CHECK_THROWS_AS(induced_module(r, y, choose_character(r, y), 4),
                    dim_guard_error);
    CHECK_NOTHROW(induced_module(r, y, choose_character(r, y), 5));

    // p^4 = 625 over the truncated Witt algebra, within the ceiling.
    RestrictedAlgebra w = restricted("W15p5");
    Subspace top = Subspace::span({{0, 0, 0, 0, 1}}, 5, 5);
    LieModule big = induced_module(w, top, choose_character(w, top), 4096);
    CHECK(big.dim() == 625);
    CHECK_FALSE(big.action(4).is_zero());
    CHECK_THROWS_AS(induced_module(w, top, choose_character(w, top), 624),
                    dim_guard_error);
}

TEST_CASE("trivial induction from the whole abelian algebra") {
    RestrictedAlgebra r = restricted("Ab2");
    Subspace full = Subspace::full(2, 2);
    Character c = choose_character(r, full);
    CHECK(c.c == Vec{1, 0});
    LieModule m = induced_module(r, full, c, 4096);
    REQUIRE(m.dim() == 1);
    CHECK(m.verify(r.algebra));
    CHECK(m.action(0).at(0, 0) == 1);
    CHECK(m.action(1).at(0, 0) == 0);
}
