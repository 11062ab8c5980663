#include <cstdio>

#include "doctest.h"
#include "modlie/corpus.hpp"
#include "modlie/io.hpp"

using namespace modlie;

namespace {

std::string err_of(const std::string& text) {
    try {
        parse_lie(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("algebra text round trip") {
    std::string text =
        "p 2\n"
        "dim 2\n"
        "bracket 1 2 : 0 1\n"
        "pmap 1 : 1 0\n"
        "pmap 2 : 0 0\n";
    LieFileData d = parse_lie(text);
    CHECK(d.algebra.p() == 2);
    CHECK(d.algebra.dim() == 2);
    CHECK(d.algebra.bracket_basis(0, 1) == Vec{0, 1});
    REQUIRE(d.pmap.has_value());
    CHECK(d.pmap->images[0] == Vec{1, 0});
    CHECK(d.pmap->images[1] == Vec{0, 0});
    CHECK(emit_lie(d.algebra, d.pmap) == text);
}

TEST_CASE("comments, blank lines and scalar reduction") {
    std::string text =
        "# af+b algebra\n"
        "p 3\n"
        "\n"
        "dim 2   # two basis elements\n"
        "bracket 1 2 : 0 4\n";  // 4 reduces to 1 mod 3
    LieFileData d = parse_lie(text);
    CHECK(d.algebra.bracket_basis(0, 1) == Vec{0, 1});
    CHECK_FALSE(d.pmap.has_value());
    CHECK(emit_lie(d.algebra) ==
          "p 3\ndim 2\nbracket 1 2 : 0 1\n");
}

TEST_CASE("negative scalars reduce into the field") {
    LieFileData d = parse_lie("p 5\ndim 2\nbracket 1 2 : 0 -1\n");
    CHECK(d.algebra.bracket_basis(0, 1) == Vec{0, 4});
}

TEST_CASE("every corpus entry round-trips exactly") {
    for (const CorpusEntry& e : builtin_corpus()) {
        std::optional<PMap> pm = e.pmap;
        std::string text = emit_lie(e.algebra, pm);
        LieFileData d = parse_lie(text);
        CHECK(d.algebra == e.algebra);
        CHECK(d.pmap.has_value() == pm.has_value());
        if (pm) CHECK(d.pmap->images == pm->images);
        CHECK(emit_lie(d.algebra, d.pmap) == text);
    }
}

TEST_CASE("header errors carry their line number") {
    CHECK(err_of("p 4\ndim 1\n") == "line 1: modulus 4 is not prime");
    CHECK(err_of("p 65537\ndim 1\n") == "line 1: modulus out of range");
    CHECK(err_of("dim 2\np 3\n") == "line 1: expected 'p <prime>'");
    CHECK(err_of("p 3\n") == "input: expected 'dim <n>'");
    CHECK(err_of("") == "input: expected 'p <prime>'");
    CHECK(err_of("p x\ndim 1\n") == "line 1: expected a prime, got 'x'");
    CHECK(err_of("# only a comment\np 3\ndim 9999\n") ==
          "line 3: dimension out of range");
}

TEST_CASE("bracket line errors") {
    std::string head = "p 2\ndim 2\n";
    CHECK(err_of(head + "bracket 2 1 : 0 1\n") ==
          "line 3: bracket indices must satisfy i < j");
    CHECK(err_of(head + "bracket 1 1 : 0 1\n") ==
          "line 3: bracket indices must satisfy i < j");
    CHECK(err_of(head + "bracket 1 3 : 0 1\n") == "line 3: basis index out of range");
    CHECK(err_of(head + "bracket 1 2 : 1\n") == "line 3: expected 2 scalars, got 1");
    CHECK(err_of(head + "bracket 1 2 : 0 1\nbracket 1 2 : 0 0\n") ==
          "line 4: duplicate bracket for this pair");
    CHECK(err_of(head + "bracket 1 2\n") == "line 3: expected 'bracket i j : c1 ... cn'");
    CHECK(err_of(head + "frobnicate 1\n") == "line 3: unknown keyword 'frobnicate'");
}

TEST_CASE("structural validation happens after parsing") {
    // [e1,e2] = e1, [e2,e3] = e2 breaks Jacobi on the only triple.
    std::string bad =
        "p 2\n"
        "dim 3\n"
        "bracket 1 2 : 1 0 0\n"
        "bracket 2 3 : 0 1 0\n";
    CHECK(err_of(bad) == "input: Jacobi identity fails at basis triple (1, 2, 3)");

    // Valid brackets but e2^[2] = e2 contradicts ad(e2)^2 = 0.
    std::string badp =
        "p 2\n"
        "dim 2\n"
        "bracket 1 2 : 0 1\n"
        "pmap 1 : 1 0\n"
        "pmap 2 : 0 1\n";
    CHECK(err_of(badp) == "input: p-map fails its defining law at basis element 2");
}

TEST_CASE("missing pmap lines default to zero images") {
    std::string text =
        "p 2\n"
        "dim 2\n"
        "bracket 1 2 : 0 1\n"
        "pmap 1 : 1 0\n";  // image of e2 left implicit
    LieFileData d = parse_lie(text);
    REQUIRE(d.pmap.has_value());
    CHECK(d.pmap->images[1] == Vec{0, 0});
    CHECK(err_of(text + "pmap 1 : 1 0\n") == "line 5: duplicate pmap line");
}

TEST_CASE("module text round trip") {
    LieModule m(2, 2, 2);
    FpMatrix a(2, 2, 2), b(2, 2, 2);
    a.at(1, 0) = 1; a.at(1, 1) = 1;
    b.at(0, 0) = 1; b.at(0, 1) = 1; b.at(1, 1) = 1;
    m.set_action(0, a);
    m.set_action(1, b);
    std::string text = emit_mod(m);
    CHECK(text ==
          "p 2\n"
          "algdim 2\n"
          "moddim 2\n"
          "action 1 :\n"
          "0 0\n"
          "1 1\n"
          "action 2 :\n"
          "1 1\n"
          "0 1\n");
    CHECK(parse_mod(text) == m);
}

TEST_CASE("module parse errors") {
    auto merr = [](const std::string& text) -> std::string {
        try {
            parse_mod(text);
        } catch (const ParseError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(merr("p 2\nalgdim 1\n") == "input: expected 'moddim <value>'");
    CHECK(merr("p 2\nalgdim 1\nmoddim 1\naction 2 :\n0\n") ==
          "line 4: action blocks must appear in order");
    CHECK(merr("p 2\nalgdim 1\nmoddim 2\naction 1 :\n0 0\n") ==
          "input: missing matrix row 2 of action 1");
    CHECK(merr("p 2\nalgdim 1\nmoddim 1\naction 1 :\n0\nextra\n") ==
          "line 6: unexpected trailing content");
    CHECK(merr("p 9\nalgdim 1\nmoddim 1\naction 1 :\n0\n") ==
          "line 1: modulus 9 is not prime");
}

TEST_CASE("zero-dimensional inputs are legal") {
    LieFileData d = parse_lie("p 2\ndim 0\n");
    CHECK(d.algebra.dim() == 0);
    CHECK(emit_lie(d.algebra) == "p 2\ndim 0\n");
    LieModule m = parse_mod("p 2\nalgdim 0\nmoddim 0\n");
    CHECK(m.alg_dim() == 0);
    CHECK(m.dim() == 0);
}

TEST_CASE("file round trip") {
    std::string path = "roundtrip_tmp.lie";
    CorpusEntry h3 = [] {
        for (auto& e : builtin_corpus())
            if (e.name == "H3p3") return e;
        throw std::runtime_error("missing corpus entry");
    }();
    write_text_file(path, emit_lie(h3.algebra, h3.pmap));
    LieFileData d = read_lie_file(path);
    CHECK(d.algebra == h3.algebra);
    REQUIRE(d.pmap.has_value());
    CHECK(d.pmap->images == h3.pmap->images);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_lie_file(path), std::runtime_error);
}
