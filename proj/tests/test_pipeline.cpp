#include <algorithm>
#include <limits>

#include "doctest.h"
#include "modlie/corpus.hpp"
#include "modlie/pipeline.hpp"

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

std::vector<std::size_t> sorted_dims(const FaithfulResult& r) {
    std::vector<std::size_t> d = r.certificate.summand_dims;
    std::sort(d.begin(), d.end());
    return d;
}

void expect_good(const LieAlgebra& l, const FaithfulResult& r, BoundKind kind) {
    CHECK(r.certificate.ok);
    CHECK(r.module.dim() == r.certificate.module_dim);
    CHECK(r.certificate.module_dim <= r.certificate.bound);
    Certificate v = verify_certificate(l, r, kind, 99);
    CHECK(v.ok);
}

}  // namespace

TEST_CASE("saturating powers") {
    CHECK(pow_saturating(2, 0) == 1);
    CHECK(pow_saturating(0, 5) == 0);
    CHECK(pow_saturating(1, 1000) == 1);
    CHECK(pow_saturating(2, 10) == 1024);
    CHECK(pow_saturating(2, 63) == (std::uint64_t{1} << 63));
    CHECK(pow_saturating(2, 64) == std::numeric_limits<std::uint64_t>::max());
    CHECK(pow_saturating(3, 41) == std::numeric_limits<std::uint64_t>::max());
    CHECK(pow_saturating(5, 24) == 59604644775390625ull);
}

TEST_CASE("input hash is stable and 16 hex digits") {
    RestrictedAlgebra r1 = restricted("NA2p2");
    RestrictedAlgebra r2 = restricted("NA2p2");
    std::string h = input_hash(r1);
    CHECK(h.size() == 16);
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(h == input_hash(r2));
    CHECK(h != input_hash(r1.algebra));  // the p-map is part of the input
    CHECK(input_hash(r1.algebra) != input_hash(by_name("H3p2").algebra));
}

TEST_CASE("restricted construction hits the bound on the 2-dim nonabelian algebra") {
    for (const char* name : {"NA2p2", "NA2p3", "NA2p5"}) {
        RestrictedAlgebra r = restricted(name);
        FaithfulResult res = faithful_cr_restricted(r);
        CHECK(res.module.dim() == r.algebra.p());
        CHECK(res.certificate.bound == r.algebra.p());
        CHECK(res.certificate.kind == BoundKind::restricted);
        CHECK(sorted_dims(res) == std::vector<std::size_t>{r.algebra.p()});
        expect_good(r.algebra, res, BoundKind::restricted);
    }
}

TEST_CASE("restricted construction hits the bound on the Heisenberg algebra") {
    {
        RestrictedAlgebra r = restricted("H3p2");
        FaithfulResult res = faithful_cr_restricted(r);
        CHECK(res.module.dim() == 4);
        CHECK(res.certificate.bound == 4);
        CHECK(sorted_dims(res) == std::vector<std::size_t>{2, 2});
        expect_good(r.algebra, res, BoundKind::restricted);
    }
    {
        RestrictedAlgebra r = restricted("H3p3");
        FaithfulResult res = faithful_cr_restricted(r);
        CHECK(res.module.dim() == 9);
        CHECK(res.certificate.bound == 9);
        CHECK(sorted_dims(res) == std::vector<std::size_t>{3, 3, 3});
        expect_good(r.algebra, res, BoundKind::restricted);
    }
}

TEST_CASE("restricted construction uses the adjoint module on simple algebras") {
    {
        RestrictedAlgebra r = restricted("SL2p5");
        FaithfulResult res = faithful_cr_restricted(r);
        CHECK(res.module.dim() == 3);
        CHECK(res.certificate.bound == 25);
        CHECK(sorted_dims(res) == std::vector<std::size_t>{3});
        expect_good(r.algebra, res, BoundKind::restricted);
    }
    {
        RestrictedAlgebra r = restricted("W15p5");
        FaithfulResult res = faithful_cr_restricted(r);
        CHECK(res.module.dim() == 5);
        CHECK(res.certificate.bound == 625);
        CHECK(sorted_dims(res) == std::vector<std::size_t>{5});
        expect_good(r.algebra, res, BoundKind::restricted);
    }
}

TEST_CASE("restricted construction splits abelian algebras into lines") {
    {
        RestrictedAlgebra r = restricted("Ab1");
        FaithfulResult res = faithful_cr_restricted(r);
        CHECK(res.module.dim() == 1);
        CHECK(res.certificate.bound == 1);
        expect_good(r.algebra, res, BoundKind::restricted);
    }
    {
        RestrictedAlgebra r = restricted("Ab2");
        FaithfulResult res = faithful_cr_restricted(r);
        CHECK(res.module.dim() == 2);
        CHECK(sorted_dims(res) == std::vector<std::size_t>{1, 1});
        expect_good(r.algebra, res, BoundKind::restricted);
    }
    {
        RestrictedAlgebra r = restricted("Ab3");
        FaithfulResult res = faithful_cr_restricted(r);
        CHECK(res.module.dim() == 4);
        CHECK(res.certificate.bound == 4);
        CHECK(sorted_dims(res) == std::vector<std::size_t>{1, 1, 1, 1});
        expect_good(r.algebra, res, BoundKind::restricted);
    }
}

TEST_CASE("general construction without a given p-map") {
    for (const char* name : {"NA2p2", "NA2p3", "NA2p5"}) {
        CorpusEntry e = by_name(name);
        FaithfulResult res = faithful_cr(e.algebra);
        CHECK(res.module.dim() == e.algebra.p());
        CHECK(res.certificate.kind == BoundKind::general);
        CHECK(res.certificate.bound ==
              pow_saturating(e.algebra.p(), 3));  // p^(n^2-1), n = 2
        expect_good(e.algebra, res, BoundKind::general);
    }
    {
        CorpusEntry e = by_name("H3p2");
        FaithfulResult res = faithful_cr(e.algebra);
        CHECK(res.module.dim() == 2);
        CHECK(res.certificate.bound == 256);
        expect_good(e.algebra, res, BoundKind::general);
    }
    {
        CorpusEntry e = by_name("H3p3");
        FaithfulResult res = faithful_cr(e.algebra);
        CHECK(res.module.dim() == 3);
        expect_good(e.algebra, res, BoundKind::general);
    }
    {
        CorpusEntry e = by_name("SL2p5");
        FaithfulResult res = faithful_cr(e.algebra);
        CHECK(res.module.dim() == 3);
        CHECK(res.certificate.bound == pow_saturating(5, 8));
        expect_good(e.algebra, res, BoundKind::general);
    }
    {
        CorpusEntry e = by_name("W15p5");
        FaithfulResult res = faithful_cr(e.algebra);
        CHECK(res.module.dim() == 5);
        CHECK(res.certificate.bound == pow_saturating(5, 24));
        expect_good(e.algebra, res, BoundKind::general);
    }
}

TEST_CASE("general construction passes through the envelope when needed") {
    CorpusEntry e = by_name("NR3p2");
    FaithfulResult res = faithful_cr(e.algebra);
    CHECK(res.module.dim() == 4);
    CHECK(res.certificate.bound == 256);
    CHECK(sorted_dims(res) == std::vector<std::size_t>{4});
    expect_good(e.algebra, res, BoundKind::general);

    PipelineOptions opt;
    opt.envelope_mode = EnvelopeMode::compact;
    FaithfulResult res2 = faithful_cr(e.algebra, opt);
    CHECK(res2.module.dim() == 4);
    expect_good(e.algebra, res2, BoundKind::general);
}

TEST_CASE("empty algebra gets an empty module") {
    LieAlgebra l(0, 3);
    FaithfulResult res = faithful_cr(l);
    CHECK(res.module.dim() == 0);
    CHECK(res.certificate.bound == 1);
    CHECK(res.certificate.ok);
    CHECK(res.summands.empty());
    Certificate v = verify_certificate(l, res, BoundKind::general, 5);
    CHECK(v.ok);
}

TEST_CASE("random algebras are handled end to end") {
    for (std::uint64_t s : {11ull, 12ull}) {
        LieAlgebra l = random_jacobi_valid(3, 2, s);
        FaithfulResult res = faithful_cr(l);
        CHECK(res.certificate.ok);
        CHECK(res.certificate.module_dim <= pow_saturating(2, 8));
        Certificate v = verify_certificate(l, res, BoundKind::general, s + 1);
        CHECK(v.ok);
    }
}

TEST_CASE("certificates are byte-stable for a fixed seed") {
    RestrictedAlgebra r = restricted("H3p2");
    std::string a = faithful_cr_restricted(r).certificate.serialize();
    std::string b = faithful_cr_restricted(r).certificate.serialize();
    CHECK(a == b);
    CHECK(a.find("kind: restricted") != std::string::npos);
    CHECK(a.find("ok: yes") != std::string::npos);
    CHECK(a.find(input_hash(r)) != std::string::npos);

    CorpusEntry e = by_name("NR3p2");
    CHECK(faithful_cr(e.algebra).certificate.serialize() ==
          faithful_cr(e.algebra).certificate.serialize());

    PipelineOptions o2;
    o2.seed = 2;
    FaithfulResult other = faithful_cr_restricted(r, o2);
    CHECK(other.certificate.ok);
    CHECK(other.certificate.seed == 2);
}

TEST_CASE("verification rejects tampered results without throwing") {
    RestrictedAlgebra r = restricted("NA2p2");
    FaithfulResult res = faithful_cr_restricted(r);

    FaithfulResult broken = res;
    broken.module.set_action(0, FpMatrix(2, 2, 2));  // kill the x-action
    Certificate v1 = verify_certificate(r.algebra, broken, BoundKind::restricted, 7);
    CHECK_FALSE(v1.ok);

    FaithfulResult padded = res;
    padded.summands.push_back(padded.summands[0]);  // sum no longer matches
    Certificate v2 = verify_certificate(r.algebra, padded, BoundKind::restricted, 7);
    CHECK_FALSE(v2.ok);

    // Wrong algebra: the shape check fails before anything heavier runs.
    Certificate v3 =
        verify_certificate(by_name("H3p2").algebra, res, BoundKind::restricted, 7);
    CHECK_FALSE(v3.ok);
}

TEST_CASE("invalid inputs are rejected up front") {
    RestrictedAlgebra bad = restricted("NA2p2");
    bad.pmap.images[1] = {0, 1};  // y^[2] = y breaks the defining law
    CHECK_THROWS_AS(faithful_cr_restricted(bad), std::invalid_argument);

    LieAlgebra nj(3, 2);  // [x,y] = x, [y,z] = y violates Jacobi
    nj.set_bracket(0, 1, {1, 0, 0});
    nj.set_bracket(1, 2, {0, 1, 0});
    REQUIRE_FALSE(nj.verify_jacobi());
    CHECK_THROWS_AS(faithful_cr(nj), std::invalid_argument);
}
