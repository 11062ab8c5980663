#include "modlie/corpus.hpp"

#include <stdexcept>

namespace modlie {

namespace {

CorpusEntry make(std::string name, LieAlgebra l, std::optional<PMap> pm,
                 Subspace ab) {
    CorpusEntry e;
    e.name = std::move(name);
    e.algebra = std::move(l);
    e.pmap = std::move(pm);
    e.designated_abelian = std::move(ab);
    return e;
}

PMap zero_pmap(size_t n) { return PMap{std::vector<Vec>(n, Vec(n, 0))}; }

CorpusEntry abelian_entry(size_t k) {
    LieAlgebra l(k, 2);
    return make("Ab" + std::to_string(k), l, zero_pmap(k), Subspace::full(k, 2));
}

CorpusEntry na2_entry(unsigned p) {
    LieAlgebra l(2, p);
    l.set_bracket(0, 1, Vec{0, 1});  // [x, y] = y
    PMap pm = zero_pmap(2);
    pm.images[0] = Vec{1, 0};  // x -> x
    return make("NA2p" + std::to_string(p), l, pm,
                Subspace::span({Vec{0, 1}}, 2, p));
}

CorpusEntry h3_entry(unsigned p) {
    LieAlgebra l(3, p);
    l.set_bracket(0, 1, Vec{0, 0, 1});  // [x, y] = z
    return make("H3p" + std::to_string(p), l, zero_pmap(3),
                Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3, p));
}

CorpusEntry sl2_entry() {
    const unsigned p = 5;
    LieAlgebra l(3, p);  // basis h, e, f
    l.set_bracket(0, 1, Vec{0, 2, 0});  // [h, e] = 2e
    l.set_bracket(0, 2, Vec{0, 0, 3});  // [h, f] = -2f
    l.set_bracket(1, 2, Vec{1, 0, 0});  // [e, f] = h
    PMap pm = zero_pmap(3);
    pm.images[0] = Vec{1, 0, 0};  // h -> h
    return make("SL2p5", l, pm, Subspace(3, p));
}

CorpusEntry nr3_entry() {
    const unsigned p = 2;
    LieAlgebra l(3, p);  // basis x, a1, a2
    l.set_bracket(0, 1, Vec{0, 0, 1});  // [x, a1] = a2
    l.set_bracket(0, 2, Vec{0, 1, 1});  // [x, a2] = a1 + a2
    return make("NR3p2", l, std::nullopt,
                Subspace::span({Vec{0, 1, 0}, Vec{0, 0, 1}}, 3, p));
}

CorpusEntry w15_entry() {
    const unsigned p = 5;
    Fp f(p);
    LieAlgebra l(5, p);  // basis w_{-1}, w_0, w_1, w_2, w_3
    for (int i = -1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            int s = i + j;
            if (s < -1 || s > 3) continue;
            Vec v(5, 0);
            v[static_cast<size_t>(s + 1)] = f.reduce(j - i);
            l.set_bracket(static_cast<size_t>(i + 1), static_cast<size_t>(j + 1), v);
        }
    PMap pm = zero_pmap(5);
    pm.images[1] = Vec{0, 1, 0, 0, 0};  // w_0 -> w_0
    return make("W15p5", l, pm, Subspace(5, p));
}

FpMatrix invert_square(const FpMatrix& m) {
    const size_t n = m.rows();
    FpMatrix aug(n, 2 * n, m.modulus());
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    RrefResult rr = rref(aug);
    for (size_t r = 0; r < n; ++r)
        if (rr.pivots.size() <= r || rr.pivots[r] != r)
            throw std::logic_error("invert_square: matrix is singular");
    FpMatrix inv(n, n, m.modulus());
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv.at(r, c) = rr.mat.at(r, n + c);
    return inv;
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> out;
    for (size_t k = 1; k <= 3; ++k) out.push_back(abelian_entry(k));
    for (unsigned p : {2u, 3u, 5u}) out.push_back(na2_entry(p));
    for (unsigned p : {2u, 3u}) out.push_back(h3_entry(p));
    out.push_back(sl2_entry());
    out.push_back(nr3_entry());
    out.push_back(w15_entry());
    return out;
}

LieAlgebra random_jacobi_valid(size_t n, unsigned p, std::uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, "rjv"));
    Fp f(p);
    for (unsigned attempt = 0; attempt < 200000; ++attempt) {
        LieAlgebra l(n, p);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                if (rng.next_below(2)) continue;
                Vec v(n, 0);
                size_t nz = 1 + rng.next_below(2);
                for (size_t t = 0; t < nz; ++t)
                    v[rng.next_below(n)] = 1 + static_cast<unsigned>(rng.next_below(p - 1));
                l.set_bracket(i, j, v);
            }
        if (!l.verify_jacobi()) continue;
        if (n == 0) return l;

        FpMatrix q(n, n, p);
        do {
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c)
                    q.at(r, c) = static_cast<unsigned>(rng.next_below(p));
        } while (rank(q) < n);
        FpMatrix qi = invert_square(q);

        LieAlgebra dressed(n, p);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                Vec bi(n, 0), bj(n, 0);
                for (size_t r = 0; r < n; ++r) {
                    bi[r] = q.at(r, i);
                    bj[r] = q.at(r, j);
                }
                dressed.set_bracket(i, j, qi.apply(l.bracket(bi, bj)));
            }
        if (!dressed.verify_jacobi())
            throw std::logic_error("random_jacobi_valid: conjugation broke Jacobi");
        return dressed;
    }
    throw std::runtime_error("random_jacobi_valid: rejection budget exhausted");
}

}  // namespace modlie
