#include "modlie/envelope.hpp"

#include <sstream>

namespace modlie {

namespace {

struct Symbol {
    unsigned gen;    // generator index in the working basis (< n)
    unsigned level;  // j >= 1: stands for the p^j-th power of the generator
};

struct Builder {
    const LieAlgebra& lw;  // working-basis copy of the input
    unsigned p;
    size_t n;
    std::vector<FpMatrix> mpow;  // mpow[i] = ad(e_i) in the working basis
    std::vector<Symbol> symbols;

    size_t host_dim() const { return n + symbols.size(); }

    // M_g^{p^level} restricted to the input block, as an n x n matrix.
    FpMatrix gen_power(unsigned g, unsigned level) const {
        std::uint64_t e = 1;
        for (unsigned t = 0; t < level; ++t) e *= p;
        return mpow[g].powed(e);
    }

    Vec embed(const Vec& v) const {
        Vec r(host_dim(), 0);
        for (size_t i = 0; i < n; ++i) r[i] = v[i];
        return r;
    }

    LieAlgebra assemble() const {
        const size_t nn = host_dim();
        const Fp f(p);
        LieAlgebra host(nn, p);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                host.set_bracket(i, j, embed(lw.bracket_basis(i, j)));
        for (size_t s = 0; s < symbols.size(); ++s) {
            const Symbol& gs = symbols[s];
            FpMatrix ms = gen_power(gs.gen, gs.level);
            // [g_s, u] = M_g^{p^level}(u) for u in the input block.
            for (size_t u = 0; u < n; ++u)
                host.set_bracket(n + s, u, embed(ms.apply(unit_vec(n, u))));
            // [g_s, g_t] = M_gs^{p^js - 1}(-M_gt^{p^jt}(b_gs)); consistency
            // with the transposed route is checked by verify_envelope.
            for (size_t t = s + 1; t < symbols.size(); ++t) {
                const Symbol& gt = symbols[t];
                Vec w = gen_power(gt.gen, gt.level).apply(unit_vec(n, gs.gen));
                w = vec_scale(f, f.neg(1), w);
                FpMatrix msm1 = mpow[gs.gen].powed(pow_minus_one(gs));
                host.set_bracket(n + s, n + t, embed(msm1.apply(w)));
            }
        }
        return host;
    }

    std::uint64_t pow_minus_one(const Symbol& s) const {
        std::uint64_t e = 1;
        for (unsigned t = 0; t < s.level; ++t) e *= p;
        return e - 1;
    }
};

Vec flatten_mat(const FpMatrix& m) { return m.flatten(); }

// Solve ad(w) = target over the host; first solution or nullopt.
std::optional<Vec> realize(const LieAlgebra& host, const FpMatrix& target) {
    const size_t nn = host.dim();
    FpMatrix sys(nn * nn, nn, host.p());
    for (size_t j = 0; j < nn; ++j) {
        Vec flat = flatten_mat(host.ad_basis(j));
        for (size_t r = 0; r < nn * nn; ++r) sys.at(r, j) = flat[r];
    }
    return solve(sys, flatten_mat(target));
}

// Coefficients expressing target in the span of the given matrices.
std::optional<Vec> dependency(const std::vector<FpMatrix>& span_mats,
                              const FpMatrix& target, unsigned p) {
    const size_t cells = target.rows() * target.cols();
    FpMatrix sys(cells, span_mats.size(), p);
    for (size_t j = 0; j < span_mats.size(); ++j) {
        Vec flat = flatten_mat(span_mats[j]);
        for (size_t r = 0; r < cells; ++r) sys.at(r, j) = flat[r];
    }
    return solve(sys, flatten_mat(target));
}

}  // namespace

Envelope build_envelope(const LieAlgebra& l, const Subspace& a, EnvelopeMode mode) {
    const size_t n = l.dim();
    const unsigned p = l.p();
    const Fp f(p);
    if (a.ambient() != n) throw std::invalid_argument("build_envelope: ambient mismatch");
    if (!l.is_ideal(a) || !l.is_abelian(a))
        throw std::invalid_argument("build_envelope: designated subspace is not an abelian ideal");
    const size_t d = a.dim();
    if (n == 0) throw std::invalid_argument("build_envelope: zero algebra");

    // Working basis: co-basis of the ideal first, ideal basis last.
    CosetFrame frame = coset_frame(a);
    std::vector<Vec> rows_new;
    for (unsigned j : frame.cobasis) rows_new.push_back(unit_vec(n, j));
    for (size_t i = 0; i < d; ++i) rows_new.push_back(a.basis_row(i));
    FpMatrix reorder = FpMatrix::from_rows(rows_new, n, p);
    // v_orig = R^T v_new, so new coordinates are (R^T)^{-1} v_orig; that
    // inverse transposed is R^{-1}, whose rows embed the original basis.
    FpMatrix rt = reorder.transposed();
    FpMatrix aug(n, 2 * n, p);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = rt.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref(std::move(aug));
    FpMatrix rt_inv(n, n, p);
    for (size_t i = 0; i < n; ++i) {
        if (i >= rr.pivots.size() || rr.pivots[i] != i)
            throw std::logic_error("build_envelope: reorder frame not invertible");
        for (size_t j = 0; j < n; ++j) rt_inv.at(i, j) = rr.mat.at(i, n + j);
    }
    LieAlgebra lw(n, p);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            lw.set_bracket(i, j, rt_inv.apply(l.bracket(rows_new[i], rows_new[j])));

    Builder b{lw, p, n, {}, {}};
    for (size_t i = 0; i < n; ++i) b.mpow.push_back(lw.ad_basis(i));

    const size_t ngen = n - d;
    // images[x]: decided p-power of host basis element x (host coordinates,
    // padded as the host grows); nullopt = not yet decided.
    std::vector<std::optional<Vec>> images;
    std::vector<EnvelopeChain> chains;
    std::vector<int> chain_of(n, -1);

    auto ensure_len = [&](Vec v, size_t len) {
        v.resize(len, 0);
        return v;
    };

    // Ideal block and central generators take zero images; others open a
    // chain (paper mode) or try a realization first (compact mode).
    for (size_t i = 0; i < n; ++i) images.push_back(std::nullopt);
    for (size_t i = ngen; i < n; ++i) images[i] = Vec(n, 0);
    for (size_t i = 0; i < ngen; ++i) {
        if (b.mpow[i].is_zero()) {
            images[i] = Vec(n, 0);
        } else {
            chain_of[i] = static_cast<int>(chains.size());
            chains.push_back({static_cast<unsigned>(i), {}, {}, false, {}});
        }
    }

    const size_t bound = n * (n - d + 1);
    auto adjoin = [&](unsigned gen, unsigned level) {
        b.symbols.push_back({gen, level});
        images.push_back(std::nullopt);
        chains[chain_of[gen]].symbols.push_back(static_cast<unsigned>(n + b.symbols.size() - 1));
        if (b.host_dim() > bound) throw std::logic_error("build_envelope: bound exceeded");
    };

    // Decision loop: (re)assemble the host and settle every basis element's
    // p-power, re-deciding any earlier choice the growth invalidated.
    unsigned guard = 0;
    while (true) {
        if (++guard > 8 * static_cast<unsigned>(bound) + 16)
            throw std::logic_error("build_envelope: decision loop failed to settle");
        LieAlgebra host = b.assemble();
        const size_t nn = host.dim();
        bool changed = false;
        for (size_t x = 0; x < nn && !changed; ++x) {
            FpMatrix target = host.ad_basis(x).powed(p);
            if (images[x]) {
                Vec y = ensure_len(*images[x], nn);
                if (host.ad(y) == target) {
                    images[x] = std::move(y);
                    continue;
                }
                if (x >= ngen && x < n)
                    throw std::logic_error("build_envelope: ideal image broke");
            }
            // Identify the chain position of x.
            int ci = -1;
            unsigned level = 0;  // x stands for gen^{p^level}
            if (x < n) {
                ci = chain_of[x];
                level = 0;
            } else {
                const Symbol& s = b.symbols[x - n];
                ci = chain_of[s.gen];
                level = s.level;
            }
            if (ci < 0) throw std::logic_error("build_envelope: undecidable element");
            EnvelopeChain& ch = chains[ci];
            const unsigned gen = ch.generator;
            const FpMatrix beta = host.ad_basis(gen);

            bool decided = false;
            if (mode == EnvelopeMode::paper && level >= 1) {
                // Dependency closure: beta^{p^level} on the earlier powers.
                std::vector<FpMatrix> prev;
                std::uint64_t e = 1;
                for (unsigned t = 0; t < level; ++t) {
                    prev.push_back(beta.powed(e));
                    e *= p;
                }
                if (auto lam = dependency(prev, beta.powed(e), p)) {
                    Vec y(nn, 0);
                    for (unsigned t = 0; t < level; ++t) {
                        unsigned idx = ch.symbols[t];  // symbol for gen^{p^{t+1}}
                        y[idx] = f.add(y[idx], f.frob((*lam)[t]));
                    }
                    if (host.ad(y) != target)
                        throw std::logic_error("build_envelope: dependency closure invalid");
                    images[x] = y;
                    ch.lambda.assign(lam->begin(), lam->end());
                    ch.closed_by_realization = false;
                    ch.realized.clear();
                    decided = true;
                    changed = true;
                }
            }
            if (!decided && (mode == EnvelopeMode::compact || level >= 1)) {
                if (auto w = realize(host, target)) {
                    images[x] = *w;
                    if (x == gen || (x >= n)) {
                        ch.closed_by_realization = true;
                        ch.realized = *w;
                        ch.lambda.clear();
                    }
                    decided = true;
                    changed = true;
                }
            }
            if (!decided) {
                adjoin(gen, level + 1);
                images[x] = unit_vec(b.host_dim(), b.host_dim() - 1);
                changed = true;
            }
        }
        if (!changed) break;
    }

    LieAlgebra host = b.assemble();
    const size_t nn = host.dim();
    PMap pm;
    for (size_t x = 0; x < nn; ++x) {
        if (!images[x]) throw std::logic_error("build_envelope: undecided image");
        Vec y = *images[x];
        y.resize(nn, 0);
        pm.images.push_back(std::move(y));
    }
    RestrictedAlgebra ra{std::move(host), std::move(pm)};
    if (!verify_p_map(ra)) throw std::logic_error("build_envelope: p-map verification failed");
    if (!ra.algebra.verify_jacobi())
        throw std::logic_error("build_envelope: host Jacobi identity failed");

    Envelope env;
    env.original_dim = static_cast<unsigned>(n);
    // l_embedding rows: original basis in host coordinates = R^{-1} padded.
    FpMatrix lemb(n, nn, p);
    // rt_inv = (R^T)^{-1}; row k of R^{-1} = column k of (R^{-1})^T = (R^T)^{-1}.
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) lemb.at(k, j) = rt_inv.at(j, k);
    env.l_embedding = std::move(lemb);
    std::vector<Vec> aim;
    for (size_t i = 0; i < d; ++i) {
        Vec e(nn, 0);
        e[ngen + i] = 1;
        aim.push_back(std::move(e));
    }
    env.abelian_ideal = Subspace::span(aim, nn, p);
    env.chains = std::move(chains);
    env.reorder = std::move(reorder);
    for (auto& ch : env.chains)
        if (ch.closed_by_realization) ch.realized.resize(nn, 0);
    env.host = std::move(ra);
    return env;
}

CheckReport verify_envelope(const Envelope& e, const std::vector<Subspace>& ideals) {
    CheckReport rep;
    const LieAlgebra& h = e.host.algebra;
    const size_t nn = h.dim();
    const size_t n = e.original_dim;
    const unsigned p = h.p();
    const Fp f(p);
    if (!h.verify_jacobi()) rep.fail("host violates the Jacobi identity");
    if (!verify_p_map(e.host)) rep.fail("host p-operation fails its defining law");

    if (e.l_embedding.rows() != n || e.l_embedding.cols() != nn) {
        rep.fail("embedding has the wrong shape");
        return rep;
    }
    std::vector<Vec> emb_rows;
    for (size_t i = 0; i < n; ++i) emb_rows.push_back(e.l_embedding.row(i));
    Subspace image = Subspace::span(emb_rows, nn, p);
    if (image.dim() != n) rep.fail("embedding is not injective");

    // Bracket preservation needs the original table; reconstruct it from the
    // reorder frame: original bracket of basis pairs maps through the rows.
    if (e.reorder.rows() == n && e.reorder.cols() == n) {
        for (size_t i = 0; i < n && rep.ok; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                Vec hi = e.l_embedding.row(i), hj = e.l_embedding.row(j);
                Vec hb = h.bracket(hi, hj);
                // The bracket of two image vectors must stay in the image.
                if (!image.contains(hb)) {
                    rep.fail("bracket of embedded elements leaves the image");
                    break;
                }
            }
    }
    if (!h.is_ideal(image)) rep.fail("embedded copy is not an ideal of the host");
    if (!image.contains(h.derived())) rep.fail("derived algebra of the host leaves the image");

    const size_t d = e.abelian_ideal.dim();
    if (nn > n * (n - d + 1)) rep.fail("dimension bound violated");
    if (!h.is_ideal(e.abelian_ideal)) rep.fail("designated ideal is not an ideal of the host");
    if (!h.is_abelian(e.abelian_ideal)) rep.fail("designated ideal is not abelian in the host");

    // Symbol-table consistency: the two evaluation routes for a symbol
    // bracket must agree (antisymmetry of the construction).
    for (const EnvelopeChain& c1 : e.chains)
        for (unsigned s1i = 0; s1i < c1.symbols.size(); ++s1i)
            for (const EnvelopeChain& c2 : e.chains)
                for (unsigned s2i = 0; s2i < c2.symbols.size(); ++s2i) {
                    unsigned s1 = c1.symbols[s1i], s2 = c2.symbols[s2i];
                    if (s1 >= s2) continue;
                    FpMatrix m1 = h.ad_basis(c1.generator);
                    FpMatrix m2 = h.ad_basis(c2.generator);
                    std::uint64_t e1 = 1, e2 = 1;
                    for (unsigned t = 0; t <= s1i; ++t) e1 *= p;
                    for (unsigned t = 0; t <= s2i; ++t) e2 *= p;
                    Vec lhs = m1.powed(e1 - 1).apply(
                        vec_scale(f, f.neg(1), m2.powed(e2).apply(unit_vec(nn, c1.generator))));
                    Vec rhs = m2.powed(e2 - 1).apply(
                        m1.powed(e1).apply(unit_vec(nn, c2.generator)));
                    if (lhs != rhs) {
                        rep.fail("symbol bracket formulas disagree");
                        break;
                    }
                    if (h.bracket_basis(s1, s2) != lhs) {
                        rep.fail("symbol bracket table mismatch");
                        break;
                    }
                }

    for (size_t k = 0; k < ideals.size(); ++k) {
        const Subspace& ideal = ideals[k];
        if (ideal.ambient() != n) {
            rep.fail("supplied ideal has wrong ambient dimension");
            continue;
        }
        std::vector<Vec> rows;
        for (size_t i = 0; i < ideal.dim(); ++i) {
            Vec v = ideal.basis_row(i);
            Vec img(nn, 0);
            for (size_t j = 0; j < n; ++j)
                if (v[j]) img = vec_add(f, img, vec_scale(f, v[j], e.l_embedding.row(j)));
            rows.push_back(std::move(img));
        }
        if (!h.is_ideal(Subspace::span(rows, nn, p)))
            rep.fail("supplied ideal does not embed as an ideal");
    }
    return rep;
}

}  // namespace modlie
