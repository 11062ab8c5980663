#include "modlie/meataxe.hpp"

#include <sstream>

#include "modlie/poly.hpp"

namespace modlie {

namespace {

constexpr unsigned kWordBudget = 64;
constexpr unsigned kMaxWordLen = 4;

struct Candidate {
    FpMatrix theta;
    std::string word;
};

// Seeded random element of the action algebra: a small F_p-combination of
// short products of action matrices, plus an optional scalar.
Candidate draw_candidate(const LieModule& m, SplitMix64& rng) {
    const unsigned p = m.modulus();
    const size_t d = m.dim();
    const size_t a = m.alg_dim();
    FpMatrix theta(d, d, p);
    std::ostringstream word;
    unsigned terms = 1 + static_cast<unsigned>(rng.next_below(3));
    bool first = true;
    unsigned c0 = static_cast<unsigned>(rng.next_below(p));
    if (c0) {
        FpMatrix id = FpMatrix::identity(d, p);
        theta = theta.add(id.scaled(c0));
        word << c0;
        first = false;
    }
    for (unsigned t = 0; t < terms; ++t) {
        unsigned len = 1 + static_cast<unsigned>(rng.next_below(kMaxWordLen));
        unsigned coef = 1 + static_cast<unsigned>(rng.next_below(p - 1));
        FpMatrix prod = FpMatrix::identity(d, p);
        std::ostringstream w;
        w << '[';
        for (unsigned s = 0; s < len; ++s) {
            unsigned g = static_cast<unsigned>(rng.next_below(a));
            prod = prod.mul(m.action(g));
            if (s) w << ' ';
            w << g;
        }
        w << ']';
        theta = theta.add(prod.scaled(coef));
        if (!first) word << '+';
        word << coef << '*' << w.str();
        first = false;
    }
    if (first) word << '0';
    return {std::move(theta), word.str()};
}

Subspace transpose_spin(const LieModule& m, const Vec& seed_vec) {
    std::vector<FpMatrix> tr;
    for (size_t i = 0; i < m.alg_dim(); ++i) tr.push_back(m.action(i).transposed());
    LieModule dual = LieModule::from_actions(std::move(tr), m.modulus());
    return spin(dual, {seed_vec});
}

}  // namespace

ChopOutcome chop(const LieModule& m, std::uint64_t seed) {
    const size_t d = m.dim();
    if (d == 0) throw std::invalid_argument("chop: zero module");
    if (d == 1) return {std::nullopt, ChopWitness{seed, 0, "1", 1}};
    SplitMix64 rng(derive_seed(seed, "chop"));
    for (unsigned wi = 0; wi < kWordBudget; ++wi) {
        Candidate cand = draw_candidate(m, rng);
        Poly cp = charpoly(cand.theta);
        SplitMix64 frng(derive_seed(seed, "factor" + std::to_string(wi)));
        auto factors = factor(cp, frng);
        for (const auto& [g, mult] : factors) {
            FpMatrix gtheta = g.eval(cand.theta);
            FpMatrix ker = kernel_basis(gtheta);
            if (ker.rows() == 0) continue;
            ChopWitness w{seed, wi, cand.word, static_cast<unsigned>(g.degree())};
            // Any kernel vector whose spin is proper exhibits a submodule.
            for (size_t r = 0; r < ker.rows(); ++r) {
                Subspace s = spin(m, {ker.row(r)});
                if (s.dim() < d) return {std::move(s), w};
            }
            if (ker.rows() == static_cast<size_t>(g.degree())) {
                // Multiplicity-one factor: the transpose test is decisive.
                FpMatrix kert = kernel_basis(gtheta.transposed());
                Subspace sdual = transpose_spin(m, kert.row(0));
                if (sdual.dim() < d) {
                    // The annihilator of a dual submodule is invariant.
                    Subspace ann = kernel_space(sdual.basis());
                    if (ann.dim() == 0 || ann.dim() >= d)
                        throw std::logic_error("chop: annihilator degenerate");
                    return {std::move(ann), w};
                }
                return {std::nullopt, w};  // irreducible, certified
            }
        }
    }
    throw chop_budget_error("chop: word budget exhausted at dim " + std::to_string(d));
}

namespace {

void factors_rec(const LieModule& m, std::uint64_t seed, const std::string& path,
                 std::vector<FactorEntry>& out) {
    if (m.dim() == 0) return;
    ChopOutcome oc = chop(m, derive_seed(seed, "cf" + path));
    if (oc.irreducible()) {
        out.push_back({m, *oc.witness});
        return;
    }
    factors_rec(sub_module(m, *oc.submodule), seed, path + "s", out);
    factors_rec(quotient_module(m, *oc.submodule).module, seed, path + "q", out);
}

}  // namespace

std::vector<FactorEntry> composition_factors(const LieModule& m, std::uint64_t seed) {
    std::vector<FactorEntry> out;
    factors_rec(m, seed, "", out);
    return out;
}

MinimalSubmodule find_minimal_submodule(const LieModule& m, std::uint64_t seed) {
    if (m.dim() == 0) throw std::invalid_argument("find_minimal_submodule: zero module");
    LieModule cur = m;
    // Rows of embed express the current module's basis in input coordinates.
    FpMatrix embed = FpMatrix::identity(m.dim(), m.modulus());
    unsigned depth = 0;
    while (true) {
        ChopOutcome oc = chop(cur, derive_seed(seed, "min" + std::to_string(depth)));
        if (oc.irreducible())
            return {Subspace::span(embed), std::move(cur), *oc.witness};
        embed = oc.submodule->basis().mul(embed);
        cur = sub_module(cur, *oc.submodule);
        ++depth;
    }
}

std::vector<Subspace> composition_flag(const LieModule& m, std::uint64_t seed) {
    std::vector<Subspace> flag;
    Subspace cur(m.dim(), m.modulus());  // zero
    LieModule quo = m;
    FpMatrix section = FpMatrix::identity(m.dim(), m.modulus());  // quo coords -> ambient
    unsigned step = 0;
    while (cur.dim() < m.dim()) {
        MinimalSubmodule ms =
            find_minimal_submodule(quo, derive_seed(seed, "flag" + std::to_string(step)));
        // Lift the minimal submodule of the quotient back to the ambient.
        std::vector<Vec> gens;
        for (size_t i = 0; i < cur.dim(); ++i) gens.push_back(cur.basis_row(i));
        for (size_t i = 0; i < ms.space.dim(); ++i)
            gens.push_back(section.apply(ms.space.basis_row(i)));
        cur = Subspace::span(gens, m.dim(), m.modulus());
        flag.push_back(cur);
        if (cur.dim() == m.dim()) break;
        QuotientModule q = quotient_module(m, cur);
        quo = std::move(q.module);
        section = std::move(q.section);
        ++step;
    }
    return flag;
}

std::vector<FpMatrix> action_algebra_basis(const LieModule& m) {
    const unsigned p = m.modulus();
    const size_t d = m.dim();
    std::vector<FpMatrix> basis;
    EchelonBuilder span_flat(d * d, p);
    auto try_add = [&](const FpMatrix& mat) {
        if (!span_flat.add(mat.flatten())) return false;
        basis.push_back(mat);
        return true;
    };
    try_add(FpMatrix::identity(d, p));
    for (size_t i = 0; i < m.alg_dim(); ++i) try_add(m.action(i));
    // Close under products: multiply new members by everything on both sides.
    size_t frontier = 0;
    while (frontier < basis.size()) {
        size_t hi = basis.size();
        for (size_t i = frontier; i < hi; ++i)
            for (size_t j = 0; j < hi; ++j) {
                try_add(basis[i].mul(basis[j]));
                try_add(basis[j].mul(basis[i]));
            }
        frontier = hi;
    }
    return basis;
}

std::vector<FpMatrix> action_radical(const LieModule& m, std::uint64_t seed) {
    const unsigned p = m.modulus();
    const size_t d = m.dim();
    std::vector<FpMatrix> alg = action_algebra_basis(m);
    if (d == 0) return {};
    std::vector<Subspace> flag = composition_flag(m, derive_seed(seed, "rad"));
    // a = sum c_j A_j is radical iff a F_i <= F_{i-1} for every flag step;
    // each condition is linear in c.
    std::vector<Vec> rows;  // system rows over the c_j
    Subspace prev(d, p);
    for (const Subspace& fi : flag) {
        for (size_t v = 0; v < fi.dim(); ++v) {
            Vec bv = fi.basis_row(v);
            // Row block: residue of A_j bv modulo prev, one system row per
            // ambient coordinate of the residue.
            std::vector<Vec> imgs;
            for (const FpMatrix& aj : alg) imgs.push_back(prev.reduce(aj.apply(bv)));
            for (size_t coord = 0; coord < d; ++coord) {
                Vec row(alg.size(), 0);
                bool nz = false;
                for (size_t j = 0; j < alg.size(); ++j) {
                    row[j] = imgs[j][coord];
                    nz = nz || row[j];
                }
                if (nz) rows.push_back(std::move(row));
            }
        }
        prev = fi;
    }
    FpMatrix sys = FpMatrix::from_rows(rows, alg.size(), p);
    FpMatrix ker = kernel_basis(sys);
    std::vector<FpMatrix> out;
    for (size_t r = 0; r < ker.rows(); ++r) {
        FpMatrix a(d, d, p);
        for (size_t j = 0; j < alg.size(); ++j)
            if (ker.at(r, j)) a = a.add(alg[j].scaled(ker.at(r, j)));
        out.push_back(std::move(a));
    }
    return out;
}

Subspace socle(const LieModule& m, std::uint64_t seed) {
    const size_t d = m.dim();
    std::vector<FpMatrix> rad = action_radical(m, seed);
    if (rad.empty()) return Subspace::full(d, m.modulus());
    FpMatrix stacked(rad.size() * d, d, m.modulus());
    for (size_t i = 0; i < rad.size(); ++i)
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c) stacked.at(i * d + r, c) = rad[i].at(r, c);
    return kernel_space(stacked);
}

std::vector<SocleSummand> socle_summands(const LieModule& m, std::uint64_t seed) {
    const unsigned p = m.modulus();
    Subspace soc = socle(m, derive_seed(seed, "soc"));
    std::vector<SocleSummand> out;
    if (soc.is_zero()) return out;
    LieModule cur = sub_module(m, soc);
    FpMatrix embed = soc.basis();  // rows: cur coords -> m coords
    unsigned step = 0;
    while (cur.dim() > 0) {
        MinimalSubmodule ms =
            find_minimal_submodule(cur, derive_seed(seed, "ss" + std::to_string(step)));
        out.push_back({Subspace::span(ms.space.basis().mul(embed)), ms.witness});
        if (ms.space.dim() == cur.dim()) break;
        // Module-homomorphism complement: find X with rho(e_i) X = X rho_Q(e_i)
        // and P X = I; its column space is an invariant complement of the
        // summand.  Solvable because cur is semisimple.
        QuotientModule q = quotient_module(cur, ms.space);
        const size_t nd = cur.dim(), qd = q.module.dim();
        std::vector<Vec> rows;
        Vec rhs;
        auto var = [&](size_t r, size_t c) { return r * qd + c; };
        for (size_t i = 0; i < m.alg_dim(); ++i) {
            const FpMatrix& an = cur.action(i);
            const FpMatrix& aq = q.module.action(i);
            const Fp f(p);
            for (size_t r = 0; r < nd; ++r)
                for (size_t c = 0; c < qd; ++c) {
                    Vec row(nd * qd, 0);
                    for (size_t k = 0; k < nd; ++k)
                        row[var(k, c)] = f.add(row[var(k, c)], an.at(r, k));
                    for (size_t k = 0; k < qd; ++k)
                        row[var(r, k)] = f.sub(row[var(r, k)], aq.at(k, c));
                    rows.push_back(std::move(row));
                    rhs.push_back(0);
                }
        }
        for (size_t r = 0; r < qd; ++r)
            for (size_t c = 0; c < qd; ++c) {
                Vec row(nd * qd, 0);
                for (size_t k = 0; k < nd; ++k) row[var(k, c)] = q.projection.at(r, k);
                rows.push_back(std::move(row));
                rhs.push_back(r == c ? 1 : 0);
            }
        auto sol = solve(FpMatrix::from_rows(rows, nd * qd, p), rhs);
        if (!sol) throw std::logic_error("socle_summands: no invariant complement");
        std::vector<Vec> comp_cols;
        for (size_t c = 0; c < qd; ++c) {
            Vec col(nd);
            for (size_t r = 0; r < nd; ++r) col[r] = (*sol)[var(r, c)];
            comp_cols.push_back(std::move(col));
        }
        Subspace comp = Subspace::span(comp_cols, nd, p);
        if (comp.dim() != qd) throw std::logic_error("socle_summands: complement rank drop");
        embed = comp.basis().mul(embed);
        cur = sub_module(cur, comp);
        ++step;
    }
    return out;
}

IdealReport minimal_ideal_report(const LieAlgebra& l, std::uint64_t seed) {
    LieModule adj = adjoint_module(l);
    Subspace soc = socle(adj, derive_seed(seed, "mir-soc"));
    std::vector<SocleSummand> parts = socle_summands(adj, derive_seed(seed, "mir"));
    IdealReport rep{std::move(soc), {}, {}, false};
    for (auto& s : parts) {
        rep.witnesses.push_back(std::move(s.space));
        rep.certificates.push_back(std::move(s.witness));
    }
    rep.unique = (parts.size() == 1);
    return rep;
}

Subspace abelian_socle(const LieAlgebra& l, std::uint64_t seed) {
    LieModule adj = adjoint_module(l);
    std::vector<SocleSummand> parts = socle_summands(adj, derive_seed(seed, "asoc"));
    Subspace acc(l.dim(), l.p());
    for (const auto& s : parts)
        if (l.is_abelian(s.space)) acc = sum(acc, s.space);
    return acc;
}

}  // namespace modlie
