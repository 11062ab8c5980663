#include "modlie/pmap.hpp"

#include <algorithm>

#include "modlie/poly.hpp"

namespace modlie {

std::vector<Vec> power_sum_terms(const LieAlgebra& l, const Vec& a, const Vec& b) {
    const unsigned p = l.p();
    const Fp f(p);
    const size_t n = l.dim();
    // Work in L[X] truncated beyond X^{p-1}: slot d holds the coefficient
    // of X^d.  Apply ad(aX + b) exactly p-1 times to a.
    std::vector<Vec> w(p, Vec(n, 0));
    w[0] = a;
    for (unsigned step = 0; step + 1 < p; ++step) {
        std::vector<Vec> nw(p, Vec(n, 0));
        for (unsigned d = 0; d < p; ++d) {
            if (vec_is_zero(w[d])) continue;
            if (d + 1 < p) nw[d + 1] = vec_add(f, nw[d + 1], l.bracket(a, w[d]));
            nw[d] = vec_add(f, nw[d], l.bracket(b, w[d]));
        }
        w = std::move(nw);
    }
    std::vector<Vec> s;
    for (unsigned i = 1; i < p; ++i)
        s.push_back(vec_scale(f, f.inv(i % p), w[i - 1]));
    return s;
}

Vec p_power_in_basis(const LieAlgebra& l, const std::vector<Vec>& basis_rows,
                     const std::vector<Vec>& images, const Vec& x) {
    const unsigned p = l.p();
    const Fp f(p);
    const size_t n = l.dim();
    if (basis_rows.size() != images.size())
        throw std::invalid_argument("p_power_in_basis: images length mismatch");
    // Coordinates against the raw rows (they need not be in echelon form).
    FpMatrix cols(n, basis_rows.size(), p);
    for (size_t j = 0; j < basis_rows.size(); ++j)
        for (size_t i = 0; i < n; ++i) cols.at(i, j) = basis_rows[j][i];
    auto c = solve(cols, x);
    if (!c) throw std::invalid_argument("p_power_in_basis: x outside the span");
    // Fold the nonzero terms: (u + v)^[p] = u^[p] + v^[p] + sum s_i(u, v),
    // with (c b)^[p] = c^p b^[p].
    Vec acc_elt(n, 0);   // partial sum of the terms of x
    Vec acc_pow(n, 0);   // its p-th power
    bool first = true;
    for (size_t k = 0; k < basis_rows.size(); ++k) {
        unsigned coef = (*c)[k];
        if (!coef) continue;
        Vec term = vec_scale(f, coef, basis_rows[k]);
        Vec term_pow = vec_scale(f, f.frob(coef), images[k]);
        if (first) {
            acc_elt = term;
            acc_pow = term_pow;
            first = false;
            continue;
        }
        Vec np = vec_add(f, acc_pow, term_pow);
        for (const Vec& s : power_sum_terms(l, acc_elt, term)) np = vec_add(f, np, s);
        acc_pow = std::move(np);
        acc_elt = vec_add(f, acc_elt, term);
    }
    return acc_pow;
}

Vec p_power(const RestrictedAlgebra& r, const Vec& x) {
    const size_t n = r.algebra.dim();
    std::vector<Vec> basis;
    for (size_t i = 0; i < n; ++i) basis.push_back(unit_vec(n, i));
    return p_power_in_basis(r.algebra, basis, r.pmap.images, x);
}

bool verify_p_map(const RestrictedAlgebra& r) {
    const LieAlgebra& l = r.algebra;
    if (r.pmap.images.size() != l.dim()) return false;
    for (size_t i = 0; i < l.dim(); ++i) {
        if (r.pmap.images[i].size() != l.dim()) return false;
        if (l.ad(r.pmap.images[i]) != l.ad_basis(i).powed(l.p())) return false;
    }
    return true;
}

std::optional<PMap> solve_restriction(const LieAlgebra& l) {
    const size_t n = l.dim();
    const unsigned p = l.p();
    // Columns j of the system express vec(ad(e_j)); solve against
    // vec(ad(e_i)^p) for each i.
    FpMatrix sys(n * n, n, p);
    for (size_t j = 0; j < n; ++j) {
        const Vec flat = l.ad_basis(j).flatten();
        for (size_t r = 0; r < n * n; ++r) sys.at(r, j) = flat[r];
    }
    PMap pm;
    for (size_t i = 0; i < n; ++i) {
        Vec rhs = l.ad_basis(i).powed(p).flatten();
        auto y = solve(sys, rhs);
        if (!y) return std::nullopt;
        pm.images.push_back(std::move(*y));
    }
    return pm;
}

PMap zero_on_abelian_ideal(const RestrictedAlgebra& r, const Subspace& a) {
    const LieAlgebra& l = r.algebra;
    const size_t n = l.dim();
    if (a.ambient() != n) throw std::invalid_argument("zero_on_abelian_ideal: ambient mismatch");
    if (!l.is_ideal(a) || !l.is_abelian(a))
        throw std::invalid_argument("zero_on_abelian_ideal: not an abelian ideal");
    // Adapted basis: the ideal's rows (sent to zero), then the unit co-basis
    // (keeping their old images).  ad(a)^p = 0 for a in an abelian ideal, so
    // zero images are admissible there.
    CosetFrame frame = coset_frame(a);
    std::vector<Vec> rows, images;
    for (size_t i = 0; i < a.dim(); ++i) {
        rows.push_back(a.basis_row(i));
        images.push_back(Vec(n, 0));
    }
    for (unsigned j : frame.cobasis) {
        rows.push_back(unit_vec(n, j));
        images.push_back(p_power(r, unit_vec(n, j)));
    }
    PMap out;
    for (size_t i = 0; i < n; ++i)
        out.images.push_back(p_power_in_basis(l, rows, images, unit_vec(n, i)));
    RestrictedAlgebra check{l, out};
    if (!verify_p_map(check)) throw std::logic_error("zero_on_abelian_ideal: adjustment broke the p-map");
    return out;
}

RestrictedAlgebra zero_on_abelian_socle(const RestrictedAlgebra& r, std::uint64_t seed) {
    Subspace asoc = abelian_socle(r.algebra, derive_seed(seed, "zas"));
    if (asoc.is_zero()) return r;
    return {r.algebra, zero_on_abelian_ideal(r, asoc)};
}

Subspace p_ideal_closure(const RestrictedAlgebra& r, const Subspace& s) {
    const size_t n = r.algebra.dim();
    Subspace cur = s;
    while (true) {
        Subspace next = r.algebra.ideal_closure(cur);
        EchelonBuilder eb(n, r.algebra.p());
        for (size_t i = 0; i < next.dim(); ++i) eb.add(next.basis_row(i));
        for (size_t i = 0; i < next.dim(); ++i) eb.add(p_power(r, next.basis_row(i)));
        if (eb.dim() == cur.dim()) return cur;
        cur = eb.to_subspace();
    }
}

bool is_p_ideal(const RestrictedAlgebra& r, const Subspace& s) {
    if (!r.algebra.is_ideal(s)) return false;
    for (size_t i = 0; i < s.dim(); ++i)
        if (!s.contains(p_power(r, s.basis_row(i)))) return false;
    return true;
}

namespace {

// Minimal invariant subspaces of a single linear map: used for the abelian
// case, where the p-operation is an honest linear endomorphism.
PIdealReport abelian_case(const RestrictedAlgebra& r, std::uint64_t seed) {
    const size_t n = r.algebra.dim();
    const unsigned p = r.algebra.p();
    FpMatrix t(n, n, p);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) t.at(k, i) = r.pmap.images[i][k];
    auto spin_t = [&](const Vec& v) {
        EchelonBuilder eb(n, p);
        Vec w = v;
        while (eb.add(w)) w = t.apply(w);
        return eb.to_subspace();
    };
    SplitMix64 rng(derive_seed(seed, "abelian-pideals"));
    auto factors = factor(charpoly(t), rng);
    PIdealReport rep;
    if (factors.size() >= 2) {
        FpMatrix k0 = kernel_basis(factors[0].first.eval(t));
        FpMatrix k1 = kernel_basis(factors[1].first.eval(t));
        rep.witnesses = {spin_t(k0.row(0)), spin_t(k1.row(0))};
        rep.unique = false;
        return rep;
    }
    const Poly& g = factors[0].first;
    FpMatrix ker = kernel_basis(g.eval(t));
    Subspace first = spin_t(ker.row(0));
    if (ker.rows() == static_cast<size_t>(g.degree())) {
        rep.witnesses = {first};
        rep.unique = true;
        return rep;
    }
    for (size_t rrow = 1; rrow < ker.rows(); ++rrow) {
        if (first.contains(ker.row(rrow))) continue;
        rep.witnesses = {first, spin_t(ker.row(rrow))};
        rep.unique = false;
        return rep;
    }
    throw std::logic_error("minimal_p_ideals: kernel exhausted unexpectedly");
}

bool zero_on(const RestrictedAlgebra& r, const Subspace& s) {
    for (size_t i = 0; i < s.dim(); ++i)
        if (!vec_is_zero(p_power(r, s.basis_row(i)))) return false;
    return true;
}

// Keep the inclusion-minimal, pairwise distinct members.
std::vector<Subspace> inclusion_minimal(std::vector<Subspace> cands) {
    std::vector<Subspace> out;
    std::sort(cands.begin(), cands.end(),
              [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    for (const Subspace& c : cands) {
        bool dominated = false;
        for (const Subspace& o : out)
            if (c.contains(o)) { dominated = true; break; }
        if (!dominated) out.push_back(c);
    }
    return out;
}

}  // namespace

PIdealReport minimal_p_ideals(const RestrictedAlgebra& r, std::uint64_t seed) {
    const LieAlgebra& l = r.algebra;
    const size_t n = l.dim();
    const unsigned p = l.p();
    if (n == 0) throw std::invalid_argument("minimal_p_ideals: zero algebra");
    if (l.is_abelian_algebra()) return abelian_case(r, seed);

    LieModule adj = adjoint_module(l);
    std::vector<SocleSummand> parts = socle_summands(adj, derive_seed(seed, "mpi"));
    std::vector<Subspace> abelian, closures;
    for (const auto& s : parts) {
        if (l.is_abelian(s.space))
            abelian.push_back(s.space);
        else
            closures.push_back(p_ideal_closure(r, s.space));
    }

    Subspace asoc(n, p);
    for (const auto& b : abelian) asoc = sum(asoc, b);

    PIdealReport rep;
    if (!zero_on(r, asoc)) {
        // General fallback: every minimal p-ideal is the closure of a line
        // of the abelian socle or of a non-abelian summand.  Enumerate.
        std::uint64_t count = 1;
        for (size_t i = 0; i < asoc.dim() && count <= 60001ull * p; ++i) count *= p;
        count = (count - 1) / (p - 1);
        if (count > 60000)
            throw std::invalid_argument(
                "minimal_p_ideals: p-operation nonzero on the abelian socle and the "
                "enumeration is too large; adjust with zero_on_abelian_socle first");
        std::vector<Subspace> cands = closures;
        // Normalized vectors: first nonzero coefficient equals 1.
        std::vector<unsigned> digits(asoc.dim(), 0);
        const Fp f(p);
        while (true) {
            size_t pos = 0;
            while (pos < digits.size() && digits[pos] == p - 1) digits[pos++] = 0;
            if (pos == digits.size()) break;
            ++digits[pos];
            size_t lead = digits.size();
            for (size_t i = digits.size(); i-- > 0;)
                if (digits[i]) lead = i;
            if (lead == digits.size() || digits[lead] != 1) continue;
            Vec v(n, 0);
            for (size_t i = 0; i < digits.size(); ++i)
                if (digits[i]) v = vec_add(f, v, vec_scale(f, digits[i], asoc.basis_row(i)));
            cands.push_back(p_ideal_closure(r, Subspace::span({v}, n, p)));
        }
        std::vector<Subspace> mins = inclusion_minimal(std::move(cands));
        rep.unique = (mins.size() == 1);
        rep.witnesses.assign(mins.begin(), mins.begin() + std::min<size_t>(2, mins.size()));
        return rep;
    }

    if (abelian.size() >= 2) {
        rep.witnesses = {abelian[0], abelian[1]};
        rep.unique = false;
        return rep;
    }
    if (abelian.size() == 1) {
        const Subspace& b = abelian[0];
        for (const Subspace& c : closures) {
            if (c.contains(b)) continue;
            // A second minimal p-ideal lives inside c: the smallest closure
            // contained in it.
            Subspace best = c;
            for (const Subspace& c2 : closures)
                if (c.contains(c2) && c2.dim() < best.dim()) best = c2;
            rep.witnesses = {b, best};
            rep.unique = false;
            return rep;
        }
        rep.witnesses = {b};
        rep.unique = true;
        return rep;
    }
    std::vector<Subspace> mins = inclusion_minimal(closures);
    if (mins.empty()) throw std::logic_error("minimal_p_ideals: no candidates");
    rep.unique = (mins.size() == 1);
    rep.witnesses.assign(mins.begin(), mins.begin() + std::min<size_t>(2, mins.size()));
    return rep;
}

RestrictedQuotient quotient_restricted(const RestrictedAlgebra& r, const Subspace& ideal) {
    if (!is_p_ideal(r, ideal))
        throw std::invalid_argument("quotient_restricted: not a p-ideal");
    QuotientData q = quotient(r.algebra, ideal);
    const size_t m = q.algebra.dim();
    PMap pm;
    for (size_t i = 0; i < m; ++i)
        pm.images.push_back(q.projection.apply(p_power(r, q.section.apply(unit_vec(m, i)))));
    RestrictedAlgebra out{std::move(q.algebra), std::move(pm)};
    if (!verify_p_map(out))
        throw std::logic_error("quotient_restricted: induced p-map failed verification");
    return {std::move(out), std::move(q.projection), std::move(q.section)};
}

}  // namespace modlie
