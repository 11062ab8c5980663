#include "modlie/lie.hpp"

namespace modlie {

void LieAlgebra::set_bracket(size_t i, size_t j, const Vec& v) {
    if (i >= dim_ || j >= dim_) throw std::invalid_argument("set_bracket: index out of range");
    if (v.size() != dim_) throw std::invalid_argument("set_bracket: value length mismatch");
    Vec w(dim_);
    for (size_t k = 0; k < dim_; ++k) w[k] = v[k] % f_.p;
    table_[j * dim_ + i] = vec_scale(f_, f_.neg(1), w);
    table_[i * dim_ + j] = std::move(w);
    if (i == j && !vec_is_zero(table_[i * dim_ + j]))
        throw std::invalid_argument("set_bracket: [x,x] must vanish");
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("bracket: length mismatch");
    Vec r(dim_, 0);
    for (size_t i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (!y[j]) continue;
            unsigned c = f_.mul(x[i], y[j]);
            const Vec& t = bracket_basis(i, j);
            for (size_t k = 0; k < dim_; ++k) r[k] = f_.add(r[k], f_.mul(c, t[k]));
        }
    }
    return r;
}

FpMatrix LieAlgebra::ad(const Vec& x) const {
    FpMatrix m(dim_, dim_, f_.p);
    for (size_t j = 0; j < dim_; ++j) {
        Vec col = bracket(x, unit_vec(dim_, j));
        for (size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

FpMatrix LieAlgebra::ad_basis(size_t i) const {
    FpMatrix m(dim_, dim_, f_.p);
    for (size_t j = 0; j < dim_; ++j) {
        const Vec& col = bracket_basis(i, j);
        for (size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

std::optional<std::array<size_t, 3>> LieAlgebra::jacobi_violation() const {
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = i + 1; j < dim_; ++j)
            for (size_t k = j + 1; k < dim_; ++k) {
                Vec s = bracket(unit_vec(dim_, i), bracket_basis(j, k));
                s = vec_add(f_, s, bracket(unit_vec(dim_, j), bracket_basis(k, i)));
                s = vec_add(f_, s, bracket(unit_vec(dim_, k), bracket_basis(i, j)));
                if (!vec_is_zero(s)) return std::array<size_t, 3>{i, j, k};
            }
    return std::nullopt;
}

bool LieAlgebra::verify_jacobi() const { return !jacobi_violation().has_value(); }

Subspace LieAlgebra::derived() const {
    std::vector<Vec> gens;
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = i + 1; j < dim_; ++j) gens.push_back(bracket_basis(i, j));
    return Subspace::span(gens, dim_, f_.p);
}

Subspace LieAlgebra::centre() const { return centralizer(Subspace::full(dim_, f_.p)); }

Subspace LieAlgebra::centralizer(const Subspace& s) const {
    if (s.ambient() != dim_) throw std::invalid_argument("centralizer: ambient mismatch");
    // x centralizes s iff ad(b) x = 0 for each basis vector b of s; stack
    // those maps and take the kernel.
    if (s.dim() == 0) return Subspace::full(dim_, f_.p);
    FpMatrix stacked(s.dim() * dim_, dim_, f_.p);
    for (size_t r = 0; r < s.dim(); ++r) {
        FpMatrix adb = ad(s.basis_row(r));
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j) stacked.at(r * dim_ + i, j) = adb.at(i, j);
    }
    return kernel_space(stacked);
}

Subspace LieAlgebra::bracket_spaces(const Subspace& s, const Subspace& t) const {
    std::vector<Vec> gens;
    for (size_t i = 0; i < s.dim(); ++i)
        for (size_t j = 0; j < t.dim(); ++j)
            gens.push_back(bracket(s.basis_row(i), t.basis_row(j)));
    return Subspace::span(gens, dim_, f_.p);
}

Subspace LieAlgebra::ideal_closure(const Subspace& s) const {
    Subspace cur = s;
    while (true) {
        Subspace next = sum(cur, bracket_spaces(Subspace::full(dim_, f_.p), cur));
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
}

Subspace LieAlgebra::ideal_closure(const Vec& v) const {
    return ideal_closure(Subspace::span({v}, dim_, f_.p));
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
    return s.contains(bracket_spaces(Subspace::full(dim_, f_.p), s));
}

bool LieAlgebra::is_abelian(const Subspace& s) const {
    return bracket_spaces(s, s).is_zero();
}

bool LieAlgebra::is_abelian_algebra() const { return derived().is_zero(); }

CosetFrame coset_frame(const Subspace& s) {
    const size_t n = s.ambient();
    const unsigned p = s.modulus();
    const size_t k = s.dim();
    const Fp f(p);
    // Complete the subspace basis with the lexicographically earliest unit
    // vectors; F has the subspace rows first, then the chosen unit co-basis.
    std::vector<unsigned> cobasis;
    std::vector<Vec> frows;
    for (size_t i = 0; i < k; ++i) frows.push_back(s.basis_row(i));
    Subspace cur = s;
    for (size_t j = 0; j < n && cobasis.size() < n - k; ++j) {
        Vec e = unit_vec(n, j);
        if (cur.contains(e)) continue;
        cobasis.push_back(static_cast<unsigned>(j));
        frows.push_back(e);
        cur = sum(cur, Subspace::span({e}, n, p));
    }
    if (frows.size() != n) throw std::logic_error("coset_frame: completion failed");
    FpMatrix fmat = FpMatrix::from_rows(frows, n, p);
    // Invert F^T so the last n-k rows of (F^T)^{-1} express coordinates in
    // the co-basis: x = sum_i a_i b_i + sum_j c_j e_{cobasis_j} with
    // c = projection * x, and section maps c back to the unit-vector lift.
    FpMatrix ft = fmat.transposed();
    FpMatrix aug(n, 2 * n, p);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = ft.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref(std::move(aug));
    for (size_t i = 0; i < n; ++i)
        if (i >= rr.pivots.size() || rr.pivots[i] != i)
            throw std::logic_error("coset_frame: frame not invertible");
    FpMatrix inv(n, n, p);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
    FpMatrix projection(n - k, n, p);
    for (size_t i = 0; i < n - k; ++i)
        for (size_t j = 0; j < n; ++j) projection.at(i, j) = inv.at(k + i, j);
    FpMatrix section(n, n - k, p);
    for (size_t i = 0; i < n - k; ++i) section.at(cobasis[i], i) = 1;
    return {std::move(projection), std::move(section), std::move(cobasis)};
}

QuotientData quotient(const LieAlgebra& l, const Subspace& ideal) {
    if (ideal.ambient() != l.dim()) throw std::invalid_argument("quotient: ambient mismatch");
    if (!l.is_ideal(ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
    CosetFrame frame = coset_frame(ideal);
    const size_t m = l.dim() - ideal.dim();
    LieAlgebra q(m, l.p());
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            Vec br = l.bracket(frame.section.apply(unit_vec(m, i)),
                               frame.section.apply(unit_vec(m, j)));
            q.set_bracket(i, j, frame.projection.apply(br));
        }
    if (!q.verify_jacobi()) throw std::logic_error("quotient: Jacobi identity lost");
    return {std::move(q), std::move(frame.projection), std::move(frame.section),
            std::move(frame.cobasis)};
}

}  // namespace modlie
