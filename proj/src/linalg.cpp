#include "modlie/subspace.hpp"

#include <sstream>

namespace modlie {

RrefResult rref(FpMatrix m) {
    const Fp f = m.field();
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<unsigned> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (m.at(i, c)) { sel = i; break; }
        if (sel == rows) continue;
        if (sel != r)
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        unsigned inv = f.inv(m.at(r, c));
        for (size_t j = 0; j < cols; ++j) m.at(r, j) = f.mul(inv, m.at(r, j));
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            unsigned factor = m.at(i, c);
            if (!factor) continue;
            for (size_t j = 0; j < cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(static_cast<unsigned>(c));
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::optional<Vec> solve(const FpMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    const unsigned p = m.modulus();
    FpMatrix aug(m.rows(), m.cols() + 1, p);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i] % p;
    }
    RrefResult rr = rref(std::move(aug));
    Vec x(m.cols(), 0);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == m.cols()) return std::nullopt;  // pivot in the rhs column
        x[rr.pivots[i]] = rr.mat.at(i, m.cols());
    }
    return x;
}

FpMatrix kernel_basis(const FpMatrix& m) {
    const unsigned p = m.modulus();
    const Fp f = m.field();
    const size_t n = m.cols();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (unsigned c : rr.pivots) is_pivot[c] = true;
    std::vector<Vec> rows;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec v(n, 0);
        v[c] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = f.neg(rr.mat.at(i, c));
        rows.push_back(std::move(v));
    }
    // Free-column construction already yields RREF rows up to ordering; run
    // rref anyway so the result is canonical regardless.
    return rref(FpMatrix::from_rows(rows, n, p)).mat;
}

unsigned rank(const FpMatrix& m) {
    return static_cast<unsigned>(rref(m).pivots.size());
}

Subspace Subspace::span(const std::vector<Vec>& gens, size_t ambient, unsigned p) {
    return span(FpMatrix::from_rows(gens, ambient, p));
}

Subspace Subspace::span(const FpMatrix& gens) {
    RrefResult rr = rref(gens);
    Subspace s(gens.cols(), gens.modulus());
    size_t k = rr.pivots.size();
    FpMatrix b(k, gens.cols(), gens.modulus());
    for (size_t i = 0; i < k; ++i) b.set_row(i, rr.mat.row(i));
    s.basis_ = std::move(b);
    s.pivots_ = std::move(rr.pivots);
    return s;
}

Subspace Subspace::full(size_t ambient, unsigned p) {
    return span(FpMatrix::identity(ambient, p));
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient() != ambient() || o.modulus() != modulus())
        throw std::invalid_argument("Subspace::contains: ambient mismatch");
    for (size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_row(i))) return false;
    return true;
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient()) throw std::invalid_argument("Subspace::reduce: length mismatch");
    const Fp f = basis_.field();
    for (size_t i = 0; i < dim(); ++i) {
        unsigned c = v[pivots_[i]];
        if (!c) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, basis_.at(i, j)));
    }
    return v;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient())
        throw std::invalid_argument("Subspace::coordinates: length mismatch");
    const Fp f = basis_.field();
    Vec coords(dim(), 0);
    Vec w = v;
    for (size_t i = 0; i < dim(); ++i) {
        unsigned c = w[pivots_[i]];
        coords[i] = c;
        if (!c) continue;
        for (size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
    }
    if (!vec_is_zero(w)) return std::nullopt;
    return coords;
}

std::string Subspace::key() const {
    std::ostringstream os;
    os << ambient() << '/' << modulus() << ':';
    for (unsigned x : basis_.flatten()) os << x << ',';
    return os.str();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.modulus() != b.modulus())
        throw std::invalid_argument("sum: ambient mismatch");
    std::vector<Vec> rows;
    for (size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_row(i));
    for (size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_row(i));
    return Subspace::span(rows, a.ambient(), a.modulus());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || a.modulus() != b.modulus())
        throw std::invalid_argument("intersect: ambient mismatch");
    const unsigned p = a.modulus();
    const size_t n = a.ambient(), da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace(n, p);
    // Columns of the stacked matrix are coefficient vectors (x, y) with
    // x*Ba - y*Bb = 0; the x-part of each kernel element spans a member of
    // the intersection.
    FpMatrix stacked(n, da + db, p);
    const Fp f(p);
    for (size_t j = 0; j < da; ++j)
        for (size_t i = 0; i < n; ++i) stacked.at(i, j) = a.basis().at(j, i);
    for (size_t j = 0; j < db; ++j)
        for (size_t i = 0; i < n; ++i) stacked.at(i, da + j) = f.neg(b.basis().at(j, i));
    FpMatrix ker = kernel_basis(stacked);
    std::vector<Vec> rows;
    for (size_t r = 0; r < ker.rows(); ++r) {
        Vec v(n, 0);
        for (size_t j = 0; j < da; ++j) {
            unsigned c = ker.at(r, j);
            if (!c) continue;
            for (size_t i = 0; i < n; ++i) v[i] = f.add(v[i], f.mul(c, a.basis().at(j, i)));
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(rows, n, p);
}

Subspace kernel_space(const FpMatrix& m) { return Subspace::span(kernel_basis(m)); }

}  // namespace modlie
