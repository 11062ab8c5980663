#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modlie/matrix.hpp"

namespace modlie {

// A subspace of F_p^n stored by its canonical RREF basis, so two subspaces
// are equal iff their stored bases agree entry-wise.
class Subspace {
  public:
    // The zero subspace of F_p^ambient.
    Subspace(size_t ambient, unsigned p) : basis_(0, ambient, p) {}

    static Subspace span(const std::vector<Vec>& gens, size_t ambient, unsigned p);
    static Subspace span(const FpMatrix& gens);
    static Subspace full(size_t ambient, unsigned p);

    size_t ambient() const { return basis_.cols(); }
    unsigned modulus() const { return basis_.modulus(); }
    size_t dim() const { return basis_.rows(); }
    const FpMatrix& basis() const { return basis_; }
    Vec basis_row(size_t i) const { return basis_.row(i); }
    bool is_zero() const { return basis_.rows() == 0; }
    bool is_full() const { return basis_.rows() == basis_.cols(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;

    // Coordinates of v in the stored basis, or nullopt if v lies outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    // Residue of v modulo the subspace: subtract the projection onto the
    // pivot columns.  Zero iff v is a member.
    Vec reduce(Vec v) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Canonical text key, usable for ordering/dedup in containers.
    std::string key() const;

    const std::vector<unsigned>& pivots() const { return pivots_; }

  private:
    FpMatrix basis_;
    std::vector<unsigned> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace kernel_space(const FpMatrix& m);

// Incremental row-echelon accumulator for closure computations: add() costs
// one forward reduction instead of re-echelonizing the whole basis.  Rows
// are kept with distinct pivots (not back-reduced); convert with
// to_subspace() for the canonical form.
class EchelonBuilder {
  public:
    EchelonBuilder(size_t ambient, unsigned p) : ambient_(ambient), f_(p) {}

    size_t ambient() const { return ambient_; }
    size_t dim() const { return rows_.size(); }
    bool full() const { return rows_.size() == ambient_; }

    Vec reduce(Vec v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            unsigned c = v[pivots_[i]];
            if (!c) continue;
            for (size_t j = pivots_[i]; j < ambient_; ++j)
                v[j] = f_.sub(v[j], f_.mul(c, rows_[i][j]));
        }
        return v;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    // Returns true iff v was independent (and is now part of the span).
    bool add(Vec v) {
        v = reduce(std::move(v));
        size_t piv = ambient_;
        for (size_t j = 0; j < ambient_; ++j)
            if (v[j]) { piv = j; break; }
        if (piv == ambient_) return false;
        unsigned inv = f_.inv(v[piv]);
        for (size_t j = piv; j < ambient_; ++j) v[j] = f_.mul(inv, v[j]);
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, static_cast<unsigned>(piv));
        return true;
    }

    const std::vector<Vec>& rows() const { return rows_; }
    Subspace to_subspace() const { return Subspace::span(rows_, ambient_, f_.p); }

  private:
    size_t ambient_;
    Fp f_;
    std::vector<Vec> rows_;
    std::vector<unsigned> pivots_;
};

}  // namespace modlie
