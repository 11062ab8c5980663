#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "modlie/subspace.hpp"

namespace modlie {

// A finite-dimensional Lie algebra over F_p given by structure constants on
// a fixed basis e_1..e_n: bracket_basis(i, j) is the coordinate vector of
// [e_i, e_j].  The full antisymmetric table is stored.
class LieAlgebra {
  public:
    LieAlgebra(size_t dim, unsigned p)
        : f_(p), dim_(dim), table_(dim * dim, Vec(dim, 0)) {}

    unsigned p() const { return f_.p; }
    const Fp& field() const { return f_; }
    size_t dim() const { return dim_; }

    // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
    void set_bracket(size_t i, size_t j, const Vec& v);
    const Vec& bracket_basis(size_t i, size_t j) const { return table_[i * dim_ + j]; }

    Vec bracket(const Vec& x, const Vec& y) const;
    FpMatrix ad(const Vec& x) const;    // columns: ad(x)(e_j) = [x, e_j]
    FpMatrix ad_basis(size_t i) const;

    bool verify_jacobi() const;
    // First violating triple (i, j, k), if any, for diagnostics.
    std::optional<std::array<size_t, 3>> jacobi_violation() const;

    Subspace derived() const;                 // [L, L]
    Subspace centre() const;
    Subspace centralizer(const Subspace& s) const;
    Subspace bracket_spaces(const Subspace& s, const Subspace& t) const;
    Subspace ideal_closure(const Subspace& s) const;
    Subspace ideal_closure(const Vec& v) const;
    bool is_ideal(const Subspace& s) const;
    bool is_abelian(const Subspace& s) const;
    bool is_abelian_algebra() const;

    bool operator==(const LieAlgebra& o) const {
        return dim_ == o.dim_ && f_.p == o.f_.p && table_ == o.table_;
    }

  private:
    Fp f_;
    size_t dim_;
    std::vector<Vec> table_;
};

struct QuotientData {
    LieAlgebra algebra;
    FpMatrix projection;            // (n-k) x n
    FpMatrix section;               // n x (n-k), projection * section = I
    std::vector<unsigned> cobasis;  // ambient coordinates of the chosen lift
};

// Quotient by an ideal.  The co-basis completing the ideal is the
// lexicographically earliest set of unit vectors, so results are canonical.
QuotientData quotient(const LieAlgebra& l, const Subspace& ideal);

// Projection/section/cobasis for ambient = F_p^n modulo a subspace, without
// any algebra structure.  Shared by quotient constructions.
struct CosetFrame {
    FpMatrix projection;
    FpMatrix section;
    std::vector<unsigned> cobasis;
};
CosetFrame coset_frame(const Subspace& s);

}  // namespace modlie
