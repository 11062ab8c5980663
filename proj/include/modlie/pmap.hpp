#pragma once

#include <optional>

#include "modlie/meataxe.hpp"

namespace modlie {

// A p-operation given by its images on the standard basis; the value on an
// arbitrary element follows from semilinearity and the power-sum terms.
struct PMap {
    std::vector<Vec> images;
};

struct RestrictedAlgebra {
    LieAlgebra algebra;
    PMap pmap;
};

// The terms s_1(a,b), ..., s_{p-1}(a,b) appearing in
// (a+b)^[p] = a^[p] + b^[p] + sum_i s_i(a,b), extracted from
// (ad(aX+b))^{p-1}(a) = sum_i i*s_i(a,b) X^{i-1} over L[X].
std::vector<Vec> power_sum_terms(const LieAlgebra& l, const Vec& a, const Vec& b);

// x^[p] for arbitrary x, by folding the basis decomposition.
Vec p_power(const RestrictedAlgebra& r, const Vec& x);

// Same fold but over an arbitrary basis (rows) with prescribed images; x
// must lie in the row span.
Vec p_power_in_basis(const LieAlgebra& l, const std::vector<Vec>& basis_rows,
                     const std::vector<Vec>& images, const Vec& x);

// Checks ad(e_i^[p]) = ad(e_i)^p on the basis; by Jacobson's extension
// theorem that makes the basis images a legitimate p-operation.
bool verify_p_map(const RestrictedAlgebra& r);

// Solves ad(y_i) = ad(e_i)^p for each basis element; a solution list exists
// iff the algebra is restrictable.
std::optional<PMap> solve_restriction(const LieAlgebra& l);

// New p-operation vanishing on the abelian ideal a and agreeing with the
// old one on a fixed complement co-basis.
PMap zero_on_abelian_ideal(const RestrictedAlgebra& r, const Subspace& a);

// Adjusts the p-operation to vanish on the sum of abelian minimal ideals.
RestrictedAlgebra zero_on_abelian_socle(const RestrictedAlgebra& r, std::uint64_t seed);

// Least p-ideal containing s: alternate ideal closure and basis p-powers.
Subspace p_ideal_closure(const RestrictedAlgebra& r, const Subspace& s);
bool is_p_ideal(const RestrictedAlgebra& r, const Subspace& s);

struct PIdealReport {
    std::vector<Subspace> witnesses;  // one if unique, else two distinct
    bool unique = false;
};

// Decides whether the algebra has a unique minimal p-ideal, returning
// witnesses.  Abelian algebras reduce to invariant subspaces of the (then
// linear) p-operation; otherwise the minimal ideals are combined with
// p-ideal closures.  The non-abelian branch expects the p-operation to
// vanish on the abelian socle and otherwise falls back to enumerating its
// one-dimensional subspaces, within a fixed budget.
PIdealReport minimal_p_ideals(const RestrictedAlgebra& r, std::uint64_t seed);

struct RestrictedQuotient {
    RestrictedAlgebra algebra;
    FpMatrix projection;
    FpMatrix section;
};

// Quotient by a p-ideal, with the induced p-operation.
RestrictedQuotient quotient_restricted(const RestrictedAlgebra& r, const Subspace& ideal);

}  // namespace modlie
