#pragma once

#include "modlie/pmap.hpp"

namespace modlie {

// Raised when a construction would exceed the configured module-dimension
// ceiling (the induced module has dimension p^k for a co-basis of size k).
struct dim_guard_error : std::runtime_error {
    explicit dim_guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A linear functional on the algebra, used both to define the reduced
// enveloping relations x^p - x^[p] = c(x)^p and the one-dimensional module
// over the abelian subalgebra.
struct Character {
    Vec c;
};

// The dual functional of the subalgebra's first basis vector: evaluates to
// one there and to zero on the rest of its basis.
Character choose_character(const RestrictedAlgebra& r, const Subspace& a);

// The induced module with basis e_1^{r_1} ... e_k^{r_k} (x) w over the
// co-basis e_1..e_k of a, exponents below p, where a acts on w through the
// character.  Requires a abelian with c vanishing on the p-powers of its
// basis; throws dim_guard_error if p^k exceeds max_dim.
LieModule induced_module(const RestrictedAlgebra& r, const Subspace& a,
                         const Character& c, unsigned max_dim);

}  // namespace modlie
