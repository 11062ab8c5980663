#pragma once

#include <vector>

#include "modlie/lie.hpp"

namespace modlie {

// A module over a Lie algebra with fixed basis: representation matrices
// rho(e_i) acting on column vectors of F_p^m.  The module does not hold a
// reference to its algebra; verify() checks the defining law against one.
class LieModule {
  public:
    LieModule(size_t alg_dim, size_t dim, unsigned p)
        : f_(p), alg_dim_(alg_dim), actions_(alg_dim, FpMatrix(dim, dim, p)), dim_(dim) {}

    static LieModule from_actions(std::vector<FpMatrix> actions, unsigned p);

    size_t alg_dim() const { return alg_dim_; }
    size_t dim() const { return dim_; }
    unsigned modulus() const { return f_.p; }
    const Fp& field() const { return f_; }

    const FpMatrix& action(size_t i) const { return actions_[i]; }
    void set_action(size_t i, FpMatrix m);

    // rho extended linearly to an arbitrary algebra element.
    FpMatrix rho(const Vec& x) const;
    Vec act(const Vec& x, const Vec& v) const { return rho(x).apply(v); }

    // Checks rho([e_i, e_j]) = [rho(e_i), rho(e_j)] against the algebra.
    bool verify(const LieAlgebra& l) const;

    bool operator==(const LieModule& o) const {
        return alg_dim_ == o.alg_dim_ && dim_ == o.dim_ && f_.p == o.f_.p &&
               actions_ == o.actions_;
    }

  private:
    Fp f_;
    size_t alg_dim_;
    std::vector<FpMatrix> actions_;
    size_t dim_;
};

LieModule adjoint_module(const LieAlgebra& l);
LieModule direct_sum(const std::vector<LieModule>& parts);
LieModule trivial_module(size_t alg_dim, size_t dim, unsigned p);

bool is_invariant(const LieModule& m, const Subspace& s);

// Module structure on an invariant subspace, in the coordinates of the
// subspace's canonical basis.
LieModule sub_module(const LieModule& m, const Subspace& s);

struct QuotientModule {
    LieModule module;
    FpMatrix projection;
    FpMatrix section;
};
QuotientModule quotient_module(const LieModule& m, const Subspace& s);

// Pull a module over a quotient algebra back along the projection: the new
// action of ambient basis vector e_i is rho(projection * e_i).
LieModule inflate(const LieModule& m, const FpMatrix& projection);

// Restrict the acting algebra to the span of the given rows (in ambient
// coordinates); row i becomes acting basis element i.
LieModule restrict_module(const LieModule& m, const std::vector<Vec>& rows);

// {v : rho(x) v = 0 for all x} -- the annihilated submodule.
Subspace null_space_module(const LieModule& m);
// {x in L-coords : rho(x) = 0} -- the kernel of the representation.
Subspace module_kernel(const LieModule& m);
bool is_faithful(const LieModule& m);

// Smallest invariant subspace containing the seeds.
Subspace spin(const LieModule& m, const std::vector<Vec>& seeds);

}  // namespace modlie
