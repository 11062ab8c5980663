#include "modlie/induced.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace modlie {

namespace {

// Rewrites products against the monomial basis e_1^{r_1}..e_k^{r_k} (x) w
// using
//   x e_i       = e_i x + [x, e_i],
//   e_i^p       = e_i^[p] + c(e_i)^p . 1,
//   a (1 (x) w) = c(a) (1 (x) w)   for a in the subalgebra,
// memoized per (element, monomial).  Every recursive call either lowers the
// total degree or moves a factor strictly closer to its sorted position, so
// the rewriting terminates; the depth counter is a pure safety net.
class Straightener {
  public:
    Straightener(const RestrictedAlgebra& r, const Subspace& a, const Character& c,
                 size_t dim)
        : r_(r), f_(r.algebra.p()), n_(r.algebra.dim()), dim_(dim),
          proj_(0, 0, r.algebra.p()), chi_(c.c) {
        CosetFrame frame = coset_frame(a);
        cob_ = frame.cobasis;
        proj_ = frame.projection;
        k_ = cob_.size();
        weight_.assign(k_, 1);
        for (size_t j = k_; j-- > 1;) weight_[j - 1] = weight_[j] * f_.p;
        gen_ppow_.reserve(k_);
        for (size_t g = 0; g < k_; ++g) gen_ppow_.push_back(r_.pmap.images[cob_[g]]);
        max_depth_ = (static_cast<size_t>(f_.p) * k_ + n_ + 8) * (k_ + 4);
    }

    LieModule build() {
        LieModule mod(n_, dim_, f_.p);
        for (size_t b = 0; b < n_; ++b) {
            FpMatrix mat(dim_, dim_, f_.p);
            for (size_t m = 0; m < dim_; ++m) {
                const Vec& col = basis_action(b, m);
                for (size_t t = 0; t < dim_; ++t) mat.at(t, m) = col[t];
            }
            mod.set_action(b, std::move(mat));
        }
        return mod;
    }

  private:
    struct DepthGuard {
        Straightener& s;
        explicit DepthGuard(Straightener& st) : s(st) {
            if (++s.depth_ > s.max_depth_)
                throw std::logic_error("induced_module: rewriting depth exceeded");
        }
        ~DepthGuard() { --s.depth_; }
    };

    unsigned digit(size_t mono, size_t j) const { return (mono / weight_[j]) % f_.p; }

    // Index of the leftmost generator present in the monomial, or k if none.
    size_t first_digit(size_t mono) const {
        for (size_t j = 0; j < k_; ++j)
            if (digit(mono, j)) return j;
        return k_;
    }

    unsigned chi_of(const Vec& x) const {
        unsigned s = 0;
        for (size_t t = 0; t < n_; ++t) s = f_.add(s, f_.mul(chi_[t], x[t]));
        return s;
    }

    void add_scaled(Vec& acc, unsigned coef, const Vec& v) const {
        if (!coef) return;
        for (size_t t = 0; t < dim_; ++t) acc[t] = f_.add(acc[t], f_.mul(coef, v[t]));
    }

    // x . (mono (x) w) by linear extension over the standard basis.
    Vec act_elem(const Vec& x, size_t mono) {
        Vec out(dim_, 0);
        for (size_t u = 0; u < n_; ++u)
            if (x[u]) add_scaled(out, x[u], basis_action(u, mono));
        return out;
    }

    // e_b . (mono (x) w).
    const Vec& basis_action(size_t b, size_t mono) {
        size_t key = b * dim_ + mono;
        auto it = memo_ba_.find(key);
        if (it != memo_ba_.end()) return it->second;
        DepthGuard guard(*this);
        Vec out(dim_, 0);
        size_t j = first_digit(mono);
        if (j == k_) {
            // e_b hits 1 (x) w: split e_b into co-basis generators, which
            // start a monomial, and a subalgebra part, which acts by chi.
            Vec apart(n_, 0);
            apart[b] = 1;
            for (size_t i = 0; i < k_; ++i) {
                unsigned al = proj_.at(i, b);
                if (!al) continue;
                add_scaled(out, al, left_mult(i, 0));
                apart[cob_[i]] = f_.sub(apart[cob_[i]], al);
            }
            out[0] = f_.add(out[0], chi_of(apart));
        } else {
            size_t rest = mono - weight_[j];
            Vec y = basis_action(b, rest);
            for (size_t m = 0; m < dim_; ++m)
                if (y[m]) add_scaled(out, y[m], left_mult(j, m));
            Vec z = act_elem(r_.algebra.bracket_basis(b, cob_[j]), rest);
            for (size_t t = 0; t < dim_; ++t) out[t] = f_.add(out[t], z[t]);
        }
        return memo_ba_.emplace(key, std::move(out)).first->second;
    }

    // E_g . (mono (x) w) for co-basis generator g.
    const Vec& left_mult(size_t g, size_t mono) {
        size_t key = g * dim_ + mono;
        auto it = memo_lm_.find(key);
        if (it != memo_lm_.end()) return it->second;
        DepthGuard guard(*this);
        Vec out(dim_, 0);
        size_t i = first_digit(mono);
        if (i >= g) {
            unsigned d = digit(mono, g);
            if (d + 1 < f_.p) {
                out[mono + weight_[g]] = 1;
            } else {
                // E_g^p collapses to its p-power plus the character scalar.
                size_t tail = mono - static_cast<size_t>(d) * weight_[g];
                out = act_elem(gen_ppow_[g], tail);
                out[tail] = f_.add(out[tail], f_.frob(chi_[cob_[g]]));
            }
        } else {
            // Blocked by an earlier generator: commute past it.
            size_t rest = mono - weight_[i];
            Vec y = left_mult(g, rest);
            for (size_t m = 0; m < dim_; ++m)
                if (y[m]) add_scaled(out, y[m], left_mult(i, m));
            Vec z = act_elem(r_.algebra.bracket_basis(cob_[g], cob_[i]), rest);
            for (size_t t = 0; t < dim_; ++t) out[t] = f_.add(out[t], z[t]);
        }
        return memo_lm_.emplace(key, std::move(out)).first->second;
    }

    const RestrictedAlgebra& r_;
    Fp f_;
    size_t n_;
    size_t dim_;
    size_t k_ = 0;
    std::vector<unsigned> cob_;
    FpMatrix proj_;
    std::vector<size_t> weight_;
    std::vector<Vec> gen_ppow_;
    Vec chi_;
    std::unordered_map<size_t, Vec> memo_ba_;
    std::unordered_map<size_t, Vec> memo_lm_;
    size_t depth_ = 0;
    size_t max_depth_ = 0;
};

}  // namespace

Character choose_character(const RestrictedAlgebra& r, const Subspace& a) {
    if (a.is_zero())
        throw std::invalid_argument("choose_character: need a nonzero subalgebra");
    if (a.ambient() != r.algebra.dim())
        throw std::invalid_argument("choose_character: subspace does not match the algebra");
    Vec c(r.algebra.dim(), 0);
    c[a.pivots()[0]] = 1;
    return Character{c};
}

LieModule induced_module(const RestrictedAlgebra& r, const Subspace& a,
                         const Character& c, unsigned max_dim) {
    const LieAlgebra& l = r.algebra;
    size_t n = l.dim();
    unsigned p = l.p();
    if (a.ambient() != n || a.modulus() != p)
        throw std::invalid_argument("induced_module: subspace does not match the algebra");
    if (r.pmap.images.size() != n)
        throw std::invalid_argument("induced_module: p-map images must cover the basis");
    if (c.c.size() != n)
        throw std::invalid_argument("induced_module: character length mismatch");
    if (!l.is_abelian(a))
        throw std::invalid_argument("induced_module: subalgebra must be abelian");
    Fp f(p);
    for (size_t i = 0; i < a.dim(); ++i) {
        Vec pp = p_power(r, a.basis_row(i));
        if (!a.contains(pp))
            throw std::invalid_argument(
                "induced_module: subalgebra is not closed under p-powers");
        unsigned cv = 0;
        for (size_t t = 0; t < n; ++t) cv = f.add(cv, f.mul(c.c[t], pp[t]));
        if (cv)
            throw std::invalid_argument(
                "induced_module: character must vanish on p-powers of the subalgebra");
    }
    size_t k = n - a.dim();
    unsigned long long dim = 1;
    for (size_t j = 0; j < k; ++j) {
        dim *= p;
        if (dim > max_dim)
            throw dim_guard_error("induced module dimension p^" + std::to_string(k) +
                                  " exceeds the ceiling " + std::to_string(max_dim));
    }
    Straightener st(r, a, c, static_cast<size_t>(dim));
    LieModule mod = st.build();
    if (mod.dim() <= 64 && !mod.verify(l))
        throw std::logic_error("induced_module: representation law failed");
    return mod;
}

}  // namespace modlie
