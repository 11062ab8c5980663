#include "modlie/module.hpp"

namespace modlie {

LieModule LieModule::from_actions(std::vector<FpMatrix> actions, unsigned p) {
    if (actions.empty()) throw std::invalid_argument("from_actions: need at least one matrix");
    size_t d = actions[0].rows();
    for (const auto& a : actions)
        if (a.rows() != d || a.cols() != d || a.modulus() != p)
            throw std::invalid_argument("from_actions: inconsistent matrices");
    LieModule m(actions.size(), d, p);
    m.actions_ = std::move(actions);
    return m;
}

void LieModule::set_action(size_t i, FpMatrix m) {
    if (m.rows() != dim_ || m.cols() != dim_ || m.modulus() != f_.p)
        throw std::invalid_argument("set_action: shape or modulus mismatch");
    actions_[i] = std::move(m);
}

FpMatrix LieModule::rho(const Vec& x) const {
    if (x.size() != alg_dim_) throw std::invalid_argument("rho: length mismatch");
    FpMatrix r(dim_, dim_, f_.p);
    for (size_t i = 0; i < alg_dim_; ++i)
        if (x[i]) r = r.add(actions_[i].scaled(x[i]));
    return r;
}

bool LieModule::verify(const LieAlgebra& l) const {
    if (l.dim() != alg_dim_ || l.p() != f_.p) return false;
    for (size_t i = 0; i < alg_dim_; ++i)
        for (size_t j = i + 1; j < alg_dim_; ++j) {
            FpMatrix lhs = rho(l.bracket_basis(i, j));
            FpMatrix rhs = actions_[i].mul(actions_[j]).sub(actions_[j].mul(actions_[i]));
            if (lhs != rhs) return false;
        }
    return true;
}

LieModule adjoint_module(const LieAlgebra& l) {
    std::vector<FpMatrix> acts;
    for (size_t i = 0; i < l.dim(); ++i) acts.push_back(l.ad_basis(i));
    return LieModule::from_actions(std::move(acts), l.p());
}

LieModule direct_sum(const std::vector<LieModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: empty list");
    const unsigned p = parts[0].modulus();
    const size_t a = parts[0].alg_dim();
    size_t total = 0;
    for (const auto& m : parts) {
        if (m.alg_dim() != a || m.modulus() != p)
            throw std::invalid_argument("direct_sum: inconsistent parts");
        total += m.dim();
    }
    LieModule out(a, total, p);
    for (size_t i = 0; i < a; ++i) {
        FpMatrix blk(total, total, p);
        size_t off = 0;
        for (const auto& m : parts) {
            for (size_t r = 0; r < m.dim(); ++r)
                for (size_t c = 0; c < m.dim(); ++c)
                    blk.at(off + r, off + c) = m.action(i).at(r, c);
            off += m.dim();
        }
        out.set_action(i, std::move(blk));
    }
    return out;
}

LieModule trivial_module(size_t alg_dim, size_t dim, unsigned p) {
    return LieModule(alg_dim, dim, p);
}

bool is_invariant(const LieModule& m, const Subspace& s) {
    if (s.ambient() != m.dim()) throw std::invalid_argument("is_invariant: ambient mismatch");
    for (size_t i = 0; i < m.alg_dim(); ++i)
        for (size_t r = 0; r < s.dim(); ++r)
            if (!s.contains(m.action(i).apply(s.basis_row(r)))) return false;
    return true;
}

LieModule sub_module(const LieModule& m, const Subspace& s) {
    if (!is_invariant(m, s)) throw std::invalid_argument("sub_module: subspace not invariant");
    const size_t k = s.dim();
    LieModule out(m.alg_dim(), k, m.modulus());
    for (size_t i = 0; i < m.alg_dim(); ++i) {
        FpMatrix a(k, k, m.modulus());
        for (size_t c = 0; c < k; ++c) {
            Vec img = m.action(i).apply(s.basis_row(c));
            auto coords = s.coordinates(img);
            if (!coords) throw std::logic_error("sub_module: image escaped subspace");
            for (size_t r = 0; r < k; ++r) a.at(r, c) = (*coords)[r];
        }
        out.set_action(i, std::move(a));
    }
    return out;
}

QuotientModule quotient_module(const LieModule& m, const Subspace& s) {
    if (!is_invariant(m, s)) throw std::invalid_argument("quotient_module: not invariant");
    CosetFrame frame = coset_frame(s);
    const size_t k = m.dim() - s.dim();
    LieModule out(m.alg_dim(), k, m.modulus());
    for (size_t i = 0; i < m.alg_dim(); ++i)
        out.set_action(i, frame.projection.mul(m.action(i)).mul(frame.section));
    return {std::move(out), std::move(frame.projection), std::move(frame.section)};
}

LieModule inflate(const LieModule& m, const FpMatrix& projection) {
    if (projection.rows() != m.alg_dim())
        throw std::invalid_argument("inflate: projection shape mismatch");
    LieModule out(projection.cols(), m.dim(), m.modulus());
    for (size_t i = 0; i < projection.cols(); ++i) {
        Vec col(projection.rows());
        for (size_t r = 0; r < projection.rows(); ++r) col[r] = projection.at(r, i);
        out.set_action(i, m.rho(col));
    }
    return out;
}

LieModule restrict_module(const LieModule& m, const std::vector<Vec>& rows) {
    LieModule out(rows.size(), m.dim(), m.modulus());
    for (size_t i = 0; i < rows.size(); ++i) out.set_action(i, m.rho(rows[i]));
    return out;
}

Subspace null_space_module(const LieModule& m) {
    const size_t d = m.dim();
    FpMatrix stacked(m.alg_dim() * d, d, m.modulus());
    for (size_t i = 0; i < m.alg_dim(); ++i)
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c)
                stacked.at(i * d + r, c) = m.action(i).at(r, c);
    return kernel_space(stacked);
}

Subspace module_kernel(const LieModule& m) {
    // x = sum x_i e_i lies in the kernel iff sum x_i rho(e_i) = 0; columns
    // index the x_i, rows flatten the matrix entries.
    const size_t d = m.dim();
    FpMatrix sys(d * d, m.alg_dim(), m.modulus());
    for (size_t i = 0; i < m.alg_dim(); ++i) {
        const Vec& flat = m.action(i).flatten();
        for (size_t r = 0; r < d * d; ++r) sys.at(r, i) = flat[r];
    }
    return kernel_space(sys);
}

bool is_faithful(const LieModule& m) { return module_kernel(m).is_zero(); }

Subspace spin(const LieModule& m, const std::vector<Vec>& seeds) {
    EchelonBuilder cur(m.dim(), m.modulus());
    // Worklist closure: apply every generator to every newly independent
    // vector; linearity makes that sufficient.
    std::vector<Vec> work;
    for (const Vec& s : seeds)
        if (cur.add(s)) work.push_back(s);
    while (!work.empty() && !cur.full()) {
        Vec v = std::move(work.back());
        work.pop_back();
        for (size_t i = 0; i < m.alg_dim(); ++i) {
            Vec img = m.action(i).apply(v);
            if (cur.add(img)) work.push_back(std::move(img));
        }
    }
    return cur.to_subspace();
}

}  // namespace modlie
