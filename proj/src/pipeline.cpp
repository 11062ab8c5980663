#include "modlie/pipeline.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace modlie {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 15u];
        v >>= 4;
    }
    return s;
}

std::string algebra_blob(const LieAlgebra& l) {
    std::ostringstream os;
    os << "p " << l.p() << " n " << l.dim();
    for (size_t i = 0; i < l.dim(); ++i)
        for (size_t j = i + 1; j < l.dim(); ++j) {
            os << " b " << i << " " << j;
            for (unsigned c : l.bracket_basis(i, j)) os << " " << c;
        }
    return os.str();
}

std::string wit_str(const ChopWitness& w) {
    return "seed=" + std::to_string(w.seed) + " word=" + std::to_string(w.word_index) +
           " deg=" + std::to_string(w.factor_degree) + " {" + w.word + "}";
}

std::string wit_str(const std::optional<ChopWitness>& w) {
    return w ? wit_str(*w) : std::string("none");
}

std::uint64_t bound_for(BoundKind kind, size_t n, unsigned p) {
    if (n == 0) return 1;
    std::uint64_t e = (kind == BoundKind::restricted)
                          ? static_cast<std::uint64_t>(n) - 1
                          : static_cast<std::uint64_t>(n) * n - 1;
    return pow_saturating(p, e);
}

// Subspace given in the coordinates of another, mapped to ambient ones.
Subspace embed_rows(const Subspace& inner, const Subspace& outer) {
    return Subspace::span(inner.basis().mul(outer.basis()));
}

// Intermediate payload of the recursive constructions.
struct BuildOut {
    std::vector<LieModule> summands;
    std::vector<std::string> witnesses;  // parallel to summands
    std::vector<std::string> trace;
};

unsigned long long total_dim(const BuildOut& b) {
    unsigned long long t = 0;
    for (const auto& m : b.summands) t += m.dim();
    return t;
}

void absorb(BuildOut& out, BuildOut&& in, const FpMatrix& projection,
            const char* prefix) {
    for (auto& m : in.summands) out.summands.push_back(inflate(m, projection));
    for (auto& w : in.witnesses) out.witnesses.push_back(std::move(w));
    for (auto& t : in.trace) out.trace.push_back(prefix + std::move(t));
}

LieModule scalar_module(unsigned p) {
    LieModule m(1, 1, p);
    FpMatrix a(1, 1, p);
    a.at(0, 0) = 1;
    m.set_action(0, a);
    return m;
}

BuildOut build_restricted(const RestrictedAlgebra& rin, std::uint64_t seed,
                          const PipelineOptions& opt) {
    const size_t n = rin.algebra.dim();
    const unsigned p = rin.algebra.p();
    BuildOut out;
    if (n == 0) {
        out.trace.push_back("res:base-empty");
        return out;
    }
    if (n == 1) {
        LieModule m = scalar_module(p);
        ChopOutcome oc = chop(m, derive_seed(seed, "w1"));
        out.summands.push_back(std::move(m));
        out.witnesses.push_back(wit_str(oc.witness));
        out.trace.push_back("res:base-scalar");
        return out;
    }

    // Move to an equivalent p-operation vanishing on the abelian socle, so
    // every abelian minimal ideal below becomes a [p]-ideal.  The output is
    // a module for the underlying algebra, which is unchanged.
    RestrictedAlgebra r = zero_on_abelian_socle(rin, derive_seed(seed, "asoc"));
    const LieAlgebra& lg = r.algebra;
    out.trace.push_back(r.pmap.images == rin.pmap.images ? "res:asoc-kept"
                                                         : "res:asoc-adjusted");

    PIdealReport rep = minimal_p_ideals(r, derive_seed(seed, "pmin"));
    if (!rep.unique) {
        // Two distinct minimal [p]-ideals intersect trivially, so the
        // quotient modules pull back to a faithful direct sum.
        const Subspace& a1 = rep.witnesses[0];
        const Subspace& a2 = rep.witnesses[1];
        RestrictedQuotient q1 = quotient_restricted(r, a1);
        RestrictedQuotient q2 = quotient_restricted(r, a2);
        out.trace.push_back("res:split(" + std::to_string(q1.algebra.algebra.dim()) +
                            "," + std::to_string(q2.algebra.algebra.dim()) + ")");
        BuildOut b1 = build_restricted(q1.algebra, derive_seed(seed, "q0"), opt);
        BuildOut b2 = build_restricted(q2.algebra, derive_seed(seed, "q1"), opt);
        unsigned long long s1 = total_dim(b1), s2 = total_dim(b2);
        if (s1 > bound_for(BoundKind::restricted, n - 1, p) ||
            s2 > bound_for(BoundKind::restricted, n - 1, p) ||
            s1 + s2 > bound_for(BoundKind::restricted, n, p))
            throw std::logic_error("build_restricted: split bound arithmetic violated");
        absorb(out, std::move(b1), q1.projection, "0/");
        absorb(out, std::move(b2), q2.projection, "1/");
        return out;
    }

    // Unique minimal [p]-ideal a; pick a minimal ideal b inside it by
    // chopping the adjoint action on a.
    const Subspace& a = rep.witnesses[0];
    LieModule amod = sub_module(adjoint_module(lg), a);
    MinimalSubmodule ms = find_minimal_submodule(amod, derive_seed(seed, "minB"));
    Subspace b = embed_rows(ms.space, a);
    LieModule bmod = sub_module(adjoint_module(lg), b);
    Subspace k = module_kernel(bmod);
    if (k.is_zero()) {
        ChopOutcome oc = chop(bmod, derive_seed(seed, "wB"));
        if (!oc.irreducible())
            throw std::logic_error("build_restricted: minimal ideal module split");
        out.summands.push_back(std::move(bmod));
        out.witnesses.push_back(wit_str(oc.witness));
        out.trace.push_back("res:minimal-ideal-faithful(" + std::to_string(b.dim()) + ")");
        return out;
    }

    // Nonzero kernel forces b = a abelian with vanishing p-powers; any
    // failure here is a construction bug, not an input condition.
    if (!is_p_ideal(r, k))
        throw std::logic_error("build_restricted: action kernel is not a [p]-ideal");
    if (!k.contains(a))
        throw std::logic_error("build_restricted: kernel misses the minimal [p]-ideal");
    if (!(b == a))
        throw std::logic_error("build_restricted: minimal ideal differs from the [p]-ideal");
    if (!lg.is_abelian(a))
        throw std::logic_error("build_restricted: unique minimal [p]-ideal is not abelian");
    for (size_t i = 0; i < a.dim(); ++i)
        if (!vec_is_zero(p_power(r, a.basis_row(i))))
            throw std::logic_error("build_restricted: p-powers survive on the minimal ideal");

    Character c = choose_character(r, a);
    LieModule v = induced_module(r, a, c, opt.max_module_dim);
    out.trace.push_back("res:induced(" + std::to_string(v.dim()) + ")");
    std::vector<FactorEntry> factors = composition_factors(v, derive_seed(seed, "cf"));
    for (auto& f : factors) {
        out.summands.push_back(std::move(f.module));
        out.witnesses.push_back(wit_str(f.witness));
    }
    if (!is_faithful(direct_sum(out.summands)))
        throw std::logic_error("build_restricted: induced factors lost faithfulness");
    return out;
}

BuildOut build_general(const LieAlgebra& l, std::uint64_t seed,
                       const PipelineOptions& opt) {
    const size_t n = l.dim();
    const unsigned p = l.p();
    BuildOut out;
    if (n == 0) {
        out.trace.push_back("gen:base-empty");
        return out;
    }
    if (n == 1) {
        LieModule m = scalar_module(p);
        ChopOutcome oc = chop(m, derive_seed(seed, "w1"));
        out.summands.push_back(std::move(m));
        out.witnesses.push_back(wit_str(oc.witness));
        out.trace.push_back("gen:base-scalar");
        return out;
    }

    IdealReport rep = minimal_ideal_report(l, derive_seed(seed, "min"));
    if (!rep.unique) {
        const Subspace& i1 = rep.witnesses[0];
        const Subspace& i2 = rep.witnesses[1];
        QuotientData q1 = quotient(l, i1);
        QuotientData q2 = quotient(l, i2);
        out.trace.push_back("gen:split(" + std::to_string(q1.algebra.dim()) + "," +
                            std::to_string(q2.algebra.dim()) + ")");
        BuildOut b1 = build_general(q1.algebra, derive_seed(seed, "q0"), opt);
        BuildOut b2 = build_general(q2.algebra, derive_seed(seed, "q1"), opt);
        unsigned long long s1 = total_dim(b1), s2 = total_dim(b2);
        if (s1 > bound_for(BoundKind::general, n - 1, p) ||
            s2 > bound_for(BoundKind::general, n - 1, p) ||
            s1 + s2 > bound_for(BoundKind::general, n, p))
            throw std::logic_error("build_general: split bound arithmetic violated");
        absorb(out, std::move(b1), q1.projection, "0/");
        absorb(out, std::move(b2), q2.projection, "1/");
        return out;
    }

    const Subspace& a = rep.witnesses[0];
    if (!l.is_abelian(a)) {
        // The adjoint action on a non-abelian minimal ideal is already
        // faithful and irreducible.
        LieModule m = sub_module(adjoint_module(l), a);
        if (!is_faithful(m))
            throw std::logic_error("build_general: adjoint on the minimal ideal has kernel");
        ChopOutcome oc = chop(m, derive_seed(seed, "wA"));
        if (!oc.irreducible())
            throw std::logic_error("build_general: minimal ideal module split");
        out.summands.push_back(std::move(m));
        out.witnesses.push_back(wit_str(oc.witness));
        out.trace.push_back("gen:adjoint-minimal(" + std::to_string(a.dim()) + ")");
        return out;
    }

    // Unique abelian minimal ideal: pass through the p-envelope, solve the
    // restricted problem there, and come back down to the original algebra.
    Envelope env = build_envelope(l, a, opt.envelope_mode);
    const size_t nn = env.host.algebra.dim();
    if (nn > n * n)
        throw std::logic_error("build_general: envelope exceeded the square bound");
    BuildOut sub = build_restricted(env.host, derive_seed(seed, "env"), opt);

    FpMatrix embt = env.l_embedding.transposed();  // host coordinates of L-vectors
    std::vector<Vec> ideal_host;
    for (size_t i = 0; i < a.dim(); ++i) ideal_host.push_back(embt.apply(a.basis_row(i)));
    auto sees_ideal = [&](const LieModule& m) {
        for (const Vec& hv : ideal_host)
            if (!m.rho(hv).is_zero()) return true;
        return false;
    };
    size_t pick = 0;
    while (pick < sub.summands.size() && !sees_ideal(sub.summands[pick])) ++pick;
    if (pick == sub.summands.size())
        throw std::logic_error("build_general: no envelope summand sees the minimal ideal");

    std::vector<Vec> lrows;
    for (size_t i = 0; i < n; ++i) lrows.push_back(env.l_embedding.row(i));
    LieModule down = restrict_module(sub.summands[pick], lrows);
    MinimalSubmodule v1 = irreducible_submodule(down, derive_seed(seed, "v1"));
    if (!is_faithful(v1.module))
        throw std::logic_error("build_general: envelope restriction lost faithfulness");
    out.trace.push_back("gen:envelope(host=" + std::to_string(nn) + ",pick=" +
                        std::to_string(pick) + ")");
    for (auto& t : sub.trace) out.trace.push_back("e/" + std::move(t));
    out.summands.push_back(std::move(v1.module));
    out.witnesses.push_back(wit_str(v1.witness));
    return out;
}

FaithfulResult finish(BoundKind kind, const LieAlgebra& l, std::uint64_t seed,
                      std::string hash, BuildOut&& b) {
    const unsigned p = l.p();
    FaithfulResult res;
    res.summands = std::move(b.summands);
    res.module = res.summands.empty() ? trivial_module(l.dim(), 0, p)
                                      : direct_sum(res.summands);
    Certificate& c = res.certificate;
    c.kind = kind;
    c.seed = seed;
    c.input_hash = std::move(hash);
    c.trace = std::move(b.trace);
    c.module_dim = res.module.dim();
    c.bound = bound_for(kind, l.dim(), p);
    for (const auto& m : res.summands) c.summand_dims.push_back(m.dim());
    c.witnesses = std::move(b.witnesses);

    bool faithful = is_faithful(res.module);
    bool bounded = c.module_dim <= c.bound;
    bool law = res.module.dim() > 64 || res.module.verify(l);
    c.checks.push_back(std::string("faithful: ") + (faithful ? "pass" : "fail"));
    c.checks.push_back(std::string("bound: ") + (bounded ? "pass" : "fail"));
    c.checks.push_back(res.module.dim() > 64
                           ? std::string("representation-law: skipped (dimension)")
                           : std::string("representation-law: ") + (law ? "pass" : "fail"));
    if (!faithful || !bounded || !law)
        throw std::logic_error("construction certificate check failed");
    c.ok = true;
    return res;
}

}  // namespace

std::uint64_t pow_saturating(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

std::string input_hash(const LieAlgebra& l) { return hex64(fnv1a(algebra_blob(l))); }

std::string input_hash(const RestrictedAlgebra& r) {
    std::ostringstream os;
    os << algebra_blob(r.algebra) << " pmap";
    for (const Vec& im : r.pmap.images) {
        os << " |";
        for (unsigned c : im) os << " " << c;
    }
    return hex64(fnv1a(os.str()));
}

std::string Certificate::serialize() const {
    std::ostringstream os;
    os << "kind: " << (kind == BoundKind::restricted ? "restricted" : "general") << "\n"
       << "seed: " << seed << "\n"
       << "input-hash: " << input_hash << "\n"
       << "module-dim: " << module_dim << "\n"
       << "bound: " << bound << "\n"
       << "summands: " << summand_dims.size() << "\n";
    for (size_t i = 0; i < summand_dims.size(); ++i)
        os << "summand " << i << ": dim " << summand_dims[i] << " witness "
           << (i < witnesses.size() ? witnesses[i] : std::string("none")) << "\n";
    os << "trace:";
    for (const auto& t : trace) os << " " << t;
    os << "\n";
    for (const auto& ck : checks) os << "check " << ck << "\n";
    os << "ok: " << (ok ? "yes" : "no") << "\n";
    return os.str();
}

FaithfulResult faithful_cr_restricted(const RestrictedAlgebra& r,
                                      const PipelineOptions& opt) {
    if (!r.algebra.verify_jacobi())
        throw std::invalid_argument("faithful_cr_restricted: brackets violate Jacobi");
    if (!verify_p_map(r))
        throw std::invalid_argument("faithful_cr_restricted: p-map fails its defining law");
    BuildOut b = build_restricted(r, opt.seed, opt);
    return finish(BoundKind::restricted, r.algebra, opt.seed, input_hash(r), std::move(b));
}

FaithfulResult faithful_cr(const LieAlgebra& l, const PipelineOptions& opt) {
    if (!l.verify_jacobi())
        throw std::invalid_argument("faithful_cr: brackets violate Jacobi");
    BuildOut b = build_general(l, opt.seed, opt);
    return finish(BoundKind::general, l, opt.seed, input_hash(l), std::move(b));
}

Certificate verify_certificate(const LieAlgebra& l, const FaithfulResult& res,
                               BoundKind kind, std::uint64_t fresh_seed) {
    Certificate c;
    c.kind = kind;
    c.seed = fresh_seed;
    c.input_hash = input_hash(l);
    c.trace.push_back("verify");
    c.module_dim = res.module.dim();
    c.bound = bound_for(kind, l.dim(), l.p());
    bool all = true;
    auto record = [&](const std::string& name, bool pass, const std::string& why = "") {
        std::string line = name + (pass ? ": pass" : ": fail");
        if (!why.empty()) line += " (" + why + ")";
        c.checks.push_back(line);
        all = all && pass;
    };

    bool shape = res.module.alg_dim() == l.dim() && res.module.modulus() == l.p();
    record("shape", shape);
    if (!shape) {
        c.ok = false;
        return c;
    }
    if (res.module.dim() <= 512)
        record("representation-law", res.module.verify(l));
    else
        record("representation-law", true, "skipped above dimension 512");
    record("faithful", is_faithful(res.module));
    if (res.summands.empty())
        record("direct-sum", res.module.dim() == 0);
    else
        record("direct-sum", direct_sum(res.summands) == res.module);
    record("bound", c.module_dim <= c.bound);

    for (size_t i = 0; i < res.summands.size(); ++i) {
        const LieModule& m = res.summands[i];
        c.summand_dims.push_back(m.dim());
        bool irr = false;
        std::string wit = "none";
        std::string why;
        for (unsigned attempt = 0; attempt < 3 && !irr; ++attempt) {
            try {
                ChopOutcome oc = chop(
                    m, derive_seed(fresh_seed, "v" + std::to_string(i) + "a" +
                                                   std::to_string(attempt)));
                if (oc.irreducible()) {
                    irr = true;
                    wit = wit_str(oc.witness);
                } else {
                    why = "proper submodule found";
                    break;
                }
            } catch (const chop_budget_error&) {
                why = "chop budget exhausted";
            }
        }
        c.witnesses.push_back(wit);
        record("irreducible-" + std::to_string(i), irr, why);
    }
    c.ok = all;
    return c;
}

}  // namespace modlie
