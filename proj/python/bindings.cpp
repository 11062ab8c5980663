#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modlie/corpus.hpp"
#include "modlie/io.hpp"
#include "modlie/pipeline.hpp"

namespace py = pybind11;
using namespace modlie;

namespace {

EnvelopeMode mode_of(const std::string& s) {
    if (s == "paper") return EnvelopeMode::paper;
    if (s == "compact") return EnvelopeMode::compact;
    throw py::value_error("mode must be 'paper' or 'compact'");
}

RestrictedAlgebra restricted_of(const LieFileData& d) {
    if (!d.pmap) throw py::value_error("input has no p-map; pass one or solve for it");
    return {d.algebra, *d.pmap};
}

py::dict info(const std::string& text) {
    LieFileData d = parse_lie(text);
    const LieAlgebra& l = d.algebra;
    py::dict out;
    out["p"] = l.p();
    out["dim"] = l.dim();
    out["derived_dim"] = l.derived().dim();
    out["centre_dim"] = l.centre().dim();
    out["abelian"] = l.is_abelian_algebra();
    out["has_pmap"] = d.pmap.has_value();
    out["restrictable"] = solve_restriction(l).has_value();
    out["input_hash"] = input_hash(l);
    return out;
}

std::string canonical(const std::string& text) {
    LieFileData d = parse_lie(text);
    return emit_lie(d.algebra, d.pmap);
}

py::object solve_pmap(const std::string& text) {
    LieFileData d = parse_lie(text);
    std::optional<PMap> pm = solve_restriction(d.algebra);
    if (!pm) return py::none();
    return py::str(emit_lie(d.algebra, pm));
}

py::dict envelope(const std::string& text, const std::string& mode,
                  std::uint64_t seed) {
    LieFileData d = parse_lie(text);
    Subspace a = abelian_socle(d.algebra, derive_seed(seed, "cli-asoc"));
    Envelope env = build_envelope(d.algebra, a, mode_of(mode));
    CheckReport chk = verify_envelope(env, {a});
    py::dict out;
    out["host"] = emit_lie(env.host.algebra, env.host.pmap);
    out["host_dim"] = env.host.algebra.dim();
    out["original_dim"] = d.algebra.dim();
    out["ideal_dim"] = env.abelian_ideal.dim();
    out["ok"] = chk.ok;
    return out;
}

py::dict result_dict(const LieAlgebra& l, const FaithfulResult& res, BoundKind kind,
                     std::uint64_t seed) {
    Certificate ver = verify_certificate(l, res, kind, derive_seed(seed, "recheck"));
    py::dict out;
    out["module"] = emit_mod(res.module);
    out["dim"] = res.module.dim();
    out["bound"] = res.certificate.bound;
    out["summand_dims"] = res.certificate.summand_dims;
    out["certificate"] = res.certificate.serialize();
    out["verified_certificate"] = ver.serialize();
    out["ok"] = res.certificate.ok && ver.ok;
    return out;
}

py::dict construct(const std::string& text, const std::string& kind,
                   std::uint64_t seed, unsigned max_module_dim,
                   const std::string& mode) {
    LieFileData d = parse_lie(text);
    PipelineOptions opt;
    opt.seed = seed;
    opt.max_module_dim = max_module_dim;
    opt.envelope_mode = mode_of(mode);
    if (kind == "restricted") {
        RestrictedAlgebra r = restricted_of(d);
        return result_dict(d.algebra, faithful_cr_restricted(r, opt),
                           BoundKind::restricted, seed);
    }
    if (kind == "general")
        return result_dict(d.algebra, faithful_cr(d.algebra, opt), BoundKind::general,
                           seed);
    throw py::value_error("kind must be 'restricted' or 'general'");
}

std::vector<std::size_t> composition_dims(const std::string& module_text,
                                          std::uint64_t seed) {
    LieModule m = parse_mod(module_text);
    std::vector<std::size_t> dims;
    for (const FactorEntry& fe : composition_factors(m, seed))
        dims.push_back(fe.module.dim());
    return dims;
}

py::dict check_module(const std::string& lie_text, const std::string& module_text) {
    LieFileData d = parse_lie(lie_text);
    LieModule m = parse_mod(module_text);
    py::dict out;
    bool law = m.alg_dim() == d.algebra.dim() && m.modulus() == d.algebra.p() &&
               m.verify(d.algebra);
    out["law"] = law;
    out["kernel_dim"] = law ? module_kernel(m).dim() : m.alg_dim();
    out["faithful"] = law && is_faithful(m);
    return out;
}

std::string induced(const std::string& text, const std::vector<Vec>& subalgebra_rows,
                    unsigned max_dim) {
    LieFileData d = parse_lie(text);
    RestrictedAlgebra r = restricted_of(d);
    Subspace a = Subspace::span(subalgebra_rows, d.algebra.dim(), d.algebra.p());
    LieModule m = induced_module(r, a, choose_character(r, a), max_dim);
    return emit_mod(m);
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const CorpusEntry& e : builtin_corpus()) names.push_back(e.name);
    return names;
}

std::string corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : builtin_corpus())
        if (e.name == name) return emit_lie(e.algebra, e.pmap);
    throw py::value_error("unknown corpus entry '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact constructions of faithful completely reducible modules "
              "for Lie algebras over prime fields";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const dim_guard_error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def("info", &info, py::arg("text"),
          "Summary of an algebra file: field, dimensions, restrictability.");
    m.def("canonical", &canonical, py::arg("text"),
          "Canonical re-emission of an algebra file.");
    m.def("solve_pmap", &solve_pmap, py::arg("text"),
          "Algebra text completed with a solved p-map, or None.");
    m.def("envelope", &envelope, py::arg("text"), py::arg("mode") = "paper",
          py::arg("seed") = 1,
          "Embed the algebra into a restricted host; returns the host text "
          "and dimensions.");
    m.def("construct", &construct, py::arg("text"), py::arg("kind") = "general",
          py::arg("seed") = 1, py::arg("max_module_dim") = 4096,
          py::arg("mode") = "paper",
          "Build a faithful completely reducible module with certificates.");
    m.def("composition_dims", &composition_dims, py::arg("module_text"),
          py::arg("seed") = 1, "Dimensions of the composition factors.");
    m.def("check_module", &check_module, py::arg("lie_text"), py::arg("module_text"),
          "Representation-law, kernel and faithfulness check of a module file.");
    m.def("induced", &induced, py::arg("text"), py::arg("subalgebra_rows"),
          py::arg("max_dim") = 4096,
          "Module induced from an abelian subalgebra with its canonical "
          "character.");
    m.def("corpus_names", &corpus_names, "Names of the built-in examples.");
    m.def("corpus_entry", &corpus_entry, py::arg("name"),
          "Algebra text of a built-in example.");
}
