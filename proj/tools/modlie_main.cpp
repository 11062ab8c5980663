#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "modlie/corpus.hpp"
#include "modlie/io.hpp"
#include "modlie/pipeline.hpp"

namespace {

using namespace modlie;

int cmd_check(const std::string& path) {
    LieFileData data = read_lie_file(path);
    std::cout << "ok: p=" << data.algebra.p() << " dim=" << data.algebra.dim()
              << (data.pmap ? " pmap=present" : " pmap=absent") << "\n";
    return 0;
}

int cmd_info(const std::string& path) {
    LieFileData data = read_lie_file(path);
    const LieAlgebra& l = data.algebra;
    std::cout << "p: " << l.p() << "\n"
              << "dim: " << l.dim() << "\n"
              << "derived-dim: " << l.derived().dim() << "\n"
              << "centre-dim: " << l.centre().dim() << "\n"
              << "abelian: " << (l.is_abelian_algebra() ? "yes" : "no") << "\n"
              << "pmap-lines: " << (data.pmap ? "present" : "absent") << "\n"
              << "restrictable: " << (solve_restriction(l) ? "yes" : "no") << "\n"
              << "input-hash: " << input_hash(l) << "\n";
    return 0;
}

int cmd_pmap(const std::string& action, const std::string& path) {
    LieFileData data = read_lie_file(path);
    if (action == "solve") {
        std::optional<PMap> pm = solve_restriction(data.algebra);
        if (!pm) {
            std::cout << "not restrictable: no p-map exists for this algebra\n";
            return 1;
        }
        std::cout << emit_lie(data.algebra, pm);
        return 0;
    }
    // verify
    if (!data.pmap) {
        std::cout << "no pmap lines present in " << path << "\n";
        return 1;
    }
    RestrictedAlgebra r{data.algebra, *data.pmap};
    bool ok = verify_p_map(r);
    std::cout << "pmap-law: " << (ok ? "pass" : "fail") << "\n";
    return ok ? 0 : 1;
}

int cmd_envelope(const std::string& path, const std::string& mode_name,
                 std::uint64_t seed, const std::string& out_path) {
    LieFileData data = read_lie_file(path);
    EnvelopeMode mode =
        mode_name == "compact" ? EnvelopeMode::compact : EnvelopeMode::paper;
    Subspace a = abelian_socle(data.algebra, derive_seed(seed, "cli-asoc"));
    Envelope env = build_envelope(data.algebra, a, mode);
    CheckReport rep = verify_envelope(env);

    std::string text;
    text += "# envelope mode=" + mode_name + " original-dim=" +
            std::to_string(env.original_dim) + " host-dim=" +
            std::to_string(env.host.algebra.dim()) + " ideal-dim=" +
            std::to_string(a.dim()) + "\n";
    for (const EnvelopeChain& ch : env.chains) {
        text += "# chain gen=" + std::to_string(ch.generator) + " symbols=[";
        for (size_t i = 0; i < ch.symbols.size(); ++i)
            text += (i ? " " : "") + std::to_string(ch.symbols[i]);
        text += std::string("] closure=") +
                (ch.closed_by_realization ? "realization" : "lambda") + "\n";
    }
    text += emit_lie(env.host.algebra, env.host.pmap);
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
    std::cout << "envelope-check: " << (rep.ok ? "pass" : "fail") << "\n";
    for (const std::string& f : rep.failures) std::cout << "  " << f << "\n";
    return rep.ok ? 0 : 1;
}

int cmd_construct(const std::string& kind, const std::string& path,
                  std::uint64_t seed, unsigned max_dim, const std::string& mode_name,
                  const std::string& out_path, const std::string& cert_path) {
    LieFileData data = read_lie_file(path);
    PipelineOptions opt;
    opt.seed = seed;
    opt.max_module_dim = max_dim;
    opt.envelope_mode =
        mode_name == "compact" ? EnvelopeMode::compact : EnvelopeMode::paper;

    FaithfulResult res;
    BoundKind bk;
    if (kind == "restricted") {
        if (!data.pmap) {
            std::cerr << "error: construct restricted needs pmap lines in " << path
                      << " (try 'pmap solve')\n";
            return 1;
        }
        bk = BoundKind::restricted;
        res = faithful_cr_restricted({data.algebra, *data.pmap}, opt);
    } else {
        bk = BoundKind::general;
        res = faithful_cr(data.algebra, opt);
    }
    Certificate ver =
        verify_certificate(data.algebra, res, bk, derive_seed(seed, "recheck"));

    std::string cert_text = res.certificate.serialize() + "verified:\n" + ver.serialize();
    if (cert_path.empty())
        std::cout << cert_text;
    else
        write_text_file(cert_path, cert_text);
    if (!out_path.empty()) write_text_file(out_path, emit_mod(res.module));

    bool ok = res.certificate.ok && ver.ok;
    std::cout << "construct: " << (ok ? "pass" : "fail") << " dim=" << res.module.dim()
              << " bound=" << res.certificate.bound << "\n";
    return ok ? 0 : 1;
}

int cmd_verify_module(const std::string& lie_path, const std::string& mod_path) {
    LieFileData data = read_lie_file(lie_path);
    LieModule m = read_mod_file(mod_path);
    if (m.alg_dim() != data.algebra.dim() || m.modulus() != data.algebra.p()) {
        std::cout << "shape: fail (module does not match the algebra)\n";
        return 1;
    }
    bool law = m.verify(data.algebra);
    std::cout << "representation-law: " << (law ? "pass" : "fail") << "\n";
    Subspace ker = module_kernel(m);
    std::cout << "kernel-dim: " << ker.dim() << "\n";
    std::cout << "faithful: " << (ker.is_zero() ? "yes" : "no") << "\n";
    return law ? 0 : 1;
}

std::string pad(std::string s, size_t w) {
    do s += ' '; while (s.size() < w);
    return s;
}

int cmd_corpus(std::uint64_t seed) {
    std::cout << "seed: " << seed << "\n";
    std::cout << pad("name", 8) << pad("n", 3) << pad("p", 3) << pad("gen-dim", 9)
              << pad("gen-bound", 11) << pad("gen-ok", 8) << pad("res-dim", 9)
              << pad("res-bound", 11) << pad("res-ok", 8) << "\n";
    bool all_ok = true;
    for (const CorpusEntry& e : builtin_corpus()) {
        PipelineOptions opt;
        opt.seed = derive_seed(seed, "corpus-" + e.name);
        std::string row = pad(e.name, 8) + pad(std::to_string(e.algebra.dim()), 3) +
                          pad(std::to_string(e.algebra.p()), 3);
        FaithfulResult g = faithful_cr(e.algebra, opt);
        Certificate gv = verify_certificate(e.algebra, g, BoundKind::general,
                                            derive_seed(opt.seed, "recheck"));
        bool gok = g.certificate.ok && gv.ok;
        all_ok = all_ok && gok;
        row += pad(std::to_string(g.module.dim()), 9) +
               pad(std::to_string(g.certificate.bound), 11) +
               pad(gok ? "yes" : "no", 8);
        if (e.pmap) {
            FaithfulResult r = faithful_cr_restricted({e.algebra, *e.pmap}, opt);
            Certificate rv = verify_certificate(e.algebra, r, BoundKind::restricted,
                                                derive_seed(opt.seed, "recheck-r"));
            bool rok = r.certificate.ok && rv.ok;
            all_ok = all_ok && rok;
            row += pad(std::to_string(r.module.dim()), 9) +
                   pad(std::to_string(r.certificate.bound), 11) +
                   pad(rok ? "yes" : "no", 8);
        } else {
            row += pad("-", 9) + pad("-", 11) + pad("-", 8);
        }
        std::cout << row << "\n";
    }
    std::cout << "corpus: " << (all_ok ? "pass" : "fail") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with modular Lie algebras and their modules"};
    app.require_subcommand(1);

    std::string path, mod_path, out_path, cert_path;
    std::string action, kind, mode_name = "paper";
    std::uint64_t seed = 1;
    unsigned max_dim = 4096;

    auto* check = app.add_subcommand("check", "parse and validate a .lie file");
    check->add_option("file", path, "algebra file")->required();

    auto* info = app.add_subcommand("info", "print basic facts about an algebra");
    info->add_option("file", path, "algebra file")->required();

    auto* pmap = app.add_subcommand("pmap", "solve for or verify a p-map");
    pmap->add_option("action", action, "solve | verify")
        ->required()
        ->check(CLI::IsMember({"solve", "verify"}));
    pmap->add_option("file", path, "algebra file")->required();

    auto* env = app.add_subcommand("envelope", "embed into a restricted algebra");
    env->add_option("file", path, "algebra file")->required();
    env->add_option("--mode", mode_name, "paper | compact")
        ->check(CLI::IsMember({"paper", "compact"}));
    env->add_option("--seed", seed, "random seed")->envname("MODLIE_SEED");
    env->add_option("--out", out_path, "write the host algebra here");

    auto* cons = app.add_subcommand("construct",
                                    "build a faithful completely reducible module");
    cons->add_option("kind", kind, "restricted | general")
        ->required()
        ->check(CLI::IsMember({"restricted", "general"}));
    cons->add_option("file", path, "algebra file")->required();
    cons->add_option("--seed", seed, "random seed")->envname("MODLIE_SEED");
    cons->add_option("--max-module-dim", max_dim, "abort above this dimension");
    cons->add_option("--mode", mode_name, "envelope mode: paper | compact")
        ->check(CLI::IsMember({"paper", "compact"}));
    cons->add_option("--out", out_path, "write the module here (.mod)");
    cons->add_option("--cert", cert_path, "write the certificate here");

    auto* vm = app.add_subcommand("verify-module", "check a module against an algebra");
    vm->add_option("lie", path, "algebra file")->required();
    vm->add_option("mod", mod_path, "module file")->required();

    auto* corp = app.add_subcommand("corpus", "run both constructions on the corpus");
    corp->add_option("--seed", seed, "random seed")->envname("MODLIE_SEED");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(path);
        if (info->parsed()) return cmd_info(path);
        if (pmap->parsed()) return cmd_pmap(action, path);
        if (env->parsed()) return cmd_envelope(path, mode_name, seed, out_path);
        if (cons->parsed())
            return cmd_construct(kind, path, seed, max_dim, mode_name, out_path,
                                 cert_path);
        if (vm->parsed()) return cmd_verify_module(path, mod_path);
        if (corp->parsed()) return cmd_corpus(seed);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
