#include "modlie/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace modlie {

namespace {

struct Line {
    size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            line.tokens.push_back(tok);
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

long long to_int(const Line& ln, const std::string& tok, const char* what) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(ln.number, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(ln.number, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

// Reads `<count> scalars` starting at token index `from`, reduced mod p.
Vec scalars(const Line& ln, size_t from, size_t count, const Fp& f) {
    if (ln.tokens.size() != from + count)
        throw ParseError(ln.number, "expected " + std::to_string(count) +
                                        " scalars, got " +
                                        std::to_string(ln.tokens.size() - from));
    Vec v(count, 0);
    for (size_t i = 0; i < count; ++i)
        v[i] = f.reduce(to_int(ln, ln.tokens[from + i], "a scalar"));
    return v;
}

}  // namespace

LieFileData parse_lie(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    size_t at = 0;
    if (at >= lines.size() || lines[at].tokens[0] != "p" || lines[at].tokens.size() != 2)
        throw ParseError(at < lines.size() ? lines[at].number : 0, "expected 'p <prime>'");
    long long pv = to_int(lines[at], lines[at].tokens[1], "a prime");
    if (pv < 2 || pv > 65535) throw ParseError(lines[at].number, "modulus out of range");
    if (!Fp::is_prime(static_cast<unsigned>(pv)))
        throw ParseError(lines[at].number, "modulus " + std::to_string(pv) + " is not prime");
    Fp f(static_cast<unsigned>(pv));
    ++at;
    if (at >= lines.size() || lines[at].tokens[0] != "dim" || lines[at].tokens.size() != 2)
        throw ParseError(at < lines.size() ? lines[at].number : 0, "expected 'dim <n>'");
    long long nv = to_int(lines[at], lines[at].tokens[1], "a dimension");
    if (nv < 0 || nv > 4096) throw ParseError(lines[at].number, "dimension out of range");
    size_t n = static_cast<size_t>(nv);
    ++at;

    LieFileData out;
    out.algebra = LieAlgebra(n, f.p);
    std::vector<bool> seen_pair(n * n, false);
    std::vector<bool> seen_pmap(n, false);
    std::vector<Vec> images(n, Vec(n, 0));
    bool any_pmap = false;

    for (; at < lines.size(); ++at) {
        const Line& ln = lines[at];
        const std::string& kw = ln.tokens[0];
        if (kw == "bracket") {
            if (ln.tokens.size() < 4 || ln.tokens[3] != ":")
                throw ParseError(ln.number, "expected 'bracket i j : c1 ... cn'");
            long long i = to_int(ln, ln.tokens[1], "an index");
            long long j = to_int(ln, ln.tokens[2], "an index");
            if (i < 1 || j < 1 || i > static_cast<long long>(n) ||
                j > static_cast<long long>(n))
                throw ParseError(ln.number, "basis index out of range");
            if (i >= j) throw ParseError(ln.number, "bracket indices must satisfy i < j");
            size_t ii = static_cast<size_t>(i - 1), jj = static_cast<size_t>(j - 1);
            if (seen_pair[ii * n + jj])
                throw ParseError(ln.number, "duplicate bracket for this pair");
            seen_pair[ii * n + jj] = true;
            out.algebra.set_bracket(ii, jj, scalars(ln, 4, n, f));
        } else if (kw == "pmap") {
            if (ln.tokens.size() < 3 || ln.tokens[2] != ":")
                throw ParseError(ln.number, "expected 'pmap i : c1 ... cn'");
            long long i = to_int(ln, ln.tokens[1], "an index");
            if (i < 1 || i > static_cast<long long>(n))
                throw ParseError(ln.number, "basis index out of range");
            size_t ii = static_cast<size_t>(i - 1);
            if (seen_pmap[ii]) throw ParseError(ln.number, "duplicate pmap line");
            seen_pmap[ii] = true;
            any_pmap = true;
            images[ii] = scalars(ln, 3, n, f);
        } else {
            throw ParseError(ln.number, "unknown keyword '" + kw + "'");
        }
    }

    if (auto viol = out.algebra.jacobi_violation()) {
        auto [i, j, k] = *viol;
        throw ParseError(0, "Jacobi identity fails at basis triple (" +
                                std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                ", " + std::to_string(k + 1) + ")");
    }
    if (any_pmap) {
        PMap pm{images};
        RestrictedAlgebra r{out.algebra, pm};
        for (size_t i = 0; i < n; ++i)
            if (!(r.algebra.ad(pm.images[i]) == r.algebra.ad_basis(i).powed(f.p)))
                throw ParseError(0, "p-map fails its defining law at basis element " +
                                        std::to_string(i + 1));
        out.pmap = std::move(pm);
    }
    return out;
}

std::string emit_lie(const LieAlgebra& l, const std::optional<PMap>& pmap) {
    std::ostringstream os;
    os << "p " << l.p() << "\n";
    os << "dim " << l.dim() << "\n";
    for (size_t i = 0; i < l.dim(); ++i)
        for (size_t j = i + 1; j < l.dim(); ++j) {
            const Vec& v = l.bracket_basis(i, j);
            if (vec_is_zero(v)) continue;
            os << "bracket " << (i + 1) << " " << (j + 1) << " :";
            for (unsigned c : v) os << " " << c;
            os << "\n";
        }
    if (pmap) {
        for (size_t i = 0; i < l.dim(); ++i) {
            os << "pmap " << (i + 1) << " :";
            for (unsigned c : pmap->images[i]) os << " " << c;
            os << "\n";
        }
    }
    return os.str();
}

LieModule parse_mod(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    size_t at = 0;
    auto header = [&](const char* key) -> long long {
        if (at >= lines.size() || lines[at].tokens[0] != key ||
            lines[at].tokens.size() != 2)
            throw ParseError(at < lines.size() ? lines[at].number : 0,
                             std::string("expected '") + key + " <value>'");
        long long v = to_int(lines[at], lines[at].tokens[1], "a number");
        ++at;
        return v;
    };
    long long pv = header("p");
    if (pv < 2 || pv > 65535) throw ParseError(lines[at - 1].number, "modulus out of range");
    if (!Fp::is_prime(static_cast<unsigned>(pv)))
        throw ParseError(lines[at - 1].number,
                         "modulus " + std::to_string(pv) + " is not prime");
    Fp f(static_cast<unsigned>(pv));
    long long an = header("algdim");
    long long mn = header("moddim");
    if (an < 0 || an > 4096 || mn < 0 || mn > 65536)
        throw ParseError(0, "dimensions out of range");
    size_t n = static_cast<size_t>(an), m = static_cast<size_t>(mn);

    LieModule mod(n, m, f.p);
    for (size_t i = 0; i < n; ++i) {
        if (at >= lines.size() || lines[at].tokens[0] != "action" ||
            lines[at].tokens.size() != 3 || lines[at].tokens[2] != ":")
            throw ParseError(at < lines.size() ? lines[at].number : 0,
                             "expected 'action " + std::to_string(i + 1) + " :'");
        long long idx = to_int(lines[at], lines[at].tokens[1], "an index");
        if (idx != static_cast<long long>(i + 1))
            throw ParseError(lines[at].number, "action blocks must appear in order");
        ++at;
        FpMatrix mat(m, m, f.p);
        for (size_t r = 0; r < m; ++r) {
            if (at >= lines.size())
                throw ParseError(0, "missing matrix row " + std::to_string(r + 1) +
                                        " of action " + std::to_string(i + 1));
            Vec row = scalars(lines[at], 0, m, f);
            for (size_t c = 0; c < m; ++c) mat.at(r, c) = row[c];
            ++at;
        }
        mod.set_action(i, std::move(mat));
    }
    if (at != lines.size()) throw ParseError(lines[at].number, "unexpected trailing content");
    return mod;
}

std::string emit_mod(const LieModule& m) {
    std::ostringstream os;
    os << "p " << m.modulus() << "\n";
    os << "algdim " << m.alg_dim() << "\n";
    os << "moddim " << m.dim() << "\n";
    for (size_t i = 0; i < m.alg_dim(); ++i) {
        os << "action " << (i + 1) << " :\n";
        const FpMatrix& a = m.action(i);
        for (size_t r = 0; r < m.dim(); ++r) {
            for (size_t c = 0; c < m.dim(); ++c) os << (c ? " " : "") << a.at(r, c);
            os << "\n";
        }
    }
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

LieFileData read_lie_file(const std::string& path) {
    return parse_lie(read_text_file(path));
}

LieModule read_mod_file(const std::string& path) {
    return parse_mod(read_text_file(path));
}

}  // namespace modlie
