#pragma once

#include <optional>
#include <string>

#include "modlie/module.hpp"
#include "modlie/pmap.hpp"

namespace modlie {

// Parse failure with the 1-based line it occurred on; line 0 means the
// problem concerns the input as a whole.
struct ParseError : std::runtime_error {
    size_t line;
    ParseError(size_t ln, const std::string& msg)
        : std::runtime_error(ln ? "line " + std::to_string(ln) + ": " + msg
                                : "input: " + msg),
          line(ln) {}
};

struct LieFileData {
    LieAlgebra algebra;
    std::optional<PMap> pmap;

    LieFileData() : algebra(0, 2) {}
};

// Line-oriented algebra format: `p <prime>`, `dim <n>`, then
// `bracket i j : c1 ... cn` with 1-based i < j (omitted pairs are zero) and
// optional `pmap i : c1 ... cn` lines; `#` starts a comment line.  The
// parse rejects non-prime moduli, Jacobi violations (naming the offending
// triple), and p-map lines that fail the defining law.
LieFileData parse_lie(const std::string& text);

// Canonical emission: header, then the nonzero brackets in (i, j) order,
// then every p-map image when one is present.  parse(emit(x)) == x.
std::string emit_lie(const LieAlgebra& l,
                     const std::optional<PMap>& pmap = std::nullopt);

// Module format: `p`, `algdim n`, `moddim m`, then for each 1-based i an
// `action i :` line followed by m rows of m scalars.
LieModule parse_mod(const std::string& text);
std::string emit_mod(const LieModule& m);

LieFileData read_lie_file(const std::string& path);
LieModule read_mod_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace modlie
