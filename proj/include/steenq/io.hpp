#pragma once

// Shared file formats. Complexes travel as UTF-8 text: `#` starts a comment,
// every non-empty line is one simplex as space-separated ascending integers,
// and the file denotes the downward closure of its lines. Cochains travel as
// JSON objects {"degree": n, "support": [[v, ...], ...]}.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "steenq/simplicial.hpp"

namespace steenq {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);

/// Maximal simplices, one line each, lexicographic order.
std::string complex_to_text(const SimplicialComplex& X);

Cochain read_cochain(std::istream& in);
Cochain read_cochain_file(const std::string& path);

/// {"degree": n, "support": [...]} with the support sorted lexicographically.
std::string cochain_to_json(const Cochain& a);

}  // namespace steenq
