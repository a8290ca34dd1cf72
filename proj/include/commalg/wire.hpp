#pragma once

#include <string>

#include "json.hpp"

#include "commalg/commute.hpp"
#include "commalg/length.hpp"
#include "commalg/radical.hpp"

namespace commalg {

using json = nlohmann::json;

/// Generator set file:
///
///   {"admit_empty_word": bool, "field": "rational" | "gf:<p>", "n": int,
///    "generators": [{"label": str, "entries": [[i, j, "value"], ...]}, ...]}
///
/// Indices are 1-based; values are integers or "num/den" strings; only
/// nonzero entries are listed. Generators are written sorted by label and
/// entries sorted by (i, j).
json generator_set_to_json(const GeneratingSystem& s);

/// Throws ParseError on any schema violation (indices outside 1..n,
/// duplicate cells within a generator, duplicate labels, bad values).
GeneratingSystem generator_set_from_json(const json& doc);

GeneratingSystem read_generator_file(const std::string& path);

/// Sparse [[i, j, "value"], ...] form of a matrix.
json matrix_entries(const Matrix& m);

json to_json(const LengthReport& report);
json to_json(const MaximalityVerdict& verdict);
json to_json(const RadicalReport& report);
/// Basis of a matrix subspace as a list of sparse matrices.
json subspace_to_json(const Subspace& space);

/// Two-space indented, sorted keys, newline-terminated.
std::string dump(const json& doc);

}  // namespace commalg
