#pragma once

#include <optional>
#include <string>

#include "heckelab/qscalar.hpp"
#include "heckelab/rat.hpp"
#include "heckelab/tensor.hpp"

namespace heckelab {

// R-matrix file (JSON):
//   { "dim": N, "q": "symbolic" | "<rational>",
//     "entries": [ { "in": [i1, i2], "out": [j1, j2], "value": "<scalar>" }, ... ] }
// Indices are 1-based; "in" is the lower (row) multi-index. Unlisted entries
// are zero.
struct RMatrixFile {
    int dim = 0;
    std::optional<Rat> q;  // empty for "symbolic"
    TensorOperator<QScalar> r;
};

// Throws ParseError on malformed content.
RMatrixFile parse_rmatrix(const std::string& text);
RMatrixFile load_rmatrix(const std::string& path);
std::string dump_rmatrix(const TensorOperator<QScalar>& r, const std::optional<Rat>& q);

}  // namespace heckelab
