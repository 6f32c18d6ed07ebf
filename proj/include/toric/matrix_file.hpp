#pragma once

// Plain-text matrix files: a header line "m n" followed by m lines of n
// whitespace-separated integers. No comments.

#include "toric/core.hpp"

#include <string>
#include <string_view>

namespace toric {

/// Throws Error(Parse) on malformed input.
IntegerMatrix parse_matrix(std::string_view text);
IntegerMatrix read_matrix_file(const std::string& path);

std::string render_matrix(const IntegerMatrix& m);
/// Vectors as the rows of a matrix with `length` columns.
std::string render_vectors(const VectorSet& vectors, std::size_t length);

/// Whitespace-separated integers, e.g. "2 2 1 1 -1 -1 -1 -1".
LatticeVector parse_vector(std::string_view text);

}  // namespace toric
