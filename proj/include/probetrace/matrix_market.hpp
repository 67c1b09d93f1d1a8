#pragma once

#include <string>

#include "probetrace/sparse.hpp"

namespace probetrace {

/// Reads a Matrix Market coordinate file (real or integer entries, symmetric
/// or general header; 1-based indices on disk, 0-based in memory).
///
/// Symmetric headers store one triangle; the mirror entries are materialized.
/// General headers are accepted only when the assembled matrix is exactly
/// symmetric. Throws std::runtime_error on parse errors and
/// std::invalid_argument on asymmetry or out-of-range indices.
SparseSymMatrix load_matrix_market(const std::string& path);

}  // namespace probetrace
