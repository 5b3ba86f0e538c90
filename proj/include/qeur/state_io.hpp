#pragma once

#include <string>

#include <json.hpp>

#include "qeur/density_matrix.hpp"

namespace qeur {

/// Document shape: {"labels": [...], "dims": [...],
/// "matrix_re": [[...]], "matrix_im": [[...]]}.
/// Structural problems raise Error with a message naming the defect;
/// state-invariant failures propagate from DensityMatrix validation.
DensityMatrix parse_state_json(const nlohmann::json& doc);

nlohmann::ordered_json state_to_json(const DensityMatrix& rho);

/// Reads and parses a state file; IoError on filesystem failure.
DensityMatrix load_state_file(const std::string& path);

/// Writes atomically (temp file + rename); IoError on failure.
void save_state_file(const DensityMatrix& rho, const std::string& path);

}  // namespace qeur
