#pragma once

#include <string>

#include "json.hpp"

#include "kspec/matkernel.hpp"

namespace kspec {

/// {"n": int, "rows": [[[re, im], ...], ...]}
nlohmann::json matrix_to_json(const ComplexMatrix& A);
ComplexMatrix matrix_from_json(const nlohmann::json& doc);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& A);

}  // namespace kspec
