#pragma once

#include <string>

#include "json.hpp"
#include "linopt/matrix.hpp"

namespace linopt {

// Matrix wire format, shared by the CLI:
//   {"matrix": [[[re, im], ...], ...]}
// outer list rows, inner list columns, each entry a 2-element real array.
// Serialization uses shortest round-trip doubles, so emit -> parse is
// bit-identical.
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix load_matrix_file(const std::string& path);
void save_matrix_file(const ComplexMatrix& m, const std::string& path);

} // namespace linopt
