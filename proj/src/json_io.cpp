#include "linopt/json_io.hpp"

#include <fstream>

namespace linopt {

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::ordered_json{{"matrix", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array()) {
        raise(ErrorCode::ParseError, "expected an object with a \"matrix\" array");
    }
    const auto& rows = j["matrix"];
    std::vector<std::vector<cplx>> data;
    data.reserve(rows.size());
    for (const auto& row : rows) {
        if (!row.is_array()) raise(ErrorCode::ParseError, "matrix rows must be arrays");
        std::vector<cplx> out_row;
        out_row.reserve(row.size());
        for (const auto& entry : row) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                raise(ErrorCode::ParseError, "matrix entries must be [re, im] number pairs");
            }
            out_row.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
        data.push_back(std::move(out_row));
    }
    return ComplexMatrix::from_rows(data);
}

ComplexMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ParseError, "cannot open matrix file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::ParseError, "invalid JSON in '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

void save_matrix_file(const ComplexMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::ParseError, "cannot write matrix file '" + path + "'");
    out << matrix_to_json(m).dump(2) << '\n';
}

} // namespace linopt
