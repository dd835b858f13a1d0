#pragma once

// JSON encoding for exact numbers: integers become JSON numbers when they fit
// in 64 bits and decimal strings otherwise; both forms parse back.

#include "motfilt/int_matrix.hpp"
#include "motfilt/numbers.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <stdexcept>

namespace homalg {

inline nlohmann::json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

inline Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

inline nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw std::invalid_argument("matrix: expected nonempty rows");
    const std::size_t cols = j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

} // namespace homalg
