#pragma once

// Matrix JSON format:
//   {"n": <int>, "entries": [[[re, im], ... n], ... n]}
// row-major, re/im as JSON numbers. Doubles are written in shortest
// round-trip form, so write -> read reproduces the matrix bit for bit.

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"
#include "numrad/linalg.hpp"

namespace numrad {

inline nlohmann::json matrix_to_json(const Matrix& a) {
  const std::size_t n = a.size();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"n", n}, {"entries", std::move(rows)}};
}

/// Throws InvalidMatrix on any schema violation or non-finite entry.
inline Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidMatrix("matrix JSON must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw InvalidMatrix("matrix JSON requires integer field \"n\"");
  const auto n_signed = j.at("n").get<std::int64_t>();
  if (n_signed < 1) throw InvalidMatrix("\"n\" must be positive");
  const auto n = static_cast<std::size_t>(n_signed);
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw InvalidMatrix("matrix JSON requires array field \"entries\"");
  const auto& rows = j.at("entries");
  if (rows.size() != n) throw InvalidMatrix("\"entries\" must have n rows");

  std::vector<Complex> e;
  e.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw InvalidMatrix("each row must have n entries");
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw InvalidMatrix("each entry must be a [re, im] pair of numbers");
      e.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }
  return Matrix(n, std::move(e));
}

inline Matrix read_matrix(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidMatrix(std::string("malformed matrix JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

inline Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidMatrix("cannot open " + path);
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const Matrix& a) { out << matrix_to_json(a).dump() << '\n'; }

}  // namespace numrad
