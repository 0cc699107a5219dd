#include "jacobi2d/coefficients_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "jacobi2d/errors.hpp"

namespace jacobi2d {

using nlohmann::json;

namespace {

Complex decode_complex(const json& v, bool allow_real) {
  if (allow_real && v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw Error(ErrorCode::Parse, "complex entry must be a [re, im] pair of numbers, got " +
                                      v.dump());
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<std::vector<Complex>> decode_array(const json& doc, const char* key, bool real) {
  if (!doc.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  const json& rows = doc.at(key);
  if (!rows.is_array()) throw Error(ErrorCode::Parse, std::string(key) + " must be an array of rows");
  std::vector<std::vector<Complex>> out;
  out.reserve(rows.size());
  for (const json& row : rows) {
    if (!row.is_array()) throw Error(ErrorCode::Parse, std::string(key) + " rows must be arrays");
    auto& dst = out.emplace_back();
    dst.reserve(row.size());
    for (const json& v : row) dst.push_back(decode_complex(v, real));
  }
  return out;
}

long decode_period(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
    throw Error(ErrorCode::Parse, std::string("field \"") + key + "\" must be an integer");
  }
  return doc.at(key).get<long>();
}

json encode_cell(std::span<const Complex> cell, int p1, int p2) {
  json rows = json::array();
  for (int n = 0; n < p1; ++n) {
    json row = json::array();
    for (int m = 0; m < p2; ++m) {
      const Complex z = cell[static_cast<std::size_t>(n) * p2 + m];
      row.push_back(json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

RawCoefficients raw_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "coefficient document must be a JSON object");
  RawCoefficients raw;
  raw.p1 = decode_period(doc, "p1");
  raw.p2 = decode_period(doc, "p2");
  raw.a0 = decode_array(doc, "a0", false);
  raw.a1 = decode_array(doc, "a1", false);
  raw.b0 = decode_array(doc, "b0", false);
  raw.b1 = decode_array(doc, "b1", true);
  return raw;
}

json to_json(const CoefficientField& field) {
  const int p1 = field.p1();
  const int p2 = field.p2();
  json b1 = json::array();
  for (int n = 0; n < p1; ++n) {
    json row = json::array();
    for (int m = 0; m < p2; ++m) row.push_back(field.b1_cell()[static_cast<std::size_t>(n) * p2 + m]);
    b1.push_back(std::move(row));
  }
  json doc;
  doc["p1"] = p1;
  doc["p2"] = p2;
  doc["a0"] = encode_cell(field.a0_cell(), p1, p2);
  doc["a1"] = encode_cell(field.a1_cell(), p1, p2);
  doc["b0"] = encode_cell(field.b0_cell(), p1, p2);
  doc["b1"] = std::move(b1);
  return doc;
}

CoefficientField field_from_json(const json& doc) { return validate(raw_from_json(doc)); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "failed reading " + path.string());
  return buf.str();
}

void write_output(const std::filesystem::path& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path.string());
}

}  // namespace jacobi2d
