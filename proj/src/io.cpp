#include "spinops/io.hpp"

#include "spinops/linalg.hpp"

#include <json.hpp>

#include <cmath>

namespace spinops {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Matrix4c& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json real_matrix_to_json(const Matrix4r& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json vector_to_json(const Vector4c& v) {
  json out = json::array();
  for (int k = 0; k < 4; ++k) out.push_back(complex_to_json(v(k)));
  return out;
}

double finite_number(const json& node, const char* what) {
  if (!node.is_number()) throw ParseError(std::string("ParseError: expected a number in ") + what);
  const double value = node.get<double>();
  if (!std::isfinite(value))
    throw ParseError(std::string("ParseError: non-finite value in ") + what);
  return value;
}

Complex json_to_complex(const json& node, const char* what) {
  if (!node.is_array() || node.size() != 2)
    throw ParseError(std::string("ParseError: expected [re, im] in ") + what);
  return {finite_number(node[0], what), finite_number(node[1], what)};
}

Matrix4c json_to_matrix(const json& node, const char* what) {
  if (!node.is_array() || node.size() != 4)
    throw ParseError(std::string("ParseError: expected 4 rows in ") + what);
  Matrix4c m;
  for (int i = 0; i < 4; ++i) {
    const json& row = node[i];
    if (!row.is_array() || row.size() != 4)
      throw ParseError(std::string("ParseError: expected 4 entries per row in ") + what);
    for (int j = 0; j < 4; ++j) m(i, j) = json_to_complex(row[j], what);
  }
  return m;
}

Matrix4r json_to_real_matrix(const json& node, const char* what) {
  if (!node.is_array() || node.size() != 4)
    throw ParseError(std::string("ParseError: expected 4 rows in ") + what);
  Matrix4r m;
  for (int i = 0; i < 4; ++i) {
    const json& row = node[i];
    if (!row.is_array() || row.size() != 4)
      throw ParseError(std::string("ParseError: expected 4 entries per row in ") + what);
    for (int j = 0; j < 4; ++j) m(i, j) = finite_number(row[j], what);
  }
  return m;
}

Vector4c json_to_vector(const json& node, const char* what) {
  if (!node.is_array() || node.size() != 4)
    throw ParseError(std::string("ParseError: expected 4 entries in ") + what);
  Vector4c v;
  for (int k = 0; k < 4; ++k) v(k) = json_to_complex(node[k], what);
  return v;
}

json parse_document(const std::string& text, const char* expected_kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("ParseError: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("ParseError: missing \"kind\" field");
  if (doc["kind"].get<std::string>() != expected_kind)
    throw ParseError(std::string("ParseError: expected kind \"") + expected_kind + "\", got \"" +
                     doc["kind"].get<std::string>() + "\"");
  return doc;
}

const json& require(const json& doc, const char* field) {
  if (!doc.contains(field))
    throw ParseError(std::string("ParseError: missing \"") + field + "\" field");
  return doc.at(field);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string serialize_operator(const Matrix4c& f, const std::string& note) {
  json doc;
  doc["kind"] = "operator";
  doc["matrix"] = matrix_to_json(f);
  if (!note.empty()) doc["note"] = note;
  return dump(doc);
}

std::string serialize_decomposition(const OperatorDecomposition& dec) {
  json doc;
  doc["kind"] = "decomposition";
  doc["u"] = complex_to_json(dec.u);
  doc["v"] = complex_to_json(dec.v);
  doc["u_cov"] = vector_to_json(dec.u_cov);
  doc["v_cov"] = vector_to_json(dec.v_cov);
  doc["w"] = matrix_to_json(dec.w);
  return dump(doc);
}

std::string serialize_rhs(const std::array<Matrix4c, 4>& ops) {
  json doc;
  doc["kind"] = "rhs";
  json list = json::array();
  for (const auto& op : ops) list.push_back(matrix_to_json(op));
  doc["operators"] = list;
  return dump(doc);
}

std::string serialize_frame_change(const FrameChange& change) {
  json doc;
  doc["kind"] = "frame-change";
  doc["spatial"] = real_matrix_to_json(change.spatial);
  doc["spinor"] = matrix_to_json(change.spinor);
  return dump(doc);
}

Matrix4c parse_operator(const std::string& text) {
  const json doc = parse_document(text, "operator");
  return json_to_matrix(require(doc, "matrix"), "matrix");
}

OperatorDecomposition parse_decomposition(const std::string& text) {
  const json doc = parse_document(text, "decomposition");
  OperatorDecomposition dec;
  dec.u = json_to_complex(require(doc, "u"), "u");
  dec.v = json_to_complex(require(doc, "v"), "v");
  dec.u_cov = json_to_vector(require(doc, "u_cov"), "u_cov");
  dec.v_cov = json_to_vector(require(doc, "v_cov"), "v_cov");
  dec.w = json_to_matrix(require(doc, "w"), "w");
  if (max_abs(dec.w + dec.w.transpose()) > 1e-12)
    throw ParseError("ParseError: w field is not antisymmetric");
  return dec;
}

std::array<Matrix4c, 4> parse_rhs(const std::string& text) {
  const json doc = parse_document(text, "rhs");
  const json& list = require(doc, "operators");
  if (!list.is_array() || list.size() != 4)
    throw ParseError("ParseError: expected 4 operators in rhs");
  std::array<Matrix4c, 4> ops;
  for (int m = 0; m < 4; ++m) ops[m] = json_to_matrix(list[m], "operators");
  return ops;
}

FrameChange parse_frame_change(const std::string& text) {
  const json doc = parse_document(text, "frame-change");
  FrameChange change;
  change.spatial = json_to_real_matrix(require(doc, "spatial"), "spatial");
  change.spinor = json_to_matrix(require(doc, "spinor"), "spinor");
  return change;
}

}  // namespace spinops
