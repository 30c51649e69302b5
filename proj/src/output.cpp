#include "gear/output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gear/rational.hpp"

namespace gear {

std::string to_string(Format f) { return f == Format::rational ? "rational" : "decimal"; }

Format parse_format(const std::string& text) {
  if (text == "rational") return Format::rational;
  if (text == "decimal") return Format::decimal;
  throw std::invalid_argument("format must be 'rational' or 'decimal' (got '" + text + "')");
}

Json to_json(const OutputDocument& doc) {
  Json j;
  j["kind"] = doc.kind;
  if (doc.n) j["n"] = *doc.n;
  j["format"] = to_string(doc.format);
  j["payload"] = doc.payload;
  if (!doc.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : doc.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    j["checks"] = std::move(checks);
  }
  j["metadata"] = doc.metadata;
  return j;
}

namespace {

void write_number(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void write(std::string& out, const Json& v) {
  switch (v.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(out, value);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : v) {
        if (!first) out += ',';
        first = false;
        write(out, value);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      write_number(out, v.get<double>());
      break;
    default:
      out += v.dump();
  }
}

}  // namespace

std::string serialize(const Json& value) {
  std::string out;
  write(out, value);
  out += '\n';
  return out;
}

std::string serialize(const OutputDocument& doc) { return serialize(to_json(doc)); }

Json matrix_payload(const RationalMatrix& m, Format f) {
  if (f == Format::decimal) return matrix_payload(to_float(m));
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& q : m.row(r)) row.push_back(to_string(q));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_payload(const FloatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (double x : m.row(r)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_payload(const RationalVector& v, Format f) {
  Json out = Json::array();
  if (f == Format::decimal) {
    for (double x : to_float(std::span<const Rational>(v))) out.push_back(x);
  } else {
    for (const auto& q : v) out.push_back(to_string(q));
  }
  return out;
}

RationalMatrix parse_rational_matrix(const Json& payload) {
  if (!payload.is_array() || payload.empty())
    throw std::invalid_argument("matrix payload must be a nonempty array of rows");
  const std::size_t rows = payload.size();
  const std::size_t cols = payload.front().is_array() ? payload.front().size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = payload[r];
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("matrix payload rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& e = row[c];
      if (e.is_string())
        m(r, c) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer())
        m(r, c) = Rational(e.get<long>());
      else
        throw std::invalid_argument("matrix entries must be rational strings or integers");
    }
  }
  return m;
}

}  // namespace gear
