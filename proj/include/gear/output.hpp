#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gear/matrix.hpp"
#include "gear/verify.hpp"

namespace gear {

using Json = nlohmann::ordered_json;

enum class Format { rational, decimal };

std::string to_string(Format f);
Format parse_format(const std::string& text);

// {"kind", "n", "format", "payload", "checks", "metadata"}; "n" and
// "checks" are omitted when absent.
struct OutputDocument {
  std::string kind;  // matrix | vector | spectrum | verify-report
  std::optional<int> n;
  Format format = Format::rational;
  Json payload;
  std::vector<CheckResult> checks;
  Json metadata = Json::object();
};

inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const OutputDocument& doc);

// Compact JSON on one line with a trailing newline. Floating-point values are
// written with 17 significant digits.
std::string serialize(const OutputDocument& doc);
std::string serialize(const Json& value);

// Rational payloads are row-major arrays of canonical "p/q" strings; decimal
// payloads are arrays of numbers.
Json matrix_payload(const RationalMatrix& m, Format f);
Json matrix_payload(const FloatMatrix& m);
Json vector_payload(const RationalVector& v, Format f);

// Inverse of matrix_payload. Accepts strings ("p", "p/q") or integral
// numbers; throws std::invalid_argument on anything else.
RationalMatrix parse_rational_matrix(const Json& payload);

}  // namespace gear
