#pragma once

// JSON interchange: the matrix file format and check-report serialization.
//
//   matrix: {"dim": n, "re": [[...n x n...]], "im": [[...]]}   ("im" optional)
//   report: {"pair": ..., "checks": [{name, residual, tolerance, passed,
//            metadata}], "all_passed": ...}

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "zass/matrix.hpp"
#include "zass/verify.hpp"

namespace zass {

// Insertion-ordered so serialized field order is fixed.
using Json = nlohmann::ordered_json;

// Malformed matrix documents; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

CMatrix matrix_from_json(const Json& doc);
Json matrix_to_json(const CMatrix& m);

CMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const CMatrix& m, const std::filesystem::path& path);

Json scalar_to_json(Scalar z);
Json result_to_json(const CheckResult& r);
Json report_to_json(const CheckReport& r);

}  // namespace zass
