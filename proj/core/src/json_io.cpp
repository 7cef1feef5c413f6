#include "zass/json_io.hpp"

#include <fstream>
#include <cmath>
#include <limits>

namespace zass {

namespace {

std::vector<double> read_plane(const Json& doc, const char* field, std::size_t dim) {
  const auto& rows = doc.at(field);
  if (!rows.is_array() || rows.size() != dim) {
    throw ParseError(std::string("matrix field '") + field + "': expected " + std::to_string(dim) + " rows");
  }
  std::vector<double> out;
  out.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != dim) {
      throw ParseError(std::string("matrix field '") + field + "' row " + std::to_string(i) + ": expected " +
                       std::to_string(dim) + " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      if (!row[j].is_number()) {
        throw ParseError(std::string("matrix field '") + field + "' entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") is not a number");
      }
      out.push_back(row[j].get<double>());
    }
  }
  return out;
}

Json metadata_to_json(const Metadata& meta) {
  Json obj = Json::object();
  for (const auto& [k, v] : meta) obj[k] = v;
  return obj;
}

// Infinite residuals (failed-with-error checks) are not representable in JSON.
Json residual_to_json(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

CMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("matrix field 'dim' missing or not an integer");
  }
  const auto dim = doc["dim"].get<long long>();
  if (dim <= 0 || dim > static_cast<long long>(kMaxDim)) {
    throw ParseError("matrix field 'dim' = " + std::to_string(dim) + " outside [1, " + std::to_string(kMaxDim) + "]");
  }
  const auto n = static_cast<std::size_t>(dim);
  if (!doc.contains("re")) throw ParseError("matrix field 're' missing");
  const std::vector<double> re = read_plane(doc, "re", n);
  std::vector<double> im(n * n, 0.0);
  if (doc.contains("im")) im = read_plane(doc, "im", n);

  std::vector<Scalar> entries(n * n);
  for (std::size_t k = 0; k < n * n; ++k) entries[k] = {re[k], im[k]};
  CMatrix m(n, std::move(entries));
  if (!m.all_finite()) throw ParseError("matrix entries must be finite");
  return m;
}

Json matrix_to_json(const CMatrix& m) {
  const std::size_t n = m.dim();
  Json re = Json::array();
  Json im = Json::array();
  bool any_imag = false;
  for (std::size_t i = 0; i < n; ++i) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
      any_imag = any_imag || m(i, j).imag() != 0.0;
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  Json doc{{"dim", n}, {"re", std::move(re)}};
  if (any_imag) doc["im"] = std::move(im);
  return doc;
}

CMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("matrix file '" + path.string() + "': " + e.what());
  }
  return matrix_from_json(doc);
}

void save_matrix(const CMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write matrix file '" + path.string() + "'");
  out << matrix_to_json(m).dump(2) << '\n';
}

Json scalar_to_json(Scalar z) { return {{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

Json result_to_json(const CheckResult& r) {
  return {{"name", r.name},
          {"residual", residual_to_json(r.residual)},
          {"tolerance", r.tolerance},
          {"passed", r.passed},
          {"metadata", metadata_to_json(r.metadata)}};
}

Json report_to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.results) checks.push_back(result_to_json(c));
  Json doc{{"pair", r.pair_name}, {"checks", std::move(checks)}, {"all_passed", r.all_passed}};
  if (!r.metadata.empty()) doc["metadata"] = metadata_to_json(r.metadata);
  return doc;
}

}  // namespace zass
