#include "matrix_file.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace optrig::cli {

namespace {

double finite_number(const nlohmann::json& v, const std::string& path, const std::string& where) {
  if (!v.is_number()) throw InputError(path, where + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputError(path, where + " is not finite");
  return d;
}

}  // namespace

ComplexMatrix parse_matrix_json(const nlohmann::json& doc, const std::string& path) {
  if (!doc.is_object()) throw InputError(path, "top-level value must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "entries" && key != "name") throw InputError(path, "unknown key \"" + key + "\"");
  }
  if (!doc.contains("n") || !doc.contains("entries")) throw InputError(path, "missing key \"n\" or \"entries\"");
  if (doc.contains("name") && !doc["name"].is_string()) throw InputError(path, "\"name\" must be a string");

  const auto& jn = doc["n"];
  if (!jn.is_number_integer() || jn.get<long long>() < 1) throw InputError(path, "\"n\" must be a positive integer");
  const auto n = jn.get<long long>();
  if (n > 4096) throw InputError(path, "\"n\" is unreasonably large");

  const auto& rows = doc["entries"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != n) {
    throw InputError(path, "\"entries\" must be an array of n rows");
  }
  CMatrix m(n, n);
  for (long long i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != n) {
      throw InputError(path, "row " + std::to_string(i) + " must have n entries");
    }
    for (long long j = 0; j < n; ++j) {
      const auto& e = row[static_cast<std::size_t>(j)];
      const std::string where = "entry [" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!e.is_array() || e.size() != 2) throw InputError(path, where + " must be a [re, im] pair");
      m(i, j) = Complex(finite_number(e[0], path, where + " re"), finite_number(e[1], path, where + " im"));
    }
  }
  return ComplexMatrix(std::move(m));
}

nlohmann::json matrix_to_json(const ComplexMatrix& m, const std::optional<std::string>& name) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    entries.push_back(std::move(row));
  }
  nlohmann::json doc = {{"n", m.dim()}, {"entries", std::move(entries)}};
  if (name) doc["name"] = *name;
  return doc;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string bytes = ss.str();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path, std::string("invalid JSON: ") + e.what());
  }
  ComplexMatrix m = parse_matrix_json(doc, path);
  std::optional<std::string> name;
  if (doc.contains("name")) name = doc["name"].get<std::string>();
  return MatrixFile{std::move(m), std::move(name), path, fnv1a64_hex(bytes)};
}

}  // namespace optrig::cli
