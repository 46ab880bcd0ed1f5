#pragma once

// MatrixFile: {"n": N, "entries": [[[re, im], ...], ...], "name": "..."}
// "name" is optional; no other keys are accepted.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "optrig/linalg.hpp"

namespace optrig::cli {

/// Thrown for unreadable or malformed matrix files (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& path, const std::string& cause)
      : std::runtime_error(path + ": " + cause), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct MatrixFile {
  ComplexMatrix matrix;
  std::optional<std::string> name;
  std::string path;
  std::string checksum;  // "fnv1a64:<16 hex digits>" of the raw file bytes
};

ComplexMatrix parse_matrix_json(const nlohmann::json& doc, const std::string& path = "<memory>");
nlohmann::json matrix_to_json(const ComplexMatrix& m, const std::optional<std::string>& name = std::nullopt);
MatrixFile read_matrix_file(const std::string& path);

std::string fnv1a64_hex(const std::string& bytes);

}  // namespace optrig::cli
