#pragma once

#include <stdexcept>
#include <string>

namespace grape {

// Invalid graph mutation or malformed/inconsistent input data.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Input file could not be parsed; message names the offending line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Serialized document has an unsupported schema or is structurally broken.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration exceeded its configured budget. Raised instead of silently
// truncating results; callers can retry with a larger cap (GRAPE_MAX_SETS).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grape
