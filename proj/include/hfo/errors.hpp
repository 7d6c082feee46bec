#pragma once

#include <stdexcept>
#include <string>

namespace hfo {

// Malformed input: bad JSON, unknown names, schema violations.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant failed to hold (d^2 != 0, unbounded tensor
// factors, failed validation of a constructed structure, ...).
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hfo
