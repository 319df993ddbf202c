#ifndef SNBOUND_ERRORS_HPP
#define SNBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace snbound {

// Thrown when an argument violates a documented precondition
// (non-finite entries, shape mismatch, non-unitary factor, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown by the file loaders; `path` is the JSON pointer of the
// offending field ("" for document-level problems).
struct ParseError : std::runtime_error {
  std::string path;

  ParseError(std::string json_path, const std::string& what)
      : std::runtime_error(json_path.empty() ? what : json_path + ": " + what),
        path(std::move(json_path)) {}
};

}  // namespace snbound

#endif
