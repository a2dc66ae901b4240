#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frontmesh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Structural failure inside the triangulation: duplicate point, constraint split, ...
class MeshError : public Error {
 public:
  using Error::Error;
};

}  // namespace frontmesh
