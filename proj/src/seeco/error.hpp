#pragma once

#include <stdexcept>
#include <string>

namespace seeco {

// Category carried through the C API as a status code.
enum class ErrorKind {
  kInvalidArgument = 1,
  kDomain = 2,
  kIo = 3,
  kParse = 4,
  kValidation = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Non-physical numeric input (negative sizes, zero cores, levels outside [0,1], ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::kDomain, what) {}
};

// A structural invariant of a workflow, platform, catalog or chromosome does not hold.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::kValidation, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::kParse, what) {}
};

}  // namespace seeco
